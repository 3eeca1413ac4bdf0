#include "schubk/cli.hpp"

int main(int argc, char** argv) { return schubk::cli::run(argc, argv); }
