#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "schubk/ring.hpp"

namespace schubk::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kInvalidInput = 2 };

struct Hooks {
  // Lets a test harness alter a backend's class before the cross-check compares it.
  std::function<void(std::string_view backend, LaurentPoly& value)> tamper;
};

struct CheckReport {
  bool agree = true;
  std::size_t backends = 0;
  std::string message;
};

// Compares classes bit-exactly against the first entry.
CheckReport cross_check(const std::vector<std::pair<std::string, LaurentPoly>>& classes);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});
int run(int argc, char** argv);

}  // namespace schubk::cli
