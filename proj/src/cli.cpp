#include "schubk/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubk/json_io.hpp"
#include "schubk/restriction.hpp"
#include "schubk/tableaux.hpp"

namespace schubk::cli {

using nlohmann::json;

CheckReport cross_check(const std::vector<std::pair<std::string, LaurentPoly>>& classes) {
  CheckReport report;
  report.backends = classes.size();
  if (classes.empty()) return report;
  const auto& [ref_name, ref] = classes.front();
  for (std::size_t k = 1; k < classes.size(); ++k) {
    const auto& [name, value] = classes[k];
    if (value == ref) continue;
    report.agree = false;
    // First exponent (in sorted order) where the coefficients differ.
    std::vector<LaurentPoly::Exponent> keys;
    for (const auto& [e, c] : ref.terms()) keys.push_back(e);
    for (const auto& [e, c] : value.terms()) keys.push_back(e);
    std::sort(keys.begin(), keys.end());
    for (const auto& e : keys) {
      BigInt a = ref.coefficient(e);
      BigInt b = value.coefficient(e);
      if (a != b) {
        report.message = "mismatch: " + name + " differs from " + ref_name + " at e^{" + Weight(e).to_string() +
                         "}: " + b.get_str() + " vs " + a.get_str();
        return report;
      }
    }
    report.message = "mismatch: " + name + " differs from " + ref_name;
    return report;
  }
  report.message = std::to_string(classes.size()) + " backends agree";
  return report;
}

namespace {

struct Options {
  std::string type;
  int rank = 0;
  std::optional<int> d;
  std::optional<std::string> w, v, lambda, mu;
  std::string backend = "eyd";
  std::string emit = "class";
  std::string format = "text";
  int trunc = 3;
  bool count_only = false;
  bool check = false;
  bool reduced_only = false;
  int cap = kDefaultHeckeCap;
  int threads = 1;
};

std::string latex_exponent(const Weight& r) {
  // Factor (e^{-r} - 1), written the way the positive root r suggests.
  int nonzero = 0;
  bool all_nonneg = true;
  for (int c : r.coords) {
    nonzero += c != 0;
    all_nonneg = all_nonneg && c >= 0;
  }
  // Positive coordinates first, as in e^{eps_7-eps_1}.
  auto render = [](const Weight& x) {
    std::string out;
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < x.rank(); ++i) {
        int c = x.coords[i];
        if (c == 0 || (pass == 0) != (c > 0)) continue;
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        if (std::abs(c) != 1) out += std::to_string(std::abs(c));
        out += "\\epsilon_" + std::to_string(i + 1);
      }
    }
    return out;
  };
  if (all_nonneg && nonzero > 1) return "-(" + render(r) + ")";
  if (all_nonneg) return "-" + render(r);
  return render(-r);
}

std::string factored_latex(const FactoredClass& f) {
  if (f.terms.empty()) return "0";
  std::ostringstream out;
  for (std::size_t t = 0; t < f.terms.size(); ++t) {
    if (f.sign < 0) out << (t == 0 ? "-" : " - ");
    else if (t > 0) out << " + ";
    if (f.terms[t].empty()) out << "1";
    for (const Weight& r : f.terms[t]) out << "(e^{" << latex_exponent(r) << "}-1)";
  }
  return out.str();
}

std::string diagram_text(const BoxSet& c) {
  std::ostringstream out;
  for (std::size_t k = 0; k < c.boxes().size(); ++k) {
    if (k) out << ' ';
    out << '(' << c.boxes()[k].row << ',' << c.boxes()[k].col << ')';
  }
  return out.str();
}

std::string tableau_text(const SetValuedTableau& t) {
  std::ostringstream out;
  int row = 0;
  for (std::size_t k = 0; k < t.boxes().size(); ++k) {
    if (t.boxes()[k].row != row) {
      if (row) out << " / ";
      row = t.boxes()[k].row;
    } else {
      out << ' ';
    }
    out << '{' << format_int_list(t.entries()[k]) << '}';
  }
  return out.str();
}

int execute(const Options& o, std::ostream& out, const Hooks& hooks) {
  Kind kind = parse_kind(o.type);
  Grassmannian g = Grassmannian::make(kind, o.rank, kind == Kind::A ? o.d : std::optional<int>{});
  if (kind != Kind::A && o.d && *o.d != o.rank) throw InputError("--d is only meaningful in type A");
  Backend backend = parse_backend(o.backend);
  if (o.format != "text" && o.format != "json" && o.format != "latex") {
    throw InputError("unknown format '" + o.format + "'");
  }
  if (o.threads < 1) throw InputError("--threads must be positive");
  if (o.trunc < 0) throw InputError("--trunc must be nonnegative");

  bool windows = o.w || o.v;
  bool shapes = o.lambda || o.mu;
  if (windows == shapes) throw InputError("give either --w/--v or --lambda/--mu");
  std::optional<WeylElement> w, v;
  if (windows) {
    if (!o.w || !o.v) throw InputError("both --w and --v are required");
    w = WeylElement::parse(g.rs, *o.w);
    v = WeylElement::parse(g.rs, *o.v);
  } else {
    if (!o.lambda || !o.mu) throw InputError("both --lambda and --mu are required");
    auto to_shape = [&](const std::string& text) {
      if (kind == Kind::A) return Shape::ordinary(Partition::parse(text));
      return Shape::shifted(StrictPartition::parse(text), g.geometry());
    };
    w = g.element(to_shape(*o.lambda));
    v = g.element(to_shape(*o.mu));
  }
  Shape lambda = g.shape(*w);
  Shape mu = g.shape(*v);
  bool on_variety = contains(lambda, mu);

  json doc = {{"type", std::string(1, kind_letter(kind))}, {"rank", o.rank}, {"d", g.d},
              {"w", w->window()}, {"v", v->window()}, {"lambda", lambda.rows}, {"mu", mu.rows},
              {"status", on_variety ? "on-variety" : "off-variety"}};
  auto finish = [&](const std::string& text) {
    if (o.format == "json") out << doc.dump() << '\n';
    else out << text << '\n';
    return kOk;
  };

  PullbackOptions popts;
  popts.backend = backend;
  popts.cap = o.cap;
  popts.threads = o.threads;

  if (o.check) {
    std::vector<std::pair<std::string, LaurentPoly>> classes;
    for (Backend b : {Backend::eyd, Backend::svt, Backend::hecke}) {
      PullbackOptions p = popts;
      p.backend = b;
      classes.emplace_back(backend_name(b), pullback(g, *w, *v, p).value);
    }
    if (kind == Kind::B) classes.emplace_back("via-D", pullback_b_via_d(g, *w, *v).value);
    if (hooks.tamper) {
      for (auto& [name, value] : classes) hooks.tamper(name, value);
    }
    CheckReport report = cross_check(classes);
    json names = json::array();
    for (const auto& entry : classes) names.push_back(entry.first);
    doc["check"] = {{"agree", report.agree}, {"backends", names}, {"message", report.message}};
    finish(report.message);
    return report.agree ? kOk : kMismatch;
  }

  if (o.emit == "class") {
    KClass k = pullback(g, *w, *v, popts);
    doc["class"] = class_to_json(k.value);
    if (o.format == "latex") {
      return finish(kind == Kind::B || backend != Backend::eyd ? k.value.to_string()
                                                               : factored_latex(pullback_factored(g, *w, *v)));
    }
    return finish(k.value.to_string());
  }
  if (o.emit == "hilbert" || o.emit == "mult" || o.emit == "hilbert-poly") {
    HilbertData h = hilbert_data(g, *w, *v, backend);
    doc["hilbert"] = hilbert_to_json(h);
    doc["multiplicity"] = multiplicity(h);
    std::string note = kind == Kind::B ? "\n(type B: computed through the D_" + std::to_string(o.rank + 1) +
                                             " identification)"
                                       : "";
    if (o.emit == "mult") return finish(std::to_string(multiplicity(h)));
    if (o.emit == "hilbert") {
      std::ostringstream text;
      text << "d_w=" << h.d_w << "\nm=[" << format_int_list(std::vector<int>(h.m.begin(), h.m.end()))
           << "]\nmult=" << multiplicity(h) << "\nH(t)=" << hilbert_series_string(h) << note;
      return finish(text.str());
    }
    std::string poly = polynomial_string(hilbert_polynomial(h));
    doc["hilbert_polynomial"] = poly;
    doc["hilbert_series"] = hilbert_series_string(h);
    return finish("h(n)=" + poly + "\nH(t)=" + hilbert_series_string(h) + note);
  }
  if (o.emit == "diagrams") {
    if (!on_variety) throw InputError("lambda is not contained in mu");
    std::vector<BoxSet> diagrams = enumerate_eyd(lambda, mu, o.reduced_only);
    doc["count"] = diagrams.size();
    if (o.count_only) return finish(std::to_string(diagrams.size()));
    json list = json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < diagrams.size(); ++k) {
      list.push_back(diagram_to_json(diagrams[k]));
      if (o.format == "latex") text << to_tikz(diagrams[k]);
      else text << (k ? "\n" : "") << diagram_text(diagrams[k]);
    }
    doc["diagrams"] = list;
    return finish(text.str());
  }
  if (o.emit == "tableaux") {
    if (!on_variety) throw InputError("lambda is not contained in mu");
    std::vector<SetValuedTableau> tableaux = enumerate_svt(lambda, mu, o.reduced_only);
    doc["count"] = tableaux.size();
    if (o.count_only) return finish(std::to_string(tableaux.size()));
    json list = json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < tableaux.size(); ++k) {
      list.push_back(tableau_to_json(tableaux[k]));
      text << (k ? "\n" : "") << tableau_text(tableaux[k]);
    }
    doc["tableaux"] = list;
    return finish(text.str());
  }
  if (o.emit == "character") {
    GradedSeries s = graded_character(g, *w, *v, o.trunc);
    json dims = json::array();
    json slices = json::array();
    std::ostringstream text;
    for (int i = 0; i <= s.truncation; ++i) {
      dims.push_back(s.dims[i].get_str());
      slices.push_back(class_to_json(s.slices[i]));
      text << (i ? "\n" : "") << "degree " << i << ": dim=" << s.dims[i].get_str()
           << " char=" << s.slices[i].to_string();
    }
    doc["character"] = {{"truncation", s.truncation}, {"dims", dims}, {"slices", slices}};
    return finish(text.str());
  }
  throw InputError("unknown --emit value '" + o.emit + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Restrictions of Schubert structure sheaves to torus fixed points"};
  Options o;
  app.add_option("--type", o.type, "root system type")->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
  app.add_option("--n,--rank", o.rank, "rank n (type A: ambient S_n)")->required();
  app.add_option("--d", o.d, "type A parabolic index");
  app.add_option("--w", o.w, "window of w, e.g. 1,3,5,2,4,6,7");
  app.add_option("--v", o.v, "window of v (the fixed point)");
  app.add_option("--lambda", o.lambda, "shape of w");
  app.add_option("--mu", o.mu, "shape of v");
  app.add_option("--backend", o.backend, "eyd | svt | hecke")->check(CLI::IsMember({"eyd", "svt", "hecke"}));
  app.add_option("--emit", o.emit, "class | hilbert | hilbert-poly | mult | diagrams | tableaux | character")
      ->check(CLI::IsMember({"class", "hilbert", "hilbert-poly", "mult", "diagrams", "tableaux", "character"}));
  app.add_option("--format", o.format, "text | json | latex")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--trunc", o.trunc, "truncation degree for --emit character");
  app.add_flag("--count-only", o.count_only, "print only the number of diagrams or tableaux");
  app.add_flag("--check", o.check, "compare all backends");
  app.add_flag("--reduced-only", o.reduced_only, "restrict diagrams/tableaux to the reduced ones");
  app.add_option("--cap", o.cap, "maximum word length for the Hecke backend");
  app.add_option("--threads", o.threads, "worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  try {
    return execute(o, out, hooks);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace schubk::cli
