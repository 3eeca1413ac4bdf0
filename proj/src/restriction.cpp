#include "schubk/restriction.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "schubk/tableaux.hpp"

namespace schubk {

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::eyd: return "eyd";
    case Backend::svt: return "svt";
    case Backend::hecke: return "hecke";
  }
  return "?";
}

Backend parse_backend(std::string_view text) {
  if (text == "eyd") return Backend::eyd;
  if (text == "svt") return Backend::svt;
  if (text == "hecke") return Backend::hecke;
  throw InputError("unknown backend '" + std::string(text) + "'");
}

Grassmannian Grassmannian::make(Kind kind, int rank, std::optional<int> d) {
  RootSystem rs = RootSystem::make(kind, rank);
  if (kind == Kind::A) {
    if (!d || *d < 1 || *d > rank - 1) throw InputError("type A needs 1 <= d <= n-1");
    return {rs, *d};
  }
  if (d && *d != rank) throw InputError("types B/C/D use the maximal parabolic P_n (d = n)");
  return {rs, rank};
}

int Grassmannian::dimension() const {
  int n = rs.rank;
  switch (rs.kind) {
    case Kind::A: return d * (n - d);
    case Kind::B:
    case Kind::C: return n * (n + 1) / 2;
    case Kind::D: return n * (n - 1) / 2;
  }
  return 0;
}

void Grassmannian::check_rep(const WeylElement& w) const {
  if (!(w.root_system() == rs)) throw InputError("Weyl element has the wrong type or rank");
  if (!is_minimal_rep(w, d)) throw InputError(w.to_string() + " is not a minimal coset representative");
}

Shape Grassmannian::shape(const WeylElement& w) const {
  check_rep(w);
  return shape_of(w, d);
}

WeylElement Grassmannian::element(const Shape& s) const { return element_of(s, rs, d); }

std::vector<Weight> tangent_weights(const Grassmannian& g, const WeylElement& v) {
  g.check_rep(v);
  std::vector<Weight> out;
  int n = g.rs.rank;
  for (const Weight& beta : positive_roots(g.rs)) {
    bool levi = false;
    if (g.rs.kind == Kind::A) {
      int i = 0;
      int j = 0;
      for (int k = 0; k < n; ++k) {
        if (beta.coords[k] == 1) i = k + 1;
        if (beta.coords[k] == -1) j = k + 1;
      }
      levi = (i <= g.d) == (j <= g.d);
    } else {
      int plus = 0;
      int minus = 0;
      for (int c : beta.coords) {
        plus += c > 0;
        minus += c < 0;
      }
      levi = plus == 1 && minus == 1;
    }
    if (!levi) out.push_back(apply(v, -beta));
  }
  return out;
}

std::vector<Weight> r_values(const std::vector<int>& word, RootSystem rs) {
  if (!is_reduced(word, rs)) throw InputError("r_values needs a reduced word");
  std::vector<Weight> simple = simple_roots(rs);
  std::vector<Weight> out;
  WeylElement prefix = WeylElement::identity(rs);
  for (int k : word) {
    Weight r = apply(prefix, simple[k - 1]);
    if (!r.is_positive()) throw std::logic_error("r(c) is not a positive root");
    out.push_back(std::move(r));
    prefix = right_simple(prefix, k);
  }
  return out;
}

namespace {

ReflectionTableau tableau_of(const Grassmannian& g, const WeylElement& v) {
  return reflection_tableau(g.shape(v), g.rs, g.d);
}

void check_in_tangent_space(const Grassmannian& g, const WeylElement& v, const std::vector<Weight>& roots) {
  std::vector<Weight> tangent = tangent_weights(g, v);
  std::sort(tangent.begin(), tangent.end());
  for (const Weight& r : roots) {
    if (!std::binary_search(tangent.begin(), tangent.end(), r)) {
      throw std::logic_error("r(c) = " + r.to_string() + " is not a tangent weight");
    }
  }
}

LaurentPoly product_of_factors(int rank, const std::vector<const Weight*>& roots) {
  LaurentPoly term = LaurentPoly::constant(rank, 1);
  for (const Weight* r : roots) term = term.times_exp_minus_one(-*r);
  return term;
}

// Sums prod (e^{-r} - 1) over a list of root selections, optionally in parallel chunks.
LaurentPoly sum_products(int rank, const std::vector<std::vector<const Weight*>>& terms, int threads) {
  auto chunk = [&](std::size_t begin, std::size_t end) {
    LaurentPoly acc(rank);
    for (std::size_t t = begin; t < end; ++t) acc += product_of_factors(rank, terms[t]);
    return acc;
  };
  std::size_t count = terms.size();
  if (threads <= 1 || count < 2) return chunk(0, count);
  std::size_t parts = std::min<std::size_t>(threads, count);
  std::vector<std::future<LaurentPoly>> futures;
  for (std::size_t p = 1; p < parts; ++p) {
    futures.push_back(std::async(std::launch::async, chunk, p * count / parts, (p + 1) * count / parts));
  }
  LaurentPoly total = chunk(0, count / parts);
  for (auto& f : futures) total += f.get();
  return total;
}

int full_window_sign_index(int value, int n) { return value <= n ? value : -(2 * n + 1 - value); }

}  // namespace

std::vector<Weight> box_roots(const Grassmannian& g, const WeylElement& v) {
  ReflectionTableau t = tableau_of(g, v);
  std::vector<Weight> r = r_values(t.word, g.rs);
  std::vector<Weight> out;
  for (const Box& b : t.boxes) out.push_back(r[t.reading_position(b)]);
  return out;
}

Weight box_root_closed_form(const Grassmannian& g, const WeylElement& v, Box b) {
  int n = g.rs.rank;
  std::vector<int> full = v.full_window();
  auto eps = [&](int pos) {
    int label = g.rs.kind == Kind::A ? full[pos - 1] : full_window_sign_index(full[pos - 1], n);
    return Weight::unit(n, std::abs(label), label > 0 ? 1 : -1);
  };
  int i = b.row;
  int j = b.col;
  switch (g.rs.kind) {
    case Kind::A: return eps(g.d + j) - eps(g.d + 1 - i);
    case Kind::C: return eps(n + i) + eps(n + j);
    case Kind::B: return i == j ? eps(n + i) : eps(n + i) + eps(n + j);
    case Kind::D: return eps(n + i) + eps(n + j + 1);
  }
  return Weight::zero(n);
}

KClass pullback(const Grassmannian& g, const WeylElement& w, const WeylElement& v, const PullbackOptions& options) {
  Shape lambda = g.shape(w);
  Shape mu = g.shape(v);
  int rank = g.rs.rank;
  KClass out{g, contains(lambda, mu), LaurentPoly(rank)};
  if (!out.on_variety) return out;

  ReflectionTableau t = tableau_of(g, v);
  std::vector<std::vector<const Weight*>> terms;
  std::vector<Weight> roots;
  if (options.backend == Backend::hecke) {
    std::vector<int> word = options.word.value_or(t.word);
    if (!is_reduced(word, g.rs) || !(demazure_fold(word, g.rs) == v)) {
      throw InputError("word is not a reduced word for v");
    }
    roots = r_values(word, g.rs);
    for (const HeckeSubsequence& s : hecke_subsequences(w, word, options.cap, options.threads)) {
      std::vector<const Weight*> term;
      for (int c : s.indices) term.push_back(&roots[c]);
      terms.push_back(std::move(term));
    }
  } else {
    roots = box_roots(g, v);
    BoxIndex index(mu);
    if (options.backend == Backend::eyd) {
      for (const BoxMask& m : enumerate_eyd_masks(index, lambda, false)) {
        std::vector<const Weight*> term;
        for (int k = 0; k < index.size(); ++k) {
          if ((m[k >> 6] >> (k & 63)) & 1u) term.push_back(&roots[k]);
        }
        terms.push_back(std::move(term));
      }
    } else {
      for (const SetValuedTableau& tab : enumerate_svt(lambda, mu)) {
        std::vector<const Weight*> term;
        for (std::size_t k = 0; k < tab.boxes().size(); ++k) {
          const Box& b = tab.boxes()[k];
          for (int x : tab.entries()[k]) term.push_back(&roots[index.index(x, x + b.col - b.row)]);
        }
        terms.push_back(std::move(term));
      }
    }
  }
  check_in_tangent_space(g, v, roots);
  out.value = sum_products(rank, terms, options.threads);
  if (lambda.size() % 2 == 1) out.value = -out.value;
  return out;
}

KClass pullback_b_via_d(const Grassmannian& g, const WeylElement& w, const WeylElement& v) {
  if (g.rs.kind != Kind::B) throw InputError("pullback_b_via_d expects type B");
  g.check_rep(w);
  g.check_rep(v);
  Grassmannian gd = Grassmannian::make(Kind::D, g.rs.rank + 1);
  KClass in_d = pullback(gd, db_identify(w), db_identify(v));
  return {g, in_d.on_variety, specialize_zero(in_d.value, g.rs.rank + 1)};
}

FactoredClass pullback_factored(const Grassmannian& g, const WeylElement& w, const WeylElement& v) {
  Shape lambda = g.shape(w);
  Shape mu = g.shape(v);
  FactoredClass out;
  out.rank = g.rs.rank;
  out.sign = lambda.size() % 2 == 1 ? -1 : 1;
  if (!contains(lambda, mu)) return out;
  std::vector<Weight> roots = box_roots(g, v);
  BoxIndex index(mu);
  for (const BoxSet& c : enumerate_eyd(lambda, mu)) {
    std::vector<Weight> term;
    for (const Box& b : c.boxes()) term.push_back(roots[index.index(b.row, b.col)]);
    out.terms.push_back(std::move(term));
  }
  return out;
}

LaurentPoly expand(const FactoredClass& f) {
  LaurentPoly total(f.rank);
  for (const auto& term : f.terms) {
    std::vector<const Weight*> ptrs;
    for (const Weight& r : term) ptrs.push_back(&r);
    total += product_of_factors(f.rank, ptrs);
  }
  if (f.sign < 0) total = -total;
  return total;
}

XiVector xi_vector(const Grassmannian& g, const WeylElement& v) {
  if (!g.cominuscule()) throw InputError("type B_n/P_n is not cominuscule; no grading vector exists");
  g.check_rep(v);
  int n = g.rs.rank;
  XiVector base(n);
  for (int i = 0; i < n; ++i) {
    base[i] = g.rs.kind == Kind::A ? Rational(i < g.d ? 1 : 0) : Rational(1, 2);
  }
  XiVector xi(n);
  for (int i = 0; i < n; ++i) {
    int x = v(i + 1);
    xi[std::abs(x) - 1] = x < 0 ? -base[i] : base[i];
  }
  for (const Weight& alpha : tangent_weights(g, v)) {
    if (xi_degree(alpha.coords, xi) != -1) throw std::logic_error("tangent weight does not pair to -1");
  }
  return xi;
}

HilbertData hilbert_data(const Grassmannian& g, const WeylElement& w, const WeylElement& v, Backend source) {
  if (g.rs.kind == Kind::B) {
    g.check_rep(w);
    g.check_rep(v);
    return hilbert_data(Grassmannian::make(Kind::D, g.rs.rank + 1), db_identify(w), db_identify(v), source);
  }
  Shape lambda = g.shape(w);
  Shape mu = g.shape(v);
  HilbertData h;
  h.d_w = g.dimension() - lambda.size();
  if (!contains(lambda, mu)) return h;
  std::vector<int> excesses;
  switch (source) {
    case Backend::eyd:
      for (const BoxSet& c : enumerate_eyd(lambda, mu)) excesses.push_back(c.size() - lambda.size());
      break;
    case Backend::svt:
      for (const SetValuedTableau& t : enumerate_svt(lambda, mu)) excesses.push_back(t.entry_count() - lambda.size());
      break;
    case Backend::hecke: {
      ReflectionTableau t = tableau_of(g, v);
      for (const HeckeSubsequence& s : hecke_subsequences(w, t.word)) excesses.push_back(s.excess);
      break;
    }
  }
  for (int e : excesses) {
    if (e >= static_cast<int>(h.m.size())) h.m.resize(e + 1, 0);
    ++h.m[e];
  }
  return h;
}

long multiplicity(const HilbertData& h) { return h.m.empty() ? 0 : h.m[0]; }

std::vector<mpq_class> hilbert_polynomial(const HilbertData& h) {
  std::vector<mpq_class> poly(std::max(h.d_w, 1), mpq_class(0));
  for (std::size_t k = 0; k < h.m.size(); ++k) {
    long a = h.d_w - static_cast<long>(k);
    if (a < 1) continue;
    // C(n+a-1, a-1) = (n+1)...(n+a-1)/(a-1)!
    std::vector<mpq_class> term{mpq_class(1)};
    for (long t = 1; t <= a - 1; ++t) {
      std::vector<mpq_class> next(term.size() + 1, mpq_class(0));
      for (std::size_t p = 0; p < term.size(); ++p) {
        next[p] += term[p] * t;
        next[p + 1] += term[p];
      }
      term = std::move(next);
    }
    mpq_class scale(h.m[k] * (k % 2 == 0 ? 1 : -1));
    BigInt fact = 1;
    for (long t = 2; t <= a - 1; ++t) fact *= t;
    for (std::size_t p = 0; p < term.size(); ++p) poly[p] += term[p] * scale / mpq_class(fact);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

mpq_class evaluate(const std::vector<mpq_class>& poly, long n) {
  mpq_class acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * n + *it;
  return acc;
}

BigInt hilbert_function(const HilbertData& h, long n) {
  BigInt total = 0;
  for (std::size_t k = 0; k < h.m.size(); ++k) {
    long a = h.d_w - static_cast<long>(k);
    BigInt c = a == 0 ? BigInt(n == 0 ? 1 : 0) : binomial(n + a - 1, a - 1);
    total += (k % 2 == 0 ? 1 : -1) * h.m[k] * c;
  }
  return total;
}

std::string hilbert_series_string(const HilbertData& h) {
  if (h.m.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < h.m.size(); ++k) {
    if (h.m[k] == 0) continue;
    bool negative = k % 2 == 1;
    if (negative) out << (first ? "-" : " - ");
    else if (!first) out << " + ";
    out << h.m[k] << "/(1-t)^" << h.d_w - static_cast<long>(k);
    first = false;
  }
  return out.str();
}

std::string polynomial_string(const std::vector<mpq_class>& poly) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t p = poly.size(); p-- > 0;) {
    const mpq_class& c = poly[p];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (c < 0) out << (first ? "-" : " - ");
    else if (!first) out << " + ";
    if (p == 0 || mag != 1) out << mag.get_str();
    if (p > 0) {
      if (mag != 1) out << "*";
      out << "n";
      if (p > 1) out << "^" << p;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

GradedSeries graded_character(const Grassmannian& g, const WeylElement& w, const WeylElement& v,
                              int truncation, bool dimension_only) {
  XiVector xi = xi_vector(g, v);
  KClass k = pullback(g, w, v);
  return geometric_expand(k.value, tangent_weights(g, v), xi, truncation, dimension_only);
}

}  // namespace schubk
