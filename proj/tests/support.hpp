#pragma once

#include <schubk/diagrams.hpp>
#include <schubk/hecke.hpp>
#include <schubk/restriction.hpp>
#include <schubk/ring.hpp>
#include <schubk/shapes.hpp>
#include <schubk/tableaux.hpp>
#include <schubk/weyl.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using namespace schubk;

// Every signed permutation allowed in the given type.
inline std::vector<WeylElement> all_elements(RootSystem rs) {
  int n = rs.rank;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<WeylElement> out;
  do {
    int sign_masks = rs.kind == Kind::A ? 1 : (1 << n);
    for (int mask = 0; mask < sign_masks; ++mask) {
      if (rs.kind == Kind::D && __builtin_popcount(mask) % 2 != 0) continue;
      std::vector<int> win(perm);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) win[i] = -win[i];
      out.emplace_back(rs, win);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Positive roots written out by hand, independent of the library's list.
inline std::vector<std::vector<int>> hand_positive_roots(RootSystem rs) {
  int n = rs.rank;
  std::vector<std::vector<int>> roots;
  auto pair = [&](int i, int j, int sj) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    r[j] = sj;
    roots.push_back(r);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pair(i, j, -1);
      if (rs.kind != Kind::A) pair(i, j, 1);
    }
  if (rs.kind == Kind::B || rs.kind == Kind::C)
    for (int i = 0; i < n; ++i) {
      std::vector<int> r(n, 0);
      r[i] = rs.kind == Kind::B ? 1 : 2;
      roots.push_back(r);
    }
  return roots;
}

inline std::vector<int> act(const WeylElement& w, const std::vector<int>& mu) {
  std::vector<int> out(mu.size(), 0);
  for (int i = 1; i <= w.rank(); ++i) {
    int wi = w(i);
    out[std::abs(wi) - 1] += (wi > 0 ? 1 : -1) * mu[i - 1];
  }
  return out;
}

inline bool first_nonzero_negative(const std::vector<int>& v) {
  for (int c : v)
    if (c != 0) return c < 0;
  return false;
}

// Number of positive roots sent to negative roots.
inline int inversion_length(const WeylElement& w) {
  int count = 0;
  for (const auto& r : hand_positive_roots(w.root_system()))
    if (first_nonzero_negative(act(w, r))) ++count;
  return count;
}

// Shapes that fit the Grassmannian: partitions in a d x (n-d) box, or strict partitions
// with parts at most n (B/C) or n-1 (D).
inline std::vector<Shape> all_shapes(const Grassmannian& g) {
  std::vector<Shape> out;
  std::vector<int> parts;
  if (g.rs.kind == Kind::A) {
    int rows = g.d, cols = g.rs.rank - g.d;
    std::function<void(int)> rec = [&](int cap) {
      out.push_back(Shape::ordinary(Partition(parts)));
      if (static_cast<int>(parts.size()) == rows) return;
      for (int p = 1; p <= cap; ++p) {
        parts.push_back(p);
        rec(p);
        parts.pop_back();
      }
    };
    rec(cols);
  } else {
    int top = g.rs.kind == Kind::D ? g.rs.rank - 1 : g.rs.rank;
    std::function<void(int)> rec = [&](int cap) {
      out.push_back(Shape::shifted(StrictPartition(parts), g.geometry()));
      for (int p = 1; p <= cap; ++p) {
        parts.push_back(p);
        rec(p - 1);
        parts.pop_back();
      }
    };
    rec(top);
  }
  return out;
}

// Shapes of the same geometry contained in mu.
inline std::vector<Shape> sub_shapes(const Shape& mu) {
  std::vector<Shape> out;
  std::vector<int> rows;
  bool strict = mu.geometry != Geometry::ordinary;
  std::function<void(int)> rec = [&](int i) {
    if (i > mu.num_rows()) {
      std::vector<int> trimmed(rows);
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      if (strict)
        out.push_back(Shape::shifted(StrictPartition(trimmed), mu.geometry));
      else
        out.push_back(Shape::ordinary(Partition(trimmed)));
      return;
    }
    int cap = mu.row(i);
    if (i > 1) cap = std::min(cap, strict ? std::max(rows.back() - 1, 0) : rows.back());
    for (int p = 0; p <= cap; ++p) {
      rows.push_back(p);
      rec(i + 1);
      rows.pop_back();
    }
  };
  rec(1);
  return out;
}

inline std::vector<Box> all_boxes(const Shape& s) {
  std::vector<Box> out;
  for (int i = 1; i <= s.num_rows(); ++i)
    for (int j = s.first_col(i); j <= s.last_col(i); ++j) out.push_back({i, j});
  return out;
}

// {C subset of D_mu : fold(s_C) = w} by running over all 2^|mu| subsets.
inline std::set<std::vector<Box>> brute_force_diagrams(const WeylElement& w, const Shape& mu,
                                                      const ReflectionTableau& t) {
  std::set<std::vector<Box>> out;
  int size = static_cast<int>(t.reading.size());
  int target = length(w);
  for (std::uint32_t mask = 0; mask < (1u << size); ++mask) {
    if (__builtin_popcount(mask) < target) continue;
    std::vector<int> letters;
    std::vector<Box> boxes;
    for (int k = 0; k < size; ++k)
      if (mask >> k & 1) {
        letters.push_back(t.word[k]);
        boxes.push_back(t.reading[k]);
      }
    if (demazure_fold(letters, w.root_system()) == w) {
      std::sort(boxes.begin(), boxes.end());
      out.insert(boxes);
    }
  }
  (void)mu;
  return out;
}

// A factor like "+7-1" is e^{eps_7-eps_1}-1; "-1-1" is e^{-2eps_1}-1.
inline Weight parse_exponent(int rank, const std::string& text) {
  Weight wt = Weight::zero(rank);
  for (std::size_t k = 0; k + 1 < text.size(); k += 2) {
    int sign = text[k] == '-' ? -1 : 1;
    int idx = text[k + 1] - '0';
    wt.coords[idx - 1] += sign;
  }
  return wt;
}

// sign * sum over terms of the product of their factors.
inline LaurentPoly factored_sum(int rank, int sign, const std::vector<std::string>& terms) {
  LaurentPoly total(rank);
  for (const auto& term : terms) {
    std::istringstream in(term);
    LaurentPoly prod = LaurentPoly::constant(rank, 1);
    std::string factor;
    while (in >> factor) prod = prod.times_exp_minus_one(parse_exponent(rank, factor));
    total += prod;
  }
  if (sign < 0) total = -total;
  return total;
}

// Schoolbook expansion of (e^{a}-1), cross-checking times_exp_minus_one.
inline LaurentPoly naive_factor(const Weight& a) {
  return LaurentPoly::monomial(a) - LaurentPoly::constant(a.rank(), 1);
}

// Worked examples, transcribed factor by factor.
struct Golden {
  Kind kind;
  int rank;
  int d;
  std::string w, v;
  int sign;
  std::vector<std::string> terms;
};

inline Golden golden_a() {
  return {Kind::A, 7, 3, "1,3,5,2,4,6,7", "4,6,7,1,2,3,5", -1,
          {"+7-1 +7-2 +6-1", "+7-1 +7-2 +4-2", "+7-1 +6-1 +6-3", "+7-1 +4-2 +6-3", "+6-2 +4-2 +6-3",
           "+7-1 +7-2 +6-3 +6-1", "+7-1 +7-2 +6-1 +4-2", "+7-1 +7-2 +4-2 +6-3", "+7-1 +6-1 +4-2 +6-3",
           "+7-1 +6-2 +4-2 +6-3", "+7-1 +7-2 +6-1 +6-3 +4-2"}};
}

inline std::vector<std::string> golden_c_terms(const std::string& two1, const std::string& two3,
                                               const std::string& two4) {
  const std::string a = "-1-3", b = "-3-4";
  return {two1 + " " + a + " " + two3,         two1 + " " + a + " " + two4,
          two1 + " " + b + " " + two4,         two3 + " " + b + " " + two4,
          two1 + " " + a + " " + two3 + " " + two4, two1 + " " + a + " " + b + " " + two4,
          two1 + " " + two3 + " " + b + " " + two4};
}

inline Golden golden_c() {
  return {Kind::C, 4, 4, "1,2,-4,-3", "2,-4,-3,-1", -1, golden_c_terms("-1-1", "-3-3", "-4-4")};
}

inline Golden golden_b4() {
  return {Kind::B, 4, 4, "1,2,-4,-3", "2,-4,-3,-1", -1, golden_c_terms("-1", "-3", "-4")};
}

inline Golden golden_d() {
  const std::string a = "-1-3", b = "-1-4", c = "-1-5", d = "-3-4", e = "-3+6", f = "-5+6", g = "-3-5";
  auto t = [](std::initializer_list<std::string> fs) {
    std::string s;
    for (const auto& x : fs) s += (s.empty() ? "" : " ") + x;
    return s;
  };
  return {Kind::D, 6, 6, "1,2,4,6,-5,-3", "2,6,-5,-4,-3,-1", 1,
          {t({a, b, c, d}), t({a, b, c, f}), t({a, b, e, d}), t({a, b, e, f}), t({a, g, e, f}),
           t({a, b, c, e, d}), t({a, b, c, d, f}), t({a, b, c, e, f}), t({a, b, e, d, f}),
           t({a, b, g, e, f}), t({a, b, c, e, d, f})}};
}

inline LaurentPoly golden_class(const Golden& g) { return factored_sum(g.rank, g.sign, g.terms); }

inline Grassmannian grassmannian(const Golden& g) {
  return Grassmannian::make(g.kind, g.rank, g.kind == Kind::A ? std::optional<int>(g.d) : std::nullopt);
}

// The B_5 pair matching the D_6 golden under eps_6 -> 0.
inline const char* kB5w = "1,2,4,-5,-3";
inline const char* kB5v = "2,-5,-4,-3,-1";

// Grassmannians covered by the exhaustive backend-agreement sweep.
inline std::vector<Grassmannian> sweep_grassmannians() {
  std::vector<Grassmannian> out;
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d < n; ++d) out.push_back(Grassmannian::make(Kind::A, n, d));
  for (int n = 2; n <= 4; ++n) out.push_back(Grassmannian::make(Kind::C, n));
  for (int n = 2; n <= 4; ++n) out.push_back(Grassmannian::make(Kind::B, n));
  for (int n = 3; n <= 5; ++n) out.push_back(Grassmannian::make(Kind::D, n));
  return out;
}

}  // namespace oracle
