#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "schubk/diagrams.hpp"
#include "schubk/hecke.hpp"
#include "schubk/ring.hpp"
#include "schubk/shapes.hpp"
#include "schubk/weyl.hpp"

namespace schubk {

enum class Backend { eyd, svt, hecke };
std::string backend_name(Backend b);
Backend parse_backend(std::string_view text);

// G/P for a maximal parabolic: P_d in type A, P_n in types B/C/D (where d = n).
struct Grassmannian {
  RootSystem rs;
  int d = 0;

  static Grassmannian make(Kind kind, int rank, std::optional<int> d = std::nullopt);
  int dimension() const;
  bool cominuscule() const { return rs.kind != Kind::B; }
  Geometry geometry() const { return geometry_for(rs.kind); }
  // Throws unless w is a minimal coset representative of this G/P.
  void check_rep(const WeylElement& w) const;
  Shape shape(const WeylElement& w) const;
  WeylElement element(const Shape& s) const;
  friend bool operator==(const Grassmannian&, const Grassmannian&) = default;
};

struct KClass {
  Grassmannian context;
  bool on_variety = false;
  LaurentPoly value;
};

std::vector<Weight> tangent_weights(const Grassmannian& g, const WeylElement& v);
// r(c) = s_{k_1}...s_{k_{c-1}}(alpha_{k_c}) for a reduced word.
std::vector<Weight> r_values(const std::vector<int>& word, RootSystem rs);
// r(c) for each box of D_mu (row-major), where c is the reading position of the box in T_mu.
std::vector<Weight> box_roots(const Grassmannian& g, const WeylElement& v);
// Closed-form root for a box of D_mu: eps_{v_{d+j}} - eps_{v_{d+1-i}} in type A and the
// shifted analogues on the 2n-window otherwise.
Weight box_root_closed_form(const Grassmannian& g, const WeylElement& v, Box b);

struct PullbackOptions {
  Backend backend = Backend::eyd;
  int cap = kDefaultHeckeCap;
  int threads = 1;
  // Reduced word of v for the Hecke backend; defaults to the reading word of T_mu.
  std::optional<std::vector<int>> word;
};

KClass pullback(const Grassmannian& g, const WeylElement& w, const WeylElement& v,
                const PullbackOptions& options = {});
// Type B_n through D_{n+1} followed by eps_{n+1} -> 0.
KClass pullback_b_via_d(const Grassmannian& g, const WeylElement& w, const WeylElement& v);

// sign * sum over diagrams of prod (e^{-r} - 1), with each term's roots r listed.
struct FactoredClass {
  int rank = 0;
  int sign = 1;
  std::vector<std::vector<Weight>> terms;
};
FactoredClass pullback_factored(const Grassmannian& g, const WeylElement& w, const WeylElement& v);
LaurentPoly expand(const FactoredClass& f);

XiVector xi_vector(const Grassmannian& g, const WeylElement& v);

struct HilbertData {
  int d_w = 0;
  std::vector<long> m;
  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

HilbertData hilbert_data(const Grassmannian& g, const WeylElement& w, const WeylElement& v,
                         Backend source = Backend::eyd);
long multiplicity(const HilbertData& h);
// Coefficients of h(n) by increasing power of n.
std::vector<mpq_class> hilbert_polynomial(const HilbertData& h);
mpq_class evaluate(const std::vector<mpq_class>& poly, long n);
// Coefficient of t^n in the Hilbert series.
BigInt hilbert_function(const HilbertData& h, long n);
std::string hilbert_series_string(const HilbertData& h);
std::string polynomial_string(const std::vector<mpq_class>& poly);

GradedSeries graded_character(const Grassmannian& g, const WeylElement& w, const WeylElement& v,
                              int truncation, bool dimension_only = false);

}  // namespace schubk
