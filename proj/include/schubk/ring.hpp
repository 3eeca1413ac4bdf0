#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

#include "schubk/weyl.hpp"

namespace schubk {

using BigInt = mpz_class;
using Rational = boost::rational<long>;
using XiVector = std::vector<Rational>;

// Sparse Laurent polynomial in e^{eps_1},...,e^{eps_rank} with exact integer coefficients.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, BigInt>;

  explicit LaurentPoly(int rank = 0) : rank_(rank) {}
  static LaurentPoly constant(int rank, const BigInt& c);
  static LaurentPoly monomial(const Weight& mu, const BigInt& c = 1);
  // e^{mu} - 1
  static LaurentPoly exp_minus_one(const Weight& mu);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  BigInt coefficient(const Exponent& e) const;

  // Adds c e^{exp}, dropping the term if it cancels.
  void add_term(const Exponent& exp, const BigInt& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const BigInt& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  // p * (e^{mu} - 1) without building the binomial.
  LaurentPoly times_exp_minus_one(const Weight& mu) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // "1 - e^{eps_1-eps_2}"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void check_rank(int other) const;

  int rank_ = 0;
  TermMap terms_;
};

// e^{lambda} -> e^{-lambda}
LaurentPoly dual(const LaurentPoly& p);
// eps_coord -> 0 (1-based), rank drops by one.
LaurentPoly specialize_zero(const LaurentPoly& p, int coord);

// Polynomial in t and t^{-1}.
struct UnivariateLaurent {
  std::map<long, BigInt> coeffs;

  static UnivariateLaurent one_minus_t_power(int k);  // (1-t)^k, k >= 0
  void add(long degree, const BigInt& c);
  friend UnivariateLaurent operator*(const UnivariateLaurent& a, const UnivariateLaurent& b);
  friend bool operator==(const UnivariateLaurent&, const UnivariateLaurent&) = default;
  std::string to_string() const;
};

// mu(xi); throws when it is not an integer.
long xi_degree(const std::vector<int>& exp, const XiVector& xi);
UnivariateLaurent ev_xi(const LaurentPoly& p, const XiVector& xi);

struct GradedSeries {
  int truncation = 0;
  bool dimension_only = false;
  std::vector<LaurentPoly> slices;  // empty in dimension-only mode
  std::vector<BigInt> dims;         // h(0..N)
};

// Expands numerator / prod (1 - e^{-mu}) up to xi-degree N.
GradedSeries geometric_expand(const LaurentPoly& numerator, const std::vector<Weight>& denom_weights,
                              const XiVector& xi, int truncation, bool dimension_only = false);

BigInt binomial(long n, long k);

}  // namespace schubk
