#include "schubk/ring.hpp"

#include <sstream>

namespace schubk {

LaurentPoly LaurentPoly::constant(int rank, const BigInt& c) {
  LaurentPoly p(rank);
  p.add_term(Exponent(rank, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Weight& mu, const BigInt& c) {
  LaurentPoly p(mu.rank());
  p.add_term(mu.coords, c);
  return p;
}

LaurentPoly LaurentPoly::exp_minus_one(const Weight& mu) {
  LaurentPoly p = monomial(mu);
  p.add_term(Exponent(mu.rank(), 0), -1);
  return p;
}

BigInt LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::check_rank(int other) const {
  if (other != rank_) throw InputError("Laurent polynomial rank mismatch");
}

void LaurentPoly::add_term(const Exponent& exp, const BigInt& c) {
  check_rank(static_cast<int>(exp.size()));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_rank(other.rank_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_rank(other.rank_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_rank(b.rank_);
  LaurentPoly out(a.rank_);
  LaurentPoly::Exponent e(a.rank_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.rank_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::times_exp_minus_one(const Weight& mu) const {
  check_rank(mu.rank());
  LaurentPoly out = -*this;
  Exponent e(rank_);
  for (const auto& [ea, c] : terms_) {
    for (int i = 0; i < rank_; ++i) e[i] = ea[i] + mu.coords[i];
    out.add_term(e, c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool unit = Weight(e).is_zero();
    BigInt mag = abs(c);
    if (c < 0) out << (first ? "-" : " - ");
    else if (!first) out << " + ";
    if (unit) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "e^{" << Weight(e).to_string() << "}";
    }
    first = false;
  }
  return out.str();
}

LaurentPoly dual(const LaurentPoly& p) {
  LaurentPoly out(p.rank());
  for (const auto& [e, c] : p.terms()) out.add_term((-Weight(e)).coords, c);
  return out;
}

LaurentPoly specialize_zero(const LaurentPoly& p, int coord) {
  if (coord < 1 || coord > p.rank()) throw InputError("specialization coordinate out of range");
  LaurentPoly out(p.rank() - 1);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly::Exponent r = e;
    r.erase(r.begin() + (coord - 1));
    out.add_term(r, c);
  }
  return out;
}

UnivariateLaurent UnivariateLaurent::one_minus_t_power(int k) {
  UnivariateLaurent out;
  for (int i = 0; i <= k; ++i) out.add(i, (i % 2 == 0 ? 1 : -1) * binomial(k, i));
  return out;
}

void UnivariateLaurent::add(long degree, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

UnivariateLaurent operator*(const UnivariateLaurent& a, const UnivariateLaurent& b) {
  UnivariateLaurent out;
  for (const auto& [da, ca] : a.coeffs) {
    for (const auto& [db, cb] : b.coeffs) out.add(da + db, ca * cb);
  }
  return out;
}

std::string UnivariateLaurent::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : coeffs) {
    BigInt mag = abs(c);
    if (c < 0) out << (first ? "-" : " - ");
    else if (!first) out << " + ";
    if (d == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "t";
      if (d != 1) out << "^" << d;
    }
    first = false;
  }
  return out.str();
}

long xi_degree(const std::vector<int>& exp, const XiVector& xi) {
  if (exp.size() != xi.size()) throw InputError("xi vector rank mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < exp.size(); ++i) total += xi[i] * static_cast<long>(exp[i]);
  if (total.denominator() != 1) throw InputError("monomial has non-integral xi-degree");
  return total.numerator();
}

UnivariateLaurent ev_xi(const LaurentPoly& p, const XiVector& xi) {
  UnivariateLaurent out;
  for (const auto& [e, c] : p.terms()) out.add(xi_degree(e, xi), c);
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n < 0) {
    BigInt r = binomial(k - n - 1, k);
    return k % 2 == 0 ? r : BigInt(-r);
  }
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

GradedSeries geometric_expand(const LaurentPoly& numerator, const std::vector<Weight>& denom_weights,
                              const XiVector& xi, int truncation, bool dimension_only) {
  if (truncation < 0) throw InputError("truncation degree must be nonnegative");
  for (const Weight& mu : denom_weights) {
    if (xi_degree((-mu).coords, xi) != 1) throw InputError("denominator weight does not have xi-degree 1");
  }
  for (const auto& [e, c] : numerator.terms()) {
    if (xi_degree(e, xi) < 0) throw InputError("numerator has a monomial of negative xi-degree");
  }
  GradedSeries out;
  out.truncation = truncation;
  out.dimension_only = dimension_only;
  long dim = static_cast<long>(denom_weights.size());
  if (dimension_only) {
    UnivariateLaurent num = ev_xi(numerator, xi);
    for (int i = 0; i <= truncation; ++i) {
      BigInt h = 0;
      for (const auto& [k, c] : num.coeffs) {
        if (k > i) continue;
        h += c * (dim == 0 ? BigInt(k == i ? 1 : 0) : binomial(i - k + dim - 1, dim - 1));
      }
      out.dims.push_back(h);
    }
    return out;
  }
  int rank = numerator.rank();
  // Series of prod 1/(1 - e^{-mu}) split by degree.
  std::vector<LaurentPoly> series(truncation + 1, LaurentPoly(rank));
  series[0] = LaurentPoly::constant(rank, 1);
  for (const Weight& mu : denom_weights) {
    std::vector<LaurentPoly> next(truncation + 1, LaurentPoly(rank));
    for (int deg = 0; deg <= truncation; ++deg) {
      Weight shift = Weight::zero(rank);
      for (int k = 0; deg + k <= truncation; ++k) {
        LaurentPoly::Exponent e(rank);
        for (const auto& [ea, c] : series[deg].terms()) {
          for (int i = 0; i < rank; ++i) e[i] = ea[i] + shift.coords[i];
          next[deg + k].add_term(e, c);
        }
        shift -= mu;
      }
    }
    series = std::move(next);
  }
  out.slices.assign(truncation + 1, LaurentPoly(rank));
  for (const auto& [e, c] : numerator.terms()) {
    long k = xi_degree(e, xi);
    if (k > truncation) continue;
    LaurentPoly term(rank);
    term.add_term(e, c);
    for (long deg = 0; deg + k <= truncation; ++deg) out.slices[deg + k] += term * series[deg];
  }
  for (const LaurentPoly& slice : out.slices) {
    BigInt total = 0;
    for (const auto& [e, c] : slice.terms()) total += c;
    out.dims.push_back(total);
  }
  return out;
}

}  // namespace schubk
