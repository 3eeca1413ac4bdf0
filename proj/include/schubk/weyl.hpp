#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schubk {

// Thrown for malformed or inconsistent user input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Kind { A, B, C, D };

char kind_letter(Kind kind);
Kind parse_kind(std::string_view text);

// For type A the ambient group is S_n acting on Z^n, so there are n-1 simple roots.
struct RootSystem {
  Kind kind = Kind::A;
  int rank = 2;

  static RootSystem make(Kind kind, int rank);
  int num_simple() const { return kind == Kind::A ? rank - 1 : rank; }
  friend bool operator==(const RootSystem&, const RootSystem&) = default;
};

// Coefficients of eps_1..eps_rank.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }
  // eps_i with 1-based i.
  static Weight unit(int rank, int i, int sign = 1);

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  // Positive roots are exactly the roots whose first nonzero coordinate is positive.
  bool is_positive() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (int& c : a.coords) c *= k;
    return a;
  }
  friend auto operator<=>(const Weight&, const Weight&) = default;

  // e.g. "eps_1-eps_3", "-2eps_1", "0"
  std::string to_string() const;
};

class WeylElement {
 public:
  WeylElement(RootSystem rs, std::vector<int> window);
  static WeylElement identity(RootSystem rs);
  static WeylElement simple_reflection(RootSystem rs, int k);
  static WeylElement parse(RootSystem rs, std::string_view text);

  const RootSystem& root_system() const { return rs_; }
  const std::vector<int>& window() const { return window_; }
  int rank() const { return rs_.rank; }
  // 1-based signed entry w_i.
  int operator()(int i) const { return window_[i - 1]; }

  WeylElement inverse() const;
  bool is_identity() const;
  // Full window in 1..2n (barred k stored as 2n+1-k); type A returns the window itself.
  std::vector<int> full_window() const;
  std::string to_string() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) {
    return a.window_ <=> b.window_;
  }

 private:
  RootSystem rs_;
  std::vector<int> window_;
};

std::vector<Weight> simple_roots(RootSystem rs);
std::vector<Weight> positive_roots(RootSystem rs);

Weight apply(const WeylElement& w, const Weight& mu);
WeylElement mult(const WeylElement& u, const WeylElement& w);
// s_k * w and w * s_k.
WeylElement left_simple(int k, const WeylElement& w);
WeylElement right_simple(const WeylElement& w, int k);
// l(s_k w) < l(w), detected by the sign of w^{-1}(alpha_k).
bool is_left_descent(const WeylElement& w, int k);
// l(w s_k) < l(w), detected by the sign of w(alpha_k).
bool is_right_descent(const WeylElement& w, int k);

int length(const WeylElement& w);
// Letters k_1..k_l with w = s_{k_1} ... s_{k_l}, found by descent reduction.
std::vector<int> reduced_word(const WeylElement& w);
// Product s_{k_1} ... s_{k_l} in the group (no absorption).
WeylElement word_product(RootSystem rs, const std::vector<int>& word);
// Order of s_a s_b.
int coxeter_m(RootSystem rs, int a, int b);

// Type A needs 1 <= d <= n-1; B/C/D ignore d (maximal parabolic P_n).
bool is_minimal_rep(const WeylElement& w, std::optional<int> d = std::nullopt);

void check_letter(RootSystem rs, int k);
std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(const std::vector<int>& values);

}  // namespace schubk
