#include "schubk/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

namespace schubk {

char kind_letter(Kind kind) {
  switch (kind) {
    case Kind::A: return 'A';
    case Kind::B: return 'B';
    case Kind::C: return 'C';
    case Kind::D: return 'D';
  }
  return '?';
}

Kind parse_kind(std::string_view text) {
  if (text == "A" || text == "a") return Kind::A;
  if (text == "B" || text == "b") return Kind::B;
  if (text == "C" || text == "c") return Kind::C;
  if (text == "D" || text == "d") return Kind::D;
  throw InputError("unknown root system type '" + std::string(text) + "'");
}

RootSystem RootSystem::make(Kind kind, int rank) {
  int min_rank = kind == Kind::D ? 3 : 2;
  if (rank < min_rank) {
    throw InputError(std::string("rank of type ") + kind_letter(kind) + " must be at least " +
                     std::to_string(min_rank));
  }
  return RootSystem{kind, rank};
}

Weight Weight::unit(int rank, int i, int sign) {
  Weight w = zero(rank);
  w.coords[i - 1] = sign;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool Weight::is_positive() const {
  for (int c : coords) {
    if (c != 0) return c > 0;
  }
  return false;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw InputError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw InputError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

std::string Weight::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    int c = coords[i];
    if (c == 0) continue;
    if (c < 0) out << '-';
    else if (!first) out << '+';
    if (std::abs(c) != 1) out << std::abs(c);
    out << "eps_" << i + 1;
    first = false;
  }
  if (first) return "0";
  return out.str();
}

WeylElement::WeylElement(RootSystem rs, std::vector<int> window)
    : rs_(rs), window_(std::move(window)) {
  int n = rs_.rank;
  if (static_cast<int>(window_.size()) != n) {
    throw InputError("window " + format_int_list(window_) + " must have " + std::to_string(n) +
                     " entries");
  }
  std::vector<bool> seen(n + 1, false);
  int negatives = 0;
  for (int x : window_) {
    int a = std::abs(x);
    if (a < 1 || a > n || seen[a]) {
      throw InputError("window " + format_int_list(window_) + " is not a signed permutation");
    }
    seen[a] = true;
    if (x < 0) ++negatives;
  }
  if (rs_.kind == Kind::A && negatives > 0) {
    throw InputError("type A windows carry no signs");
  }
  if (rs_.kind == Kind::D && negatives % 2 != 0) {
    throw InputError("type D windows need an even number of barred entries");
  }
}

WeylElement WeylElement::identity(RootSystem rs) {
  std::vector<int> w(rs.rank);
  for (int i = 0; i < rs.rank; ++i) w[i] = i + 1;
  return WeylElement(rs, std::move(w));
}

void check_letter(RootSystem rs, int k) {
  if (k < 1 || k > rs.num_simple()) {
    throw InputError("simple reflection index " + std::to_string(k) + " out of range");
  }
}

WeylElement WeylElement::simple_reflection(RootSystem rs, int k) {
  check_letter(rs, k);
  std::vector<int> w = identity(rs).window();
  int n = rs.rank;
  if (k < n) {
    std::swap(w[k - 1], w[k]);
  } else if (rs.kind == Kind::D) {
    w[n - 2] = -n;
    w[n - 1] = -(n - 1);
  } else {
    w[n - 1] = -n;
  }
  return WeylElement(rs, std::move(w));
}

WeylElement WeylElement::parse(RootSystem rs, std::string_view text) {
  return WeylElement(rs, parse_int_list(text));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) {
    int x = window_[i];
    int s = x < 0 ? -1 : 1;
    inv[std::abs(x) - 1] = s * static_cast<int>(i + 1);
  }
  return WeylElement(rs_, std::move(inv));
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::vector<int> WeylElement::full_window() const {
  if (rs_.kind == Kind::A) return window_;
  int n = rs_.rank;
  std::vector<int> full(2 * n);
  for (int i = 0; i < n; ++i) {
    int x = window_[i];
    int value = x > 0 ? x : 2 * n + 1 - (-x);
    full[i] = value;
    full[2 * n - 1 - i] = 2 * n + 1 - value;
  }
  return full;
}

std::string WeylElement::to_string() const { return format_int_list(window_); }

std::vector<Weight> simple_roots(RootSystem rs) {
  int n = rs.rank;
  std::vector<Weight> roots;
  for (int k = 1; k < n; ++k) roots.push_back(Weight::unit(n, k) - Weight::unit(n, k + 1));
  switch (rs.kind) {
    case Kind::A: break;
    case Kind::B: roots.push_back(Weight::unit(n, n)); break;
    case Kind::C: roots.push_back(2 * Weight::unit(n, n)); break;
    case Kind::D: roots.push_back(Weight::unit(n, n - 1) + Weight::unit(n, n)); break;
  }
  return roots;
}

std::vector<Weight> positive_roots(RootSystem rs) {
  int n = rs.rank;
  std::vector<Weight> roots;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      roots.push_back(Weight::unit(n, i) - Weight::unit(n, j));
      if (rs.kind != Kind::A) roots.push_back(Weight::unit(n, i) + Weight::unit(n, j));
    }
    if (rs.kind == Kind::B) roots.push_back(Weight::unit(n, i));
    if (rs.kind == Kind::C) roots.push_back(2 * Weight::unit(n, i));
  }
  return roots;
}

Weight apply(const WeylElement& w, const Weight& mu) {
  int n = w.rank();
  if (mu.rank() != n) throw InputError("weight rank does not match Weyl group rank");
  Weight out = Weight::zero(n);
  for (int i = 0; i < n; ++i) {
    int x = w.window()[i];
    int s = x < 0 ? -1 : 1;
    out.coords[std::abs(x) - 1] += s * mu.coords[i];
  }
  return out;
}

WeylElement mult(const WeylElement& u, const WeylElement& w) {
  if (!(u.root_system() == w.root_system())) throw InputError("Weyl group type mismatch");
  std::vector<int> out(w.rank());
  for (int i = 0; i < w.rank(); ++i) {
    int x = w.window()[i];
    int s = x < 0 ? -1 : 1;
    out[i] = s * u.window()[std::abs(x) - 1];
  }
  return WeylElement(u.root_system(), std::move(out));
}

WeylElement left_simple(int k, const WeylElement& w) {
  return mult(WeylElement::simple_reflection(w.root_system(), k), w);
}

WeylElement right_simple(const WeylElement& w, int k) {
  return mult(w, WeylElement::simple_reflection(w.root_system(), k));
}

namespace {

// Sign of u(alpha_k) for u given by its window, without building weights.
bool image_of_simple_is_negative(const RootSystem& rs, const std::vector<int>& u, int k) {
  int n = rs.rank;
  auto coord_sign = [](int x) { return x < 0 ? -1 : 1; };
  // u(eps_i) = sign(u_i) eps_{|u_i|}; compare positions in the total order
  // eps_1 > ... > eps_n > -eps_n > ... > -eps_1 via the 2n-window value.
  auto value = [&](int x) { return x > 0 ? x : 2 * n + 1 + x; };
  if (k < n) {
    // alpha_k = eps_k - eps_{k+1}: positive image iff value(u_k) < value(u_{k+1}).
    return value(u[k - 1]) > value(u[k]);
  }
  if (rs.kind == Kind::B || rs.kind == Kind::C) {
    return coord_sign(u[n - 1]) < 0;
  }
  // Type D: alpha_n = eps_{n-1} + eps_n maps to s1 eps_a + s2 eps_b.
  int a = u[n - 2];
  int b = u[n - 1];
  // eps_a + eps_b is positive iff value(a) < value(bar(b)).
  return value(a) > value(-b);
}

}  // namespace

bool is_right_descent(const WeylElement& w, int k) {
  check_letter(w.root_system(), k);
  return image_of_simple_is_negative(w.root_system(), w.window(), k);
}

bool is_left_descent(const WeylElement& w, int k) {
  check_letter(w.root_system(), k);
  return image_of_simple_is_negative(w.root_system(), w.inverse().window(), k);
}

std::vector<int> reduced_word(const WeylElement& w) {
  std::vector<int> word;
  WeylElement u = w;
  int r = w.root_system().num_simple();
  while (!u.is_identity()) {
    bool found = false;
    for (int k = 1; k <= r; ++k) {
      if (is_left_descent(u, k)) {
        word.push_back(k);
        u = left_simple(k, u);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("descent reduction stalled");
  }
  return word;
}

int length(const WeylElement& w) { return static_cast<int>(reduced_word(w).size()); }

WeylElement word_product(RootSystem rs, const std::vector<int>& word) {
  WeylElement u = WeylElement::identity(rs);
  for (int k : word) u = right_simple(u, k);
  return u;
}

namespace {

int order_of_product(RootSystem rs, int a, int b) {
  WeylElement st = mult(WeylElement::simple_reflection(rs, a), WeylElement::simple_reflection(rs, b));
  WeylElement p = st;
  int m = 1;
  while (!p.is_identity()) {
    p = mult(p, st);
    ++m;
  }
  return m;
}

}  // namespace

int coxeter_m(RootSystem rs, int a, int b) {
  check_letter(rs, a);
  check_letter(rs, b);
  static std::mutex mutex;
  static std::map<std::pair<Kind, int>, std::vector<std::vector<int>>> cache;
  std::lock_guard lock(mutex);
  auto& table = cache[{rs.kind, rs.rank}];
  if (table.empty()) {
    int r = rs.num_simple();
    table.assign(r + 1, std::vector<int>(r + 1, 1));
    for (int s = 1; s <= r; ++s) {
      for (int t = 1; t <= r; ++t) table[s][t] = order_of_product(rs, s, t);
    }
  }
  return table[a][b];
}

bool is_minimal_rep(const WeylElement& w, std::optional<int> d) {
  const RootSystem& rs = w.root_system();
  int n = rs.rank;
  if (rs.kind == Kind::A) {
    if (!d || *d < 1 || *d > n - 1) throw InputError("type A needs 1 <= d <= n-1");
    const auto& win = w.window();
    for (int i = 0; i + 1 < n; ++i) {
      if (i + 1 == *d) continue;
      if (win[i] > win[i + 1]) return false;
    }
    return true;
  }
  auto full = w.full_window();
  for (int i = 0; i + 1 < n; ++i) {
    if (full[i] > full[i + 1]) return false;
  }
  return true;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InputError("malformed integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_int_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace schubk
