#include "schubk/shapes.hpp"

#include <algorithm>
#include <numeric>

namespace schubk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw InputError("'" + format_int_list(parts_) + "' is not a partition");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) { return Partition(parse_int_list(text)); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] >= parts_[i - 1])) {
      throw InputError("'" + format_int_list(parts_) + "' is not a strict partition");
    }
  }
}

StrictPartition StrictPartition::parse(std::string_view text) {
  return StrictPartition(parse_int_list(text));
}

int StrictPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Geometry geometry_for(Kind kind) {
  switch (kind) {
    case Kind::A: return Geometry::ordinary;
    case Kind::B:
    case Kind::C: return Geometry::shifted_bc;
    case Kind::D: return Geometry::shifted_d;
  }
  return Geometry::ordinary;
}

std::string geometry_name(Geometry g) {
  switch (g) {
    case Geometry::ordinary: return "ordinary";
    case Geometry::shifted_bc: return "shiftedBC";
    case Geometry::shifted_d: return "shiftedD";
  }
  return "?";
}

Shape Shape::shifted(const StrictPartition& p, Geometry g) {
  if (g == Geometry::ordinary) throw InputError("shifted shape needs a shifted geometry");
  return {g, p.parts()};
}

int Shape::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

bool Shape::contains_box(int i, int j) const {
  return i >= 1 && i <= num_rows() && j >= first_col(i) && j <= last_col(i);
}

Partition partition_of(const WeylElement& v, int d) {
  if (!is_minimal_rep(v, d)) {
    throw InputError(v.to_string() + " is not a minimal coset representative");
  }
  std::vector<int> full = v.full_window();
  std::vector<int> parts(d);
  for (int i = 1; i <= d; ++i) parts[i - 1] = full[d - i] - (d + 1 - i);
  return Partition(std::move(parts));
}

namespace {

// Window of S_n from a partition in a d x (n-d) box.
std::vector<int> window_of(const Partition& lambda, int d, int n) {
  if (lambda.rows() > d || lambda[1] > n - d) {
    throw InputError("partition " + lambda.to_string() + " does not fit in a " + std::to_string(d) +
                     " x " + std::to_string(n - d) + " box");
  }
  std::vector<int> win(n);
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= d; ++i) {
    int value = lambda[i] + d + 1 - i;
    win[d - i] = value;
    used[value] = true;
  }
  int pos = d;
  for (int x = 1; x <= n; ++x) {
    if (!used[x]) win[pos++] = x;
  }
  return win;
}

}  // namespace

WeylElement perm_of(const Partition& lambda, int d, int n) {
  if (d < 1 || d > n - 1) throw InputError("type A needs 1 <= d <= n-1");
  return WeylElement(RootSystem::make(Kind::A, n), window_of(lambda, d, n));
}

Partition transpose(const Partition& lambda) {
  std::vector<int> t(lambda[1], 0);
  for (int j = 1; j <= lambda[1]; ++j) {
    for (int i = 1; i <= lambda.rows() && lambda[i] >= j; ++i) ++t[j - 1];
  }
  return Partition(std::move(t));
}

Partition symmetric_partition_of(const WeylElement& w) {
  const RootSystem& rs = w.root_system();
  if (rs.kind == Kind::A) throw InputError("symmetric partitions are for types B/C/D");
  if (!is_minimal_rep(w)) throw InputError(w.to_string() + " is not a minimal coset representative");
  int n = rs.rank;
  std::vector<int> full = w.full_window();
  std::vector<int> parts(n);
  for (int i = 1; i <= n; ++i) parts[i - 1] = full[n - i] - (n + 1 - i);
  Partition lambda(std::move(parts));
  if (!(transpose(lambda) == lambda)) {
    throw std::logic_error("partition of a symmetric window is not symmetric");
  }
  return lambda;
}

StrictPartition strict_partition_of(const WeylElement& w) {
  Partition lambda = symmetric_partition_of(w);
  int n = w.rank();
  std::vector<int> parts;
  if (w.root_system().kind == Kind::D) {
    for (int i = 1; i <= n - 1; ++i) parts.push_back(std::max(lambda[i] - i, 0));
  } else {
    for (int i = 1; i <= n; ++i) parts.push_back(std::max(lambda[i] - (i - 1), 0));
  }
  return StrictPartition(std::move(parts));
}

WeylElement perm_of_strict(const StrictPartition& lambda, RootSystem rs) {
  if (rs.kind == Kind::A) throw InputError("strict partitions are for types B/C/D");
  int n = rs.rank;
  int limit = rs.kind == Kind::D ? n - 1 : n;
  if (lambda[1] > limit) {
    throw InputError("strict partition " + lambda.to_string() + " does not fit type " +
                     kind_letter(rs.kind) + std::to_string(n));
  }
  // Each part fixes one barred value; the unbarred values come first in increasing order.
  std::vector<bool> barred(n + 1, false);
  for (int part : lambda.parts()) barred[(rs.kind == Kind::D ? n : n + 1) - part] = true;
  if (rs.kind == Kind::D && lambda.rows() % 2 == 1) barred[n] = true;
  std::vector<int> win;
  for (int x = 1; x <= n; ++x) {
    if (!barred[x]) win.push_back(x);
  }
  for (int x = n; x >= 1; --x) {
    if (barred[x]) win.push_back(-x);
  }
  WeylElement w(rs, std::move(win));
  if (!(strict_partition_of(w) == lambda)) {
    throw std::logic_error("strict partition reconstruction failed");
  }
  return w;
}

WeylElement bd_identify(const WeylElement& w) {
  if (w.root_system().kind != Kind::D) throw InputError("bd_identify expects a type D element");
  if (!is_minimal_rep(w)) throw InputError(w.to_string() + " is not a minimal coset representative");
  int n = w.rank();
  std::vector<int> win;
  for (int x : w.window()) {
    if (std::abs(x) != n) win.push_back(x);
  }
  return WeylElement(RootSystem::make(Kind::B, n - 1), std::move(win));
}

WeylElement db_identify(const WeylElement& u) {
  if (u.root_system().kind != Kind::B) throw InputError("db_identify expects a type B element");
  if (!is_minimal_rep(u)) throw InputError(u.to_string() + " is not a minimal coset representative");
  int m = u.rank();
  int negatives = 0;
  std::vector<int> win;
  bool inserted = false;
  for (int x : u.window()) negatives += x < 0;
  int extra = negatives % 2 == 0 ? m + 1 : -(m + 1);
  for (int x : u.window()) {
    if (x < 0 && !inserted) {
      win.push_back(extra);
      inserted = true;
    }
    win.push_back(x);
  }
  if (!inserted) win.push_back(extra);
  return WeylElement(RootSystem::make(Kind::D, m + 1), std::move(win));
}

bool contains(const Partition& lambda, const Partition& mu) {
  for (int i = 1; i <= lambda.rows(); ++i) {
    if (lambda[i] > mu[i]) return false;
  }
  return true;
}

bool contains(const StrictPartition& lambda, const StrictPartition& mu) {
  for (int i = 1; i <= lambda.rows(); ++i) {
    if (lambda[i] > mu[i]) return false;
  }
  return true;
}

bool contains(const Shape& lambda, const Shape& mu) {
  if (lambda.geometry != mu.geometry) throw InputError("shapes of different geometry");
  for (int i = 1; i <= lambda.num_rows(); ++i) {
    if (lambda.row(i) > mu.row(i)) return false;
  }
  return true;
}

Shape shape_of(const WeylElement& w, int d) {
  const RootSystem& rs = w.root_system();
  if (rs.kind == Kind::A) return Shape::ordinary(partition_of(w, d));
  return Shape::shifted(strict_partition_of(w), geometry_for(rs.kind));
}

WeylElement element_of(const Shape& shape, RootSystem rs, int d) {
  if (rs.kind == Kind::A) return perm_of(Partition(shape.rows), d, rs.rank);
  return perm_of_strict(StrictPartition(shape.rows), rs);
}

}  // namespace schubk
