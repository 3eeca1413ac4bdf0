#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schubk/weyl.hpp"

namespace schubk {

class Partition {
 public:
  Partition() = default;
  // Validates weak decrease and nonnegativity; trims trailing zeros.
  explicit Partition(std::vector<int> parts);
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  // 1-based; zero past the last part.
  int operator[](int i) const { return i >= 1 && i <= rows() ? parts_[i - 1] : 0; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  std::string to_string() const { return format_int_list(parts_); }
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  static StrictPartition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return i >= 1 && i <= rows() ? parts_[i - 1] : 0; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  std::string to_string() const { return format_int_list(parts_); }
  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

enum class Geometry { ordinary, shifted_bc, shifted_d };

Geometry geometry_for(Kind kind);
std::string geometry_name(Geometry g);

// Row lengths of a Young diagram together with how it is drawn.  Shifted rows
// start on the diagonal: row i occupies columns i..i+rows[i]-1.
struct Shape {
  Geometry geometry = Geometry::ordinary;
  std::vector<int> rows;

  static Shape ordinary(const Partition& p) { return {Geometry::ordinary, p.parts()}; }
  static Shape shifted(const StrictPartition& p, Geometry g);

  int row(int i) const { return i >= 1 && i <= num_rows() ? rows[i - 1] : 0; }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int size() const;
  bool contains_box(int i, int j) const;
  int first_col(int i) const { return geometry == Geometry::ordinary ? 1 : i; }
  int last_col(int i) const { return first_col(i) + row(i) - 1; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

// Type A shapes.
Partition partition_of(const WeylElement& v, int d);
WeylElement perm_of(const Partition& lambda, int d, int n);
Partition transpose(const Partition& lambda);

// Types B/C/D, maximal parabolic P_n.
Partition symmetric_partition_of(const WeylElement& w);
StrictPartition strict_partition_of(const WeylElement& w);
WeylElement perm_of_strict(const StrictPartition& lambda, RootSystem rs);

// D_n -> B_{n-1} by deleting n and bar(n); inverse reinserts whichever keeps the parity even.
WeylElement bd_identify(const WeylElement& w);
WeylElement db_identify(const WeylElement& u);

bool contains(const Partition& lambda, const Partition& mu);
bool contains(const StrictPartition& lambda, const StrictPartition& mu);
bool contains(const Shape& lambda, const Shape& mu);

// The (shifted) shape attached to a minimal coset representative.
Shape shape_of(const WeylElement& w, int d);
WeylElement element_of(const Shape& shape, RootSystem rs, int d);

}  // namespace schubk
