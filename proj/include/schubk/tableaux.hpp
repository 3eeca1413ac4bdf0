#pragma once

#include <optional>
#include <vector>

#include "schubk/diagrams.hpp"
#include "schubk/shapes.hpp"

namespace schubk {

// Boxes of the (shifted) shape lambda in row-major order, each holding a
// nonempty ascending set of integers.
class SetValuedTableau {
 public:
  SetValuedTableau() = default;
  SetValuedTableau(Shape shape, std::vector<std::vector<int>> entries);

  const Shape& shape() const { return shape_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  // nullptr when the box is outside the shape.
  const std::vector<int>* at(Box b) const;
  int entry_count() const;

  friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;
  friend bool operator<(const SetValuedTableau& a, const SetValuedTableau& b) {
    return a.entries_ < b.entries_;
  }

 private:
  Shape shape_;
  std::vector<Box> boxes_;
  std::vector<std::vector<int>> entries_;
};

bool is_semistandard(const SetValuedTableau& t);
bool is_restricted(const SetValuedTableau& t, const Shape& mu);

// T^top: box (i,j) holds {i}.
SetValuedTableau top_tableau(const Shape& lambda);
std::vector<SetValuedTableau> enumerate_svt(const Shape& lambda, const Shape& mu, bool single_valued_only = false);

BoxSet f_map(const SetValuedTableau& t, const Shape& mu);
SetValuedTableau f_inverse(const BoxSet& c, const Shape& lambda);

// Moves entry x of box b to x+1 (type 1) or adds x+1 (type 2); on the diagonal of
// a type D shape the step is 2.
std::optional<SetValuedTableau> excite_tableau(const SetValuedTableau& t, const Shape& mu, Box b, int x,
                                               ExciteKind kind);

}  // namespace schubk
