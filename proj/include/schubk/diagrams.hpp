#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "schubk/shapes.hpp"
#include "schubk/weyl.hpp"

namespace schubk {

// 1-indexed, rows top to bottom; ordering is row-major.
struct Box {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// A set of boxes inside the ambient diagram D_mu, kept sorted row-major.
class BoxSet {
 public:
  BoxSet() = default;
  BoxSet(Shape ambient, std::vector<Box> boxes);

  const Shape& ambient() const { return ambient_; }
  Geometry geometry() const { return ambient_.geometry; }
  const std::vector<Box>& boxes() const { return boxes_; }
  int size() const { return static_cast<int>(boxes_.size()); }
  bool contains(Box b) const;

  friend bool operator==(const BoxSet&, const BoxSet&) = default;
  friend bool operator<(const BoxSet& a, const BoxSet& b) { return a.boxes_ < b.boxes_; }

 private:
  Shape ambient_;
  std::vector<Box> boxes_;
};

enum class ExciteKind { type1, type2 };

// D_lambda placed in the ambient D_mu.
BoxSet top_diagram(const Shape& lambda, const Shape& mu);
std::optional<BoxSet> excite(const BoxSet& c, Box box, ExciteKind kind);
std::vector<BoxSet> enumerate_eyd(const Shape& lambda, const Shape& mu, bool reduced_only = false);

struct Energies {
  boost::rational<long> e1;
  int e2 = 0;
};
Energies energies(const BoxSet& c, const Shape& lambda);

// T_mu: every box of D_mu filled with a simple reflection index.
struct ReflectionTableau {
  RootSystem rs;
  int d = 0;
  Shape shape;
  std::vector<Box> boxes;      // row-major
  std::vector<int> letters;    // letter of boxes[k]
  std::vector<Box> reading;    // boxes in reading order
  std::vector<int> word;       // letters in reading order

  int letter_at(Box b) const;
  // 0-based position of a box in the reading word.
  int reading_position(Box b) const;
};

// d is only used in type A.
ReflectionTableau reflection_tableau(const Shape& mu, RootSystem rs, int d);
std::vector<int> reading_word(const ReflectionTableau& t);
std::vector<int> subword_of(const BoxSet& c, const ReflectionTableau& t);

std::string to_tikz(const BoxSet& c);

// Dense indexing of the boxes of D_mu used by the enumerators.
class BoxIndex {
 public:
  explicit BoxIndex(const Shape& mu);
  int size() const { return static_cast<int>(boxes_.size()); }
  const Box& box(int k) const { return boxes_[k]; }
  // -1 when outside D_mu.
  int index(int row, int col) const;
  const Shape& shape() const { return mu_; }

 private:
  Shape mu_;
  int width_ = 0;
  std::vector<Box> boxes_;
  std::vector<int> grid_;
};

using BoxMask = std::vector<std::uint64_t>;

BoxMask to_mask(const BoxIndex& index, const std::vector<Box>& boxes);
std::vector<Box> from_mask(const BoxIndex& index, const BoxMask& mask);
std::vector<BoxMask> enumerate_eyd_masks(const BoxIndex& index, const Shape& lambda, bool reduced_only);

}  // namespace schubk
