#include "schubk/diagrams.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace schubk {

BoxSet::BoxSet(Shape ambient, std::vector<Box> boxes) : ambient_(std::move(ambient)), boxes_(std::move(boxes)) {
  std::sort(boxes_.begin(), boxes_.end());
  boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
  for (const Box& b : boxes_) {
    if (!ambient_.contains_box(b.row, b.col)) {
      throw InputError("box (" + std::to_string(b.row) + "," + std::to_string(b.col) +
                       ") lies outside the ambient diagram");
    }
  }
}

bool BoxSet::contains(Box b) const { return std::binary_search(boxes_.begin(), boxes_.end(), b); }

BoxIndex::BoxIndex(const Shape& mu) : mu_(mu) {
  for (int i = 1; i <= mu.num_rows(); ++i) width_ = std::max(width_, mu.last_col(i));
  grid_.assign(static_cast<std::size_t>(mu.num_rows()) * width_, -1);
  for (int i = 1; i <= mu.num_rows(); ++i) {
    for (int j = mu.first_col(i); j <= mu.last_col(i); ++j) {
      grid_[(i - 1) * width_ + (j - 1)] = static_cast<int>(boxes_.size());
      boxes_.push_back({i, j});
    }
  }
}

int BoxIndex::index(int row, int col) const {
  if (row < 1 || row > mu_.num_rows() || col < 1 || col > width_) return -1;
  return grid_[(row - 1) * width_ + (col - 1)];
}

namespace {

bool test(const BoxMask& m, int k) { return (m[k >> 6] >> (k & 63)) & 1u; }
void set(BoxMask& m, int k) { m[k >> 6] |= std::uint64_t{1} << (k & 63); }
void clear(BoxMask& m, int k) { m[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); }

struct MaskHash {
  std::size_t operator()(const BoxMask& m) const {
    std::size_t h = 0;
    for (std::uint64_t w : m) h = h * 0x9E3779B97F4A7C15ull + (w ^ (w >> 29));
    return h;
  }
};

// Boxes that must be in D_mu and outside C, then the target box.
bool excitation_frame(const BoxIndex& index, int k, std::vector<int>& frame, int& target) {
  Box b = index.box(k);
  int i = b.row;
  int j = b.col;
  frame.clear();
  std::vector<Box> need;
  Box dest{};
  Geometry g = index.shape().geometry;
  if (g == Geometry::ordinary || i < j) {
    need = {{i + 1, j}, {i, j + 1}, {i + 1, j + 1}};
    dest = {i + 1, j + 1};
  } else if (g == Geometry::shifted_bc) {
    need = {{i, i + 1}, {i + 1, i + 1}};
    dest = {i + 1, i + 1};
  } else {
    need = {{i, i + 1}, {i + 1, i + 1}, {i + 1, i + 2}, {i + 2, i + 2}};
    dest = {i + 2, i + 2};
  }
  for (const Box& nb : need) {
    int idx = index.index(nb.row, nb.col);
    if (idx < 0) return false;
    frame.push_back(idx);
  }
  target = index.index(dest.row, dest.col);
  return true;
}

std::optional<BoxMask> excite_mask(const BoxIndex& index, const BoxMask& c, int k, ExciteKind kind,
                                   std::vector<int>& frame) {
  int target = -1;
  if (!excitation_frame(index, k, frame, target)) return std::nullopt;
  for (int idx : frame) {
    if (test(c, idx)) return std::nullopt;
  }
  BoxMask out = c;
  if (kind == ExciteKind::type1) clear(out, k);
  set(out, target);
  return out;
}

}  // namespace

BoxMask to_mask(const BoxIndex& index, const std::vector<Box>& boxes) {
  BoxMask m((index.size() + 63) / 64 + 1, 0);
  for (const Box& b : boxes) {
    int k = index.index(b.row, b.col);
    if (k < 0) throw InputError("box outside the ambient diagram");
    set(m, k);
  }
  return m;
}

std::vector<Box> from_mask(const BoxIndex& index, const BoxMask& mask) {
  std::vector<Box> out;
  for (int k = 0; k < index.size(); ++k) {
    if (test(mask, k)) out.push_back(index.box(k));
  }
  return out;
}

BoxSet top_diagram(const Shape& lambda, const Shape& mu) {
  if (!contains(lambda, mu)) throw InputError("shape is not contained in the ambient shape");
  std::vector<Box> boxes;
  for (int i = 1; i <= lambda.num_rows(); ++i) {
    for (int j = lambda.first_col(i); j <= lambda.last_col(i); ++j) boxes.push_back({i, j});
  }
  return BoxSet(mu, std::move(boxes));
}

std::optional<BoxSet> excite(const BoxSet& c, Box box, ExciteKind kind) {
  if (!c.contains(box)) throw InputError("excitation box is not in the diagram");
  BoxIndex index(c.ambient());
  std::vector<int> frame;
  auto out = excite_mask(index, to_mask(index, c.boxes()), index.index(box.row, box.col), kind, frame);
  if (!out) return std::nullopt;
  return BoxSet(c.ambient(), from_mask(index, *out));
}

std::vector<BoxMask> enumerate_eyd_masks(const BoxIndex& index, const Shape& lambda, bool reduced_only) {
  BoxMask start = to_mask(index, top_diagram(lambda, index.shape()).boxes());
  std::unordered_set<BoxMask, MaskHash> seen{start};
  std::deque<BoxMask> queue{start};
  std::vector<BoxMask> out;
  std::vector<int> frame;
  while (!queue.empty()) {
    BoxMask c = std::move(queue.front());
    queue.pop_front();
    for (int k = 0; k < index.size(); ++k) {
      if (!test(c, k)) continue;
      for (ExciteKind kind : {ExciteKind::type1, ExciteKind::type2}) {
        if (kind == ExciteKind::type2 && reduced_only) continue;
        auto next = excite_mask(index, c, k, kind, frame);
        if (next && seen.insert(*next).second) queue.push_back(std::move(*next));
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<BoxSet> enumerate_eyd(const Shape& lambda, const Shape& mu, bool reduced_only) {
  BoxIndex index(mu);
  std::vector<BoxSet> out;
  for (const BoxMask& m : enumerate_eyd_masks(index, lambda, reduced_only)) {
    out.emplace_back(mu, from_mask(index, m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Energies energies(const BoxSet& c, const Shape& lambda) {
  bool d_rule = c.geometry() == Geometry::shifted_d;
  auto weight = [&](const Box& b) { return d_rule && b.row == b.col ? b.row : b.row + b.col; };
  long sum = 0;
  for (const Box& b : c.boxes()) sum += weight(b);
  BoxSet top = top_diagram(lambda, c.ambient());
  for (const Box& b : top.boxes()) sum -= weight(b);
  return {boost::rational<long>(sum, 2), c.size() - lambda.size()};
}

int ReflectionTableau::letter_at(Box b) const {
  auto it = std::lower_bound(boxes.begin(), boxes.end(), b);
  if (it == boxes.end() || !(*it == b)) throw InputError("box not in the reflection tableau");
  return letters[it - boxes.begin()];
}

int ReflectionTableau::reading_position(Box b) const {
  auto it = std::find(reading.begin(), reading.end(), b);
  if (it == reading.end()) throw InputError("box not in the reflection tableau");
  return static_cast<int>(it - reading.begin());
}

ReflectionTableau reflection_tableau(const Shape& mu, RootSystem rs, int d) {
  int n = rs.rank;
  if (mu.geometry != geometry_for(rs.kind)) throw InputError("shape geometry does not match the type");
  bool fits = true;
  if (rs.kind == Kind::A) {
    fits = d >= 1 && d <= n - 1 && mu.num_rows() <= d && mu.row(1) <= n - d;
  } else {
    fits = mu.row(1) <= (rs.kind == Kind::D ? n - 1 : n);
  }
  if (!fits) throw InputError("shape is too large for the given type and rank");

  ReflectionTableau t{rs, d, mu, {}, {}, {}, {}};
  auto letter = [&](int i, int j) {
    switch (rs.kind) {
      case Kind::A: return d + j - i;
      case Kind::B:
      case Kind::C: return n + i - j;
      case Kind::D:
        if (i == j) return i % 2 == 1 ? n : n - 1;
        return n + i - (j + 1);
    }
    return 0;
  };
  for (int i = 1; i <= mu.num_rows(); ++i) {
    for (int j = mu.first_col(i); j <= mu.last_col(i); ++j) {
      t.boxes.push_back({i, j});
      t.letters.push_back(letter(i, j));
    }
  }
  for (int i = mu.num_rows(); i >= 1; --i) {
    for (int j = mu.last_col(i); j >= mu.first_col(i); --j) {
      t.reading.push_back({i, j});
      t.word.push_back(letter(i, j));
    }
  }
  return t;
}

std::vector<int> reading_word(const ReflectionTableau& t) { return t.word; }

std::vector<int> subword_of(const BoxSet& c, const ReflectionTableau& t) {
  std::vector<int> out;
  for (std::size_t k = 0; k < t.reading.size(); ++k) {
    if (c.contains(t.reading[k])) out.push_back(static_cast<int>(k));
  }
  if (static_cast<int>(out.size()) != c.size()) throw InputError("diagram is not inside the tableau shape");
  return out;
}

std::string to_tikz(const BoxSet& c) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}[scale=0.5]\n";
  const Shape& mu = c.ambient();
  for (int i = 1; i <= mu.num_rows(); ++i) {
    for (int j = mu.first_col(i); j <= mu.last_col(i); ++j) {
      const char* style = c.contains({i, j}) ? "draw,fill=gray!50" : "draw=gray";
      out << "  \\draw[" << style << "] (" << j - 1 << "," << -i << ") rectangle (" << j << ","
          << -(i - 1) << ");\n";
    }
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace schubk
