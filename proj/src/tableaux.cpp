#include "schubk/tableaux.hpp"

#include <algorithm>

namespace schubk {

namespace {

std::vector<Box> shape_boxes(const Shape& shape) {
  std::vector<Box> out;
  for (int i = 1; i <= shape.num_rows(); ++i) {
    for (int j = shape.first_col(i); j <= shape.last_col(i); ++j) out.push_back({i, j});
  }
  return out;
}

bool has(const std::vector<int>* set, int x) {
  return set != nullptr && std::binary_search(set->begin(), set->end(), x);
}

// Entry x may sit in box (i,j) of a tableau restricted by mu.
bool entry_allowed(const Shape& mu, int i, int j, int x) {
  if (x < 1) return false;
  if (mu.geometry == Geometry::ordinary) return x + j - i <= mu.row(x);
  // Diagonal excitations in type D move two steps, so diagonal entries keep the row parity.
  if (mu.geometry == Geometry::shifted_d && i == j && (x - i) % 2 != 0) return false;
  return j - i <= mu.row(x) - 1;
}

}  // namespace

SetValuedTableau::SetValuedTableau(Shape shape, std::vector<std::vector<int>> entries)
    : shape_(std::move(shape)), boxes_(shape_boxes(shape_)), entries_(std::move(entries)) {
  if (entries_.size() != boxes_.size()) throw InputError("tableau entries do not match its shape");
  for (auto& set : entries_) {
    std::sort(set.begin(), set.end());
    if (set.empty() || std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw InputError("tableau boxes need nonempty sets of distinct entries");
    }
  }
}

const std::vector<int>* SetValuedTableau::at(Box b) const {
  auto it = std::lower_bound(boxes_.begin(), boxes_.end(), b);
  if (it == boxes_.end() || !(*it == b)) return nullptr;
  return &entries_[it - boxes_.begin()];
}

int SetValuedTableau::entry_count() const {
  int total = 0;
  for (const auto& set : entries_) total += static_cast<int>(set.size());
  return total;
}

bool is_semistandard(const SetValuedTableau& t) {
  for (std::size_t k = 0; k < t.boxes().size(); ++k) {
    const Box& b = t.boxes()[k];
    int top = t.entries()[k].back();
    if (const auto* right = t.at({b.row, b.col + 1}); right && top > right->front()) return false;
    if (const auto* below = t.at({b.row + 1, b.col}); below && top >= below->front()) return false;
  }
  return true;
}

bool is_restricted(const SetValuedTableau& t, const Shape& mu) {
  for (std::size_t k = 0; k < t.boxes().size(); ++k) {
    const Box& b = t.boxes()[k];
    for (int x : t.entries()[k]) {
      if (!entry_allowed(mu, b.row, b.col, x)) return false;
    }
  }
  return true;
}

SetValuedTableau top_tableau(const Shape& lambda) {
  std::vector<std::vector<int>> entries;
  for (const Box& b : shape_boxes(lambda)) entries.push_back({b.row});
  return SetValuedTableau(lambda, std::move(entries));
}

namespace {

struct SvtSearch {
  const Shape& lambda;
  const Shape& mu;
  bool single_valued_only;
  std::vector<Box> boxes;
  std::vector<std::vector<int>> entries;
  std::vector<SetValuedTableau> found;

  const std::vector<int>* filled(Box b, std::size_t upto) const {
    auto it = std::lower_bound(boxes.begin(), boxes.begin() + upto, b);
    if (it == boxes.begin() + upto || !(*it == b)) return nullptr;
    return &entries[it - boxes.begin()];
  }

  void run(std::size_t k) {
    if (k == boxes.size()) {
      found.emplace_back(lambda, entries);
      return;
    }
    const Box& b = boxes[k];
    int low = 1;
    if (const auto* left = filled({b.row, b.col - 1}, k)) low = std::max(low, left->back());
    if (const auto* above = filled({b.row - 1, b.col}, k)) low = std::max(low, above->back() + 1);
    std::vector<int> allowed;
    for (int x = low; x <= mu.num_rows(); ++x) {
      if (entry_allowed(mu, b.row, b.col, x)) allowed.push_back(x);
    }
    if (single_valued_only) {
      for (int x : allowed) {
        entries[k] = {x};
        run(k + 1);
      }
      return;
    }
    unsigned span = static_cast<unsigned>(allowed.size());
    for (unsigned bits = 1; bits < (1u << span); ++bits) {
      entries[k].clear();
      for (unsigned t = 0; t < span; ++t) {
        if (bits & (1u << t)) entries[k].push_back(allowed[t]);
      }
      run(k + 1);
    }
  }
};

}  // namespace

std::vector<SetValuedTableau> enumerate_svt(const Shape& lambda, const Shape& mu, bool single_valued_only) {
  if (!contains(lambda, mu)) throw InputError("shape is not contained in the ambient shape");
  SvtSearch search{lambda, mu, single_valued_only, shape_boxes(lambda), {}, {}};
  search.entries.resize(search.boxes.size());
  search.run(0);
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

BoxSet f_map(const SetValuedTableau& t, const Shape& mu) {
  std::vector<Box> out;
  for (std::size_t k = 0; k < t.boxes().size(); ++k) {
    const Box& b = t.boxes()[k];
    for (int x : t.entries()[k]) out.push_back({x, x + b.col - b.row});
  }
  BoxSet c(mu, out);
  if (c.size() != static_cast<int>(out.size())) throw std::logic_error("f_map produced a repeated box");
  return c;
}

SetValuedTableau f_inverse(const BoxSet& c, const Shape& lambda) {
  std::vector<Box> boxes = shape_boxes(lambda);
  std::vector<std::vector<int>> entries(boxes.size());
  auto slot = [&](Box b) -> std::vector<int>* {
    auto it = std::lower_bound(boxes.begin(), boxes.end(), b);
    if (it == boxes.end() || !(*it == b)) return nullptr;
    return &entries[it - boxes.begin()];
  };
  std::vector<Box> by_diagonal = c.boxes();
  std::stable_sort(by_diagonal.begin(), by_diagonal.end(), [](const Box& a, const Box& b) {
    return a.col - a.row > b.col - b.row;
  });
  for (const Box& cb : by_diagonal) {
    int x = cb.row;
    int q = cb.col - cb.row;
    std::vector<int>* target = nullptr;
    int candidates = 0;
    for (int i = 1; i <= lambda.num_rows(); ++i) {
      std::vector<int>* here = slot({i, i + q});
      if (!here) continue;
      const std::vector<int>* above = slot({i - 1, i + q});
      const std::vector<int>* right = slot({i, i + q + 1});
      if (above && !above->empty() && x <= above->back()) continue;
      if (right && !right->empty() && x > right->front()) continue;
      target = here;
      ++candidates;
    }
    if (candidates != 1) throw InputError("diagram is not an excited Young diagram of this shape");
    target->push_back(x);
  }
  for (auto& set : entries) {
    if (set.empty()) throw InputError("diagram is not an excited Young diagram of this shape");
  }
  SetValuedTableau t(lambda, std::move(entries));
  if (!is_semistandard(t) || !is_restricted(t, c.ambient()) || !(f_map(t, c.ambient()) == c)) {
    throw InputError("diagram is not an excited Young diagram of this shape");
  }
  return t;
}

std::optional<SetValuedTableau> excite_tableau(const SetValuedTableau& t, const Shape& mu, Box b, int x,
                                               ExciteKind kind) {
  const std::vector<int>* here = t.at(b);
  if (!has(here, x)) throw InputError("entry is not in the tableau box");
  int i = b.row;
  int j = b.col;
  const std::vector<int>* right = t.at({i, j + 1});
  int step = 1;
  if (mu.geometry == Geometry::shifted_d && i == j) {
    step = 2;
    if (has(right, x) || has(right, x + 1) || has(here, x + 1) || has(here, x + 2)) return std::nullopt;
  } else {
    if (has(right, x) || has(here, x + 1) || has(t.at({i + 1, j}), x + 1)) return std::nullopt;
  }
  if (!entry_allowed(mu, i, j, x + step)) return std::nullopt;
  std::vector<std::vector<int>> entries = t.entries();
  auto& set = entries[std::lower_bound(t.boxes().begin(), t.boxes().end(), b) - t.boxes().begin()];
  if (kind == ExciteKind::type1) set.erase(std::find(set.begin(), set.end(), x));
  set.push_back(x + step);
  return SetValuedTableau(t.shape(), std::move(entries));
}

}  // namespace schubk
