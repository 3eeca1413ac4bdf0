#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schubk/weyl.hpp"

namespace schubk {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultHeckeCap = 24;

// H_{s_1}...H_{s_q} = H_u, folded right to left.
WeylElement demazure_fold(const std::vector<int>& word, RootSystem rs);
WeylElement demazure_fold_left_to_right(const std::vector<int>& word, RootSystem rs);
bool is_reduced(const std::vector<int>& word, RootSystem rs);

struct HeckeSubsequence {
  std::vector<int> indices;  // 0-based, strictly increasing
  int length = 0;
  int excess = 0;  // e(t) = l(t) - l(w)
  friend bool operator==(const HeckeSubsequence&, const HeckeSubsequence&) = default;
};

// All index subsequences of word whose Demazure product is w, in lexicographic order.
std::vector<HeckeSubsequence> hecke_subsequences(const WeylElement& w, const std::vector<int>& word,
                                                 int cap = kDefaultHeckeCap, int threads = 1);

// Letters of the subword picked out by 0-based positions.
std::vector<int> subword(const std::vector<int>& word, const std::vector<int>& indices);

std::set<std::vector<int>> commutation_class(const std::vector<int>& word, RootSystem rs,
                                             std::size_t limit = 1000000);
bool is_fully_commutative(const WeylElement& w);

// Positions i<j with word[i]==word[j] and every letter strictly between commuting with it.
std::optional<std::pair<int, int>> commuting_repeat(const std::vector<int>& word, RootSystem rs);

}  // namespace schubk
