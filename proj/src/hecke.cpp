#include "schubk/hecke.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <string>

namespace schubk {

WeylElement demazure_fold(const std::vector<int>& word, RootSystem rs) {
  WeylElement u = WeylElement::identity(rs);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (!is_left_descent(u, *it)) u = left_simple(*it, u);
  }
  return u;
}

WeylElement demazure_fold_left_to_right(const std::vector<int>& word, RootSystem rs) {
  WeylElement u = WeylElement::identity(rs);
  for (int k : word) {
    if (!is_right_descent(u, k)) u = right_simple(u, k);
  }
  return u;
}

bool is_reduced(const std::vector<int>& word, RootSystem rs) {
  WeylElement u = WeylElement::identity(rs);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (is_left_descent(u, *it)) return false;
    u = left_simple(*it, u);
  }
  return true;
}

std::vector<int> subword(const std::vector<int>& word, const std::vector<int>& indices) {
  std::vector<int> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(word.at(i));
  return out;
}

namespace {

// Positions are scanned from the right. u is the fold of the chosen suffix and
// x = w u^{-1}; a letter that lengthens u is only allowed if it shortens x, which
// keeps u a suffix of w in left weak order.
struct SubsequenceSearch {
  const std::vector<int>& word;
  RootSystem rs;
  std::vector<int> chosen;
  std::vector<HeckeSubsequence> found;
  int target_length = 0;

  void run(int pos, const WeylElement& u, const WeylElement& x, int x_length) {
    if (x_length > pos + 1) return;
    if (pos < 0) {
      HeckeSubsequence t;
      t.indices.assign(chosen.rbegin(), chosen.rend());
      t.length = static_cast<int>(t.indices.size());
      t.excess = t.length - target_length;
      found.push_back(std::move(t));
      return;
    }
    int k = word[pos];
    if (is_left_descent(u, k)) {
      chosen.push_back(pos);
      run(pos - 1, u, x, x_length);
      chosen.pop_back();
    } else if (is_right_descent(x, k)) {
      chosen.push_back(pos);
      run(pos - 1, left_simple(k, u), right_simple(x, k), x_length - 1);
      chosen.pop_back();
    }
    run(pos - 1, u, x, x_length);
  }
};

}  // namespace

std::vector<HeckeSubsequence> hecke_subsequences(const WeylElement& w, const std::vector<int>& word,
                                                 int cap, int threads) {
  if (static_cast<int>(word.size()) > cap) {
    throw CapExceeded("word of length " + std::to_string(word.size()) +
                      " exceeds the Hecke subsequence cap " + std::to_string(cap));
  }
  RootSystem rs = w.root_system();
  for (int k : word) check_letter(rs, k);
  int lw = length(w);
  int q = static_cast<int>(word.size());
  WeylElement id = WeylElement::identity(rs);

  std::vector<HeckeSubsequence> all;
  if (threads <= 1 || q == 0) {
    SubsequenceSearch search{word, rs, {}, {}, lw};
    search.run(q - 1, id, w, lw);
    all = std::move(search.found);
  } else {
    // Split on the choice made at the last position.
    auto branch = [&](bool take) {
      SubsequenceSearch search{word, rs, {}, {}, lw};
      int k = word[q - 1];
      if (!take) {
        search.run(q - 2, id, w, lw);
      } else if (is_right_descent(w, k)) {
        search.chosen.push_back(q - 1);
        search.run(q - 2, left_simple(k, id), right_simple(w, k), lw - 1);
      }
      return std::move(search.found);
    };
    auto with = std::async(std::launch::async, branch, true);
    auto without = branch(false);
    all = with.get();
    all.insert(all.end(), std::make_move_iterator(without.begin()),
               std::make_move_iterator(without.end()));
  }
  std::sort(all.begin(), all.end(),
            [](const HeckeSubsequence& a, const HeckeSubsequence& b) { return a.indices < b.indices; });
  return all;
}

std::set<std::vector<int>> commutation_class(const std::vector<int>& word, RootSystem rs,
                                             std::size_t limit) {
  if (!is_reduced(word, rs)) throw InputError("commutation_class needs a reduced word");
  std::set<std::vector<int>> seen{word};
  std::deque<std::vector<int>> queue{word};
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1] || coxeter_m(rs, cur[i], cur[i + 1]) != 2) continue;
      std::vector<int> next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > limit) throw CapExceeded("commutation class exceeds limit");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

bool is_fully_commutative(const WeylElement& w) {
  RootSystem rs = w.root_system();
  for (const auto& word : commutation_class(reduced_word(w), rs)) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      int s = word[i];
      int t = word[i + 1];
      if (s == t) continue;
      int m = coxeter_m(rs, s, t);
      if (m < 3 || i + m > word.size()) continue;
      bool braid = true;
      for (int j = 0; j < m; ++j) {
        if (word[i + j] != (j % 2 == 0 ? s : t)) {
          braid = false;
          break;
        }
      }
      if (braid) return false;
    }
  }
  return true;
}

std::optional<std::pair<int, int>> commuting_repeat(const std::vector<int>& word, RootSystem rs) {
  int q = static_cast<int>(word.size());
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (word[j] == word[i]) return std::make_pair(i, j);
      if (coxeter_m(rs, word[i], word[j]) != 2) break;
    }
  }
  return std::nullopt;
}

}  // namespace schubk
