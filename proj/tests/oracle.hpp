#pragma once

// Test-only brute-force containment oracle, independent of the production
// matcher: enumerate every injective map from the pattern's letters into the
// alphabet in lexicographic order and greedily match the concrete word as a
// subsequence. The first assignment that matches yields the least witness
// under (letter assignment, positions), which is exactly the production
// matcher's determinism contract.

#include <optional>
#include <vector>

#include "satseq/core.hpp"

namespace oracle {

inline std::optional<std::vector<int>> greedy_match(const std::vector<int>& word,
                                                    const std::vector<int>& seq) {
  std::vector<int> pos;
  int at = 0;
  for (int want : word) {
    while (at < (int)seq.size() && seq[at] != want) ++at;
    if (at == (int)seq.size()) return std::nullopt;
    pos.push_back(at + 1);  // 1-based
    ++at;
  }
  return pos;
}

// Least copy of u in s under (assignment, positions), or nullopt.
inline std::optional<std::vector<int>> contains(const satseq::Seq& s, const satseq::Pattern& u) {
  const int r = u.r(), n = s.alphabet;
  std::vector<int> image(r, 0);
  std::vector<char> used(n + 1, 0);
  std::optional<std::vector<int>> best;
  auto rec = [&](auto&& self, int k) -> void {
    if (best) return;
    if (k == r) {
      std::vector<int> word;
      for (int v : u.letters()) word.push_back(image[v - 1]);
      best = greedy_match(word, s.letters);
      return;
    }
    for (int w = 1; w <= n && !best; ++w) {
      if (used[w]) continue;
      used[w] = 1;
      image[k] = w;
      self(self, k + 1);
      used[w] = 0;
    }
  };
  rec(rec, 0);
  return best;
}

// Exhaustive check whether any copy of u in s uses the 1-based position pos.
inline bool contains_through(const satseq::Seq& s, const satseq::Pattern& u, int pos) {
  const int r = u.r(), n = s.alphabet;
  std::vector<int> image(r, 0);
  std::vector<char> used(n + 1, 0);
  bool found = false;

  // for a fixed concrete word, DFS over all embeddings, requiring pos
  auto embed = [&](const std::vector<int>& word) {
    std::vector<int> stack;
    auto rec = [&](auto&& self, int k, int from, bool hit) -> bool {
      if (k == (int)word.size()) return hit;
      for (int at = from; at < (int)s.letters.size(); ++at) {
        if (!hit && at + 1 > pos) return false;
        if (s.letters[at] != word[k]) continue;
        if (self(self, k + 1, at + 1, hit || (at + 1 == pos))) return true;
      }
      return false;
    };
    return rec(rec, 0, 0, false);
  };

  auto rec = [&](auto&& self, int k) -> void {
    if (found) return;
    if (k == r) {
      std::vector<int> word;
      for (int v : u.letters()) word.push_back(image[v - 1]);
      if (embed(word)) found = true;
      return;
    }
    for (int w = 1; w <= n && !found; ++w) {
      if (used[w]) continue;
      used[w] = 1;
      image[k] = w;
      self(self, k + 1);
      used[w] = 0;
    }
  };
  rec(rec, 0);
  return found;
}

// Deterministic xorshift generator for hand-rolled property tests.
struct Rng {
  unsigned long long state;
  explicit Rng(unsigned long long seed) : state(seed * 2654435761ULL + 1) {}
  unsigned long long next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int uniform(int lo, int hi) { return lo + (int)(next() % (unsigned long long)(hi - lo + 1)); }
};

inline satseq::Seq random_seq(Rng& rng, int max_len, int n) {
  int len = rng.uniform(0, max_len);
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) ls.push_back(rng.uniform(1, n));
  return satseq::Seq(ls, n);
}

inline satseq::Pattern random_pattern(Rng& rng, int max_len, int max_r) {
  int len = rng.uniform(1, max_len);
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) ls.push_back(rng.uniform(1, max_r));
  return satseq::Pattern::from_letters(ls);
}

}  // namespace oracle
