#pragma once

// Exact Sat(n, u) by iterative-deepening DFS over r-sparse, u-avoiding
// sequences in canonical form (letter k+1 may appear only after 1..k have),
// which quotients out the letter-renaming symmetry. Each completed candidate
// is checked by the full saturation verifier; the first target length with a
// saturated witness is Sat(n, u).

#include <optional>

#include "satseq/core.hpp"
#include "satseq/saturation.hpp"

namespace satseq {

struct SearchOutcome {
  int value = 0;
  Seq witness;  // lexicographically least canonical witness
};

namespace detail {

class SatSearch {
 public:
  SatSearch(int n, const Pattern& u) : n_(n), u_(u), r_(u.r()) { buf_.alphabet = n; }

  bool try_length(int target, Seq& out) {
    target_ = target;
    buf_.letters.clear();
    if (dfs(0, 0)) {
      out = buf_;
      return true;
    }
    return false;
  }

 private:
  bool dfs(int i, int max_seen) {
    if (i == target_) {
      if (verify(buf_, n_, u_).verdict == Verdict::Saturated) return true;
      return false;
    }
    int top = std::min(n_, max_seen + 1);
    for (Letter c = 1; c <= top; ++c) {
      bool clash = false;
      for (int j = std::max(0, i - r_ + 1); j < i && !clash; ++j)
        clash = buf_.letters[j] == c;
      if (clash) continue;
      buf_.letters.push_back(c);
      // new copies in the extended prefix must pass through the new position
      if (buf_.size() < u_.length() || !contains_through(buf_, u_, i + 1)) {
        if (dfs(i + 1, std::max(max_seen, static_cast<int>(c)))) return true;
      }
      buf_.letters.pop_back();
    }
    return false;
  }

  int n_, target_ = 0;
  const Pattern& u_;
  int r_;
  Seq buf_;
};

}  // namespace detail

// Exact minimum length of a u-saturated sequence on n letters, provided it is
// at most max_len (default: the greedy construction's length, which is always
// an upper bound). Raises BoundExceeded otherwise.
inline SearchOutcome search_sat(int n, const Pattern& u,
                                std::optional<int> max_len = std::nullopt) {
  if (n < u.r()) raise(Errc::alphabet_too_small, "need n >= r");
  int bound = max_len ? *max_len : greedy_saturate(n, u).size();
  detail::SatSearch search(n, u);
  Seq witness;
  for (int target = std::max(0, u.r() - 1); target <= bound; ++target)
    if (search.try_length(target, witness)) return SearchOutcome{target, witness};
  raise(Errc::bound_exceeded,
        "no saturated sequence of length <= " + std::to_string(bound) + " found");
}

}  // namespace satseq
