#pragma once

// Explicit saturated-sequence families and pattern statistics. Every emitted
// sequence is re-verified by the saturation engine; a construction that fails
// verification reports its verdict instead of raising.

#include <optional>
#include <string>
#include <vector>

#include "satseq/core.hpp"
#include "satseq/saturation.hpp"

namespace satseq {

// Adjacent-pair statistics of a 3-letter pattern in canonical naming:
// f0 counts ab,bc,ca; f1 counts ac,ba,cb; f2 counts equal pairs.
struct FStats {
  int f0 = 0, f1 = 0, f2 = 0;
};

inline FStats f_stats(const Pattern& u) {
  if (u.r() != 3) raise(Errc::not_three_letters, "f-statistics need exactly 3 distinct letters");
  FStats f;
  const auto& a = u.letters();
  for (int i = 0; i + 1 < u.length(); ++i) {
    Letter x = a[i], y = a[i + 1];
    if (x == y)
      f.f2++;
    else if (y == x % 3 + 1)  // cyclic step forward: 1->2, 2->3, 3->1
      f.f0++;
    else
      f.f1++;
  }
  return f;
}

// ---------------------------------------------------------------------------
// The cyclic block s_r(u) and its one-letter-wider variant.

// Longest prefix of 1,2,...,r,1,2,... that avoids u; appending the next
// cyclic letter always creates a copy. A prefix of r*length(u) letters is
// guaranteed to contain u, so the search is bounded.
inline Seq s_r(const Pattern& u) {
  const int r = u.r();
  std::vector<Letter> cyc;
  Seq best(std::vector<Letter>{}, r);
  for (int len = 1; len <= r * u.length() + 1; ++len) {
    cyc.push_back((len - 1) % r + 1);
    Seq probe(cyc, r);
    if (contains(probe, u)) return best;
    best = probe;
  }
  raise(Errc::internal, "cyclic prefix failed to reach a copy of the pattern");
}

struct SrShape {
  int t = 0;  // full cycles
  int j = 0;  // tail length, 0 <= j < r
};

inline SrShape s_r_shape(const Pattern& u) {
  int len = s_r(u).size();
  int r = u.r();
  return SrShape{len / r, len % r};
}

// (1,...,r+1)^t 1,...,j where s_r(u) = (1,...,r)^t 1,...,j with 1 <= j < r.
// Length is |s_r(u)| + t, over the alphabet [r+1].
inline Seq s_r_prime(const Pattern& u) {
  const int r = u.r();
  SrShape shape = s_r_shape(u);
  if (shape.j < 1)
    raise(Errc::shape_mismatch,
          "s_r(u) has an empty or full-cycle tail; no j in [1, r-1] exists");
  std::vector<Letter> out;
  for (int rep = 0; rep < shape.t; ++rep)
    for (Letter v = 1; v <= r + 1; ++v) out.push_back(v);
  for (Letter v = 1; v <= shape.j; ++v) out.push_back(v);
  return Seq(std::move(out), r + 1);
}

// ---------------------------------------------------------------------------
// Irreducibility.

// No cut point splits u into two letter-disjoint halves.
inline bool is_irreducible(const Pattern& u) {
  const auto& a = u.letters();
  for (int cut = 1; cut < u.length(); ++cut) {
    std::vector<char> pre(u.r() + 1, 0);
    for (int i = 0; i < cut; ++i) pre[a[i]] = 1;
    bool disjoint = true;
    for (int i = cut; i < u.length() && disjoint; ++i) disjoint = !pre[a[i]];
    if (disjoint) return false;
  }
  return true;
}

// For every pair of distinct letters, neither "all alpha before all beta" nor
// the reverse holds. Implies irreducibility.
inline bool is_strongly_irreducible(const Pattern& u) {
  const int r = u.r();
  std::vector<int> first(r + 1, -1), last(r + 1, -1);
  const auto& a = u.letters();
  for (int i = 0; i < u.length(); ++i) {
    if (first[a[i]] < 0) first[a[i]] = i;
    last[a[i]] = i;
  }
  for (Letter x = 1; x <= r; ++x)
    for (Letter y = x + 1; y <= r; ++y)
      if (last[x] < first[y] || last[y] < first[x]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Construction results.

struct ConstructionResult {
  Seq seq;
  std::string family;
  SaturationReport report;
  std::optional<long long> predicted_length;
};

namespace detail {

inline ConstructionResult make_result(Seq s, std::string family, int n, const Pattern& u,
                                      std::optional<long long> predicted) {
  ConstructionResult res;
  res.report = verify(s, n, u);
  res.seq = std::move(s);
  res.seq.alphabet = n;
  res.family = std::move(family);
  res.predicted_length = predicted;
  return res;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Disjoint shifted copies of s_r(u) for patterns that start and end with a
// doubled letter. For n = rm the blocks are plain; for n = rm + j, the first
// j blocks are replaced by copies of s_r'(u), each absorbing one extra letter
// taken from rm+1, ..., rm+j.
inline ConstructionResult block_construction(int n, const Pattern& u) {
  const auto& a = u.letters();
  if (u.length() < 2 || a[0] != a[1] || a[u.length() - 2] != a[u.length() - 1])
    raise(Errc::precondition_failed, "pattern must start and end with a doubled letter");
  if (!is_irreducible(u)) raise(Errc::precondition_failed, "pattern is reducible");
  const int r = u.r();
  if (n < r) raise(Errc::precondition_failed, "alphabet smaller than r");
  const int m = n / r, j = n % r;
  if (j > m)
    raise(Errc::precondition_failed,
          "n = rm + j needs j <= m blocks to widen; got m = " + std::to_string(m) +
              ", j = " + std::to_string(j));
  Seq plain = s_r(u);
  Seq wide;  // only needed when j > 0
  SrShape shape{};
  if (j > 0) {
    shape = s_r_shape(u);
    wide = s_r_prime(u);
  }
  std::vector<Letter> out;
  for (int k = 0; k < m; ++k) {
    if (k < j) {
      for (Letter v : wide.letters)
        out.push_back(v <= r ? k * r + v : r * m + k + 1);
    } else {
      for (Letter v : plain.letters) out.push_back(k * r + v);
    }
  }
  long long predicted = static_cast<long long>(m) * plain.size() + static_cast<long long>(j) * shape.t;
  return detail::make_result(Seq(std::move(out), n), "blocks", n, u, predicted);
}

// ---------------------------------------------------------------------------
// Finite analogue of the doubly infinite construction t[1] t[2] ... t[n].

struct InfiniteAnalogue {
  ConstructionResult base;   // the concatenation, over the alphabet [r-1+n]
  int p = 0;                 // max k with the k-fold insertion block avoiding u
  int k0 = 0;                // least margin with a fully blocked middle; 0 if none found
  bool middle_blocked = false;
  int middle_gap_lo = 0, middle_gap_hi = 0;  // blocked gap range for k0
};

namespace detail {

// (1..r-1)^pad (1..r-1, r)^k (1..r-1)^pad over the alphabet [r], the finite
// truncation used to test whether the infinite insertion block avoids u.
inline bool t_r_avoids(const Pattern& u, int k, int pad) {
  const int r = u.r();
  std::vector<Letter> v;
  auto cycle = [&](bool with_x) {
    for (Letter c = 1; c <= r - 1; ++c) v.push_back(c);
    if (with_x) v.push_back(r);
  };
  for (int i = 0; i < pad; ++i) cycle(false);
  for (int i = 0; i < k; ++i) cycle(true);
  for (int i = 0; i < pad; ++i) cycle(false);
  return avoids(Seq(std::move(v), r), u);
}

inline int max_avoiding_k(const Pattern& u, int pad) {
  for (int k = 1; k <= u.length() + 1; ++k)
    if (!t_r_avoids(u, k, pad)) return k - 1;
  raise(Errc::internal, "insertion block never reached a copy of the pattern");
}

}  // namespace detail

// Requires u strongly irreducible with every letter occurring at least twice.
// Computes p with pad = length(u) cycles of padding per side and re-checks at
// pad+1; emits t[1]...t[n] with t[k] = (1,...,r-1, r-1+k)^p, and reports the
// least k0 <= length(u) for which every insertion strictly between the end of
// t[k0] and the start of t[n-k0] is blocked.
inline InfiniteAnalogue infinite_analogue(int n, const Pattern& u) {
  const int r = u.r();
  if (!is_strongly_irreducible(u))
    raise(Errc::precondition_failed, "pattern is not strongly irreducible");
  for (int c = 1; c <= r; ++c)
    if (u.multiplicities()[c] < 2)
      raise(Errc::precondition_failed, "every pattern letter must occur at least twice");
  if (n < 1) raise(Errc::bad_parameters, "need n >= 1");
  const int pad = u.length();
  int p = detail::max_avoiding_k(u, pad);
  if (p < 1) raise(Errc::internal, "single insertion block unexpectedly contains the pattern");
  if (p != detail::max_avoiding_k(u, pad + 1))
    raise(Errc::no_finite_p_padding, "p is unstable under padding increase");

  const int alphabet = r - 1 + n;
  std::vector<Letter> out;
  for (int k = 1; k <= n; ++k)
    for (int rep = 0; rep < p; ++rep) {
      for (Letter c = 1; c <= r - 1; ++c) out.push_back(c);
      out.push_back(r - 1 + k);
    }
  Seq s(std::move(out), alphabet);

  InfiniteAnalogue res;
  res.p = p;
  const int block = r * p;  // letters per t[k]
  for (int k0 = 1; k0 <= u.length() && !res.middle_blocked; ++k0) {
    if (n - k0 <= k0) break;
    int lo = k0 * block;                // first middle gap (after t[k0])
    int hi = (n - k0 - 1) * block;      // last middle gap (before t[n-k0])
    if (lo > hi) continue;
    bool all_blocked = true;
    for (int g = lo; g <= hi && all_blocked; ++g)
      for (Letter x = 1; x <= alphabet && all_blocked; ++x)
        all_blocked = !can_properly_insert(s, x, g, u);
    if (all_blocked) {
      res.middle_blocked = true;
      res.k0 = k0;
      res.middle_gap_lo = lo;
      res.middle_gap_hi = hi;
    }
  }
  res.base = detail::make_result(std::move(s), "infinite", alphabet, u,
                                 static_cast<long long>(n) * block);
  return res;
}

// ---------------------------------------------------------------------------
// 3-letter machinery.

struct S3Lengths {
  long long derived = 0;  // |u| - 1 + 2 f2 + min(f0, f1)
  long long printed = 0;  // |u| - 1 +   f2 + min(f0, f1)
};

// Closed forms for |s_3(u)|. The two variants differ in the coefficient of
// f2; on patterns with f2 > 0 the direct computation of s_r decides between
// them (the derived variant is the one that matches).
inline S3Lengths s3_length_formula(const Pattern& u) {
  if (u.r() != 3) raise(Errc::not_three_letters, "need exactly 3 distinct letters");
  const auto& a = u.letters();
  if (u.length() < 3 || a[0] == a[1] || a[1] == a[2] || a[0] == a[2])
    raise(Errc::precondition_failed, "pattern must begin with 3 distinct letters");
  FStats f = f_stats(u);
  long long base = u.length() - 1 + std::min(f.f0, f.f1);
  return S3Lengths{base + 2 * f.f2, base + f.f2};
}

// True iff u has 3 distinct letters, length >= 6, starts with three distinct
// letters, ends with a cyclic rotation of its first three letters, and
// satisfies f0 >= f1 + 5.
inline bool satisfies_thm_3letter(const Pattern& u) {
  if (u.r() != 3 || u.length() < 6) return false;
  const auto& a = u.letters();
  if (a[0] == a[1] || a[1] == a[2] || a[0] == a[2]) return false;
  // canonical start is 1,2,3; rotations: 123, 231, 312
  int x = a[u.length() - 3], y = a[u.length() - 2], z = a[u.length() - 1];
  bool rotation = (x == 1 && y == 2 && z == 3) || (x == 2 && y == 3 && z == 1) ||
                  (x == 3 && y == 1 && z == 2);
  if (!rotation) return false;
  FStats f = f_stats(u);
  return f.f0 >= f.f1 + 5;
}

// Recursive semisaturated family: s[3] = s_3(u); each step appends a copy of
// s_3(u) on (x, y, z) minus its first two letters, where x, y are the last two
// letters of the previous stage and z is the next fresh letter.
inline ConstructionResult s_bracket(int n, const Pattern& u) {
  if (u.r() != 3) raise(Errc::not_three_letters, "need exactly 3 distinct letters");
  if (n < 3) raise(Errc::bad_parameters, "need n >= 3");
  Seq base = s_r(u);
  std::vector<Letter> s = base.letters;
  long long predicted = base.size() + static_cast<long long>(n - 3) * (base.size() - 2);
  for (Letter z = 4; z <= n; ++z) {
    Letter x = s[s.size() - 2], y = s[s.size() - 1];
    Letter map[4] = {0, x, y, z};
    for (int i = 2; i < base.size(); ++i) s.push_back(map[base.letters[i]]);
  }
  return detail::make_result(Seq(std::move(s), n), "s-bracket", n, u, predicted);
}

// ---------------------------------------------------------------------------
// Alternation families for u = (abc)^t, (abc)^t a and (abc)^t ab.

enum class AlternationVariant { plain, plus_a, plus_ab };

inline const char* alternation_variant_name(AlternationVariant v) {
  switch (v) {
    case AlternationVariant::plain: return "plain";
    case AlternationVariant::plus_a: return "plus-a";
    case AlternationVariant::plus_ab: return "plus-ab";
  }
  return "unknown";
}

inline Pattern alternation_pattern(int t, AlternationVariant v) {
  std::vector<Letter> u;
  for (int i = 0; i < t; ++i) {
    u.push_back(1);
    u.push_back(2);
    u.push_back(3);
  }
  if (v != AlternationVariant::plain) u.push_back(1);
  if (v == AlternationVariant::plus_ab) u.push_back(2);
  return Pattern::from_letters(u);
}

inline ConstructionResult alternation_family(int n, int t, AlternationVariant variant) {
  if (n < 4 || t < 2) raise(Errc::bad_parameters, "need n >= 4 and t >= 2");
  std::vector<Letter> s;
  long long predicted = 0;
  switch (variant) {
    case AlternationVariant::plain:
      // (1,2,n)^{t-1} (1,2,n-1)^{t-1} ... (1,2,3)^{t-1} 1,2
      for (Letter k = n; k >= 3; --k)
        for (int rep = 0; rep < t - 1; ++rep) {
          s.push_back(1);
          s.push_back(2);
          s.push_back(k);
        }
      s.push_back(1);
      s.push_back(2);
      predicted = 3LL * (t - 1) * (n - 2) + 2;
      break;
    case AlternationVariant::plus_a:
      // (n,n-1,n-2)^t, then k,(k+2,k+1,k)^{t-1} for k = n-3 .. 3, then
      // 1,(4,3,1)^{t-1}, then 2,3,(1,2,3)^{t-2},1,2
      for (int rep = 0; rep < t; ++rep) {
        s.push_back(n);
        s.push_back(n - 1);
        s.push_back(n - 2);
      }
      for (Letter k = n - 3; k >= 3; --k) {
        s.push_back(k);
        for (int rep = 0; rep < t - 1; ++rep) {
          s.push_back(k + 2);
          s.push_back(k + 1);
          s.push_back(k);
        }
      }
      s.push_back(1);
      for (int rep = 0; rep < t - 1; ++rep) {
        s.push_back(4);
        s.push_back(3);
        s.push_back(1);
      }
      s.push_back(2);
      s.push_back(3);
      for (int rep = 0; rep < t - 2; ++rep) {
        s.push_back(1);
        s.push_back(2);
        s.push_back(3);
      }
      s.push_back(1);
      s.push_back(2);
      predicted = 6LL * t - 2 + static_cast<long long>(n - 4) * (3 * t - 2);
      break;
    case AlternationVariant::plus_ab:
      // (n-1,n,n-2)^t, n-1, then (k,k+1,k+2)^{t-1}, k, k+1 for k = n-3 .. 1
      for (int rep = 0; rep < t; ++rep) {
        s.push_back(n - 1);
        s.push_back(n);
        s.push_back(n - 2);
      }
      s.push_back(n - 1);
      for (Letter k = n - 3; k >= 1; --k) {
        for (int rep = 0; rep < t - 1; ++rep) {
          s.push_back(k);
          s.push_back(k + 1);
          s.push_back(k + 2);
        }
        s.push_back(k);
        s.push_back(k + 1);
      }
      predicted = 3LL * t + 1 + static_cast<long long>(n - 3) * (3 * t - 1);
      break;
  }
  Pattern u = alternation_pattern(t, variant);
  std::string family = std::string("alternation-") + alternation_variant_name(variant);
  return detail::make_result(Seq(std::move(s), n), family, n, u, predicted);
}

// The closed form for u = abcacbc:
//   1,2,n, 1,2,n-1, ..., 1,2,3, 1,2,3, 1,2, n,n-1,...,4, 6,7,...,n
// of length 5n - 9.
inline ConstructionResult closed_form_abcacbc(int n) {
  if (n < 6) raise(Errc::bad_parameters, "need n >= 6");
  std::vector<Letter> s;
  for (Letter k = n; k >= 3; --k) {
    s.push_back(1);
    s.push_back(2);
    s.push_back(k);
  }
  s.push_back(1);
  s.push_back(2);
  s.push_back(3);
  s.push_back(1);
  s.push_back(2);
  for (Letter k = n; k >= 4; --k) s.push_back(k);
  for (Letter k = 6; k <= n; ++k) s.push_back(k);
  Pattern u = Pattern::parse("abcacbc");
  return detail::make_result(Seq(std::move(s), n), "abcacbc", n, u, 5LL * n - 9);
}

}  // namespace satseq
