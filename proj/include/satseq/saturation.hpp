#pragma once

// Proper-insertion checking, saturation / semisaturation verification, the
// greedy construction of a u-saturated sequence, and the scan harness that
// collects growth evidence per alphabet size.

#include <functional>
#include <future>
#include <optional>
#include <vector>

#include "satseq/core.hpp"

namespace satseq {

enum class Verdict { Saturated, SemisaturatedOnly, NotSemisaturated, ContainsForbidden };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Saturated: return "Saturated";
    case Verdict::SemisaturatedOnly: return "SemisaturatedOnly";
    case Verdict::NotSemisaturated: return "NotSemisaturated";
    case Verdict::ContainsForbidden: return "ContainsForbidden";
  }
  return "Unknown";
}

// A single-letter insertion: letter x placed at gap g, where gap 0 is before
// the whole sequence and gap len(s) is after it.
struct Insertion {
  Letter letter = 0;
  int gap = 0;
  friend bool operator==(const Insertion& a, const Insertion& b) {
    return a.letter == b.letter && a.gap == b.gap;
  }
};

struct SaturationReport {
  Verdict verdict = Verdict::NotSemisaturated;
  std::optional<Insertion> counterexample;     // a proper insertion, when one exists
  std::optional<std::vector<int>> copy;        // 1-based witness positions when s contains u
};

inline Seq insert_letter(const Seq& s, Letter x, int gap) {
  Seq out;
  out.alphabet = s.alphabet;
  out.letters.reserve(s.letters.size() + 1);
  out.letters.insert(out.letters.end(), s.letters.begin(), s.letters.begin() + gap);
  out.letters.push_back(x);
  out.letters.insert(out.letters.end(), s.letters.begin() + gap, s.letters.end());
  return out;
}

// True iff inserting x at gap keeps the sequence r-sparse (r = u.r) and does
// not create a copy of u through the inserted position. Sparsity is checked
// on the windows overlapping the insertion and avoidance via contains_through,
// which for an r-sparse u-avoiding input is the full insertion re-check.
inline bool can_properly_insert(const Seq& s, Letter x, int gap, const Pattern& u) {
  if (x < 1 || x > s.alphabet)
    raise(Errc::letter_out_of_alphabet, "letter " + std::to_string(x) + " not in alphabet");
  if (gap < 0 || gap > s.size())
    raise(Errc::gap_out_of_range, "gap " + std::to_string(gap) + " out of range");
  const int r = u.r();
  // x lands at 1-based position gap+1; positions within distance r-1 are the
  // original indices gap-r+2 .. gap+r-1 (1-based).
  for (int j = std::max(1, gap - r + 2); j <= std::min(s.size(), gap + r - 1); ++j)
    if (s.letters[j - 1] == x) return false;
  if (s.size() + 1 < u.length()) return true;
  Seq probe = insert_letter(s, x, gap);
  return !contains_through(probe, u, gap + 1);
}

// Least (letter, gap) admitting a proper insertion, scanning letters in
// increasing order and gaps left to right.
inline std::optional<Insertion> find_proper_insertion(const Seq& s, const Pattern& u) {
  for (Letter x = 1; x <= s.alphabet; ++x)
    for (int g = 0; g <= s.size(); ++g)
      if (can_properly_insert(s, x, g, u)) return Insertion{x, g};
  return std::nullopt;
}

namespace detail {

// Parallel variant: partitions letters across workers; the least candidate in
// (letter, gap) order wins regardless of schedule.
inline std::optional<Insertion> find_proper_insertion_mt(const Seq& s, const Pattern& u,
                                                         int threads) {
  if (threads <= 1 || s.alphabet <= 1) return find_proper_insertion(s, u);
  std::vector<std::future<std::optional<Insertion>>> jobs;
  for (Letter x = 1; x <= s.alphabet; ++x) {
    jobs.push_back(std::async(std::launch::async, [&s, &u, x]() -> std::optional<Insertion> {
      for (int g = 0; g <= s.size(); ++g)
        if (can_properly_insert(s, x, g, u)) return Insertion{x, g};
      return std::nullopt;
    }));
  }
  for (auto& job : jobs) {
    auto hit = job.get();  // letters ascending, so the first hit is least
    if (hit) {
      for (auto& rest : jobs)
        if (rest.valid()) rest.get();
      return hit;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Full saturation check of s over the alphabet [n].
//
//   Saturated          r-sparse, avoids u, no proper insertion exists
//   SemisaturatedOnly  r-sparse, every insertion blocked, but s contains u
//   ContainsForbidden  s contains u and is not semisaturated
//   NotSemisaturated   s avoids u but admits a proper insertion (or is not
//                      r-sparse; in that degenerate case no counterexample is
//                      reported)
inline SaturationReport verify(const Seq& s, int n, const Pattern& u, int threads = 1) {
  if (s.alphabet != n) {
    Seq copy = s;
    for (Letter v : copy.letters)
      if (v > n) raise(Errc::letter_out_of_alphabet, "sequence letter exceeds alphabet");
    copy.alphabet = n;
    return verify(copy, n, u, threads);
  }
  SaturationReport rep;
  rep.copy = contains(s, u);
  const bool sparse = is_r_sparse(s, u.r());
  std::optional<Insertion> proper;
  if (sparse) proper = detail::find_proper_insertion_mt(s, u, threads);
  rep.counterexample = proper;
  if (rep.copy) {
    rep.verdict = (sparse && !proper) ? Verdict::SemisaturatedOnly : Verdict::ContainsForbidden;
  } else if (sparse && !proper) {
    rep.verdict = Verdict::Saturated;
  } else {
    rep.verdict = Verdict::NotSemisaturated;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Greedy construction.
//
// Start from 1, 2, ..., r-1 and repeatedly perform the first proper insertion
// in (smallest letter, leftmost gap) order, restarting the letter scan after
// every insertion, until no letter can be inserted anywhere.

struct GreedyRun {
  Seq result;
  // State immediately before the first insertion of the largest letter n;
  // equals the final result if n was never inserted.
  Seq before_first_max;
  bool max_letter_used = false;
};

inline GreedyRun greedy_saturate_traced(
    int n, const Pattern& u,
    const std::function<void(const Seq&)>& on_insert = nullptr) {
  const int r = u.r();
  if (n < r - 1)
    raise(Errc::alphabet_too_small,
          "alphabet size " + std::to_string(n) + " below r-1 = " + std::to_string(r - 1));
  GreedyRun run;
  std::vector<Letter> init;
  for (Letter v = 1; v <= r - 1 && v <= n; ++v) init.push_back(v);
  Seq s(std::move(init), n);
  while (true) {
    auto ins = find_proper_insertion(s, u);
    if (!ins) break;
    if (ins->letter == n && !run.max_letter_used) {
      run.max_letter_used = true;
      run.before_first_max = s;
    }
    s = insert_letter(s, ins->letter, ins->gap);
    if (on_insert) on_insert(s);
  }
  if (!run.max_letter_used) run.before_first_max = s;
  run.result = std::move(s);
  return run;
}

inline Seq greedy_saturate(int n, const Pattern& u) {
  return greedy_saturate_traced(n, u).result;
}

// ---------------------------------------------------------------------------
// Conjecture scan.

struct ScanRecord {
  int n = 0;
  int length = 0;
  int delta = 0;       // length(n) - length(n-1)
  bool prefix_ok = false;
};

struct ScanResult {
  std::vector<ScanRecord> records;
  bool periodic = false;   // delta tail periodic with >= 3 full repetitions
  int period = 0;
  int preperiod = 0;       // records skipped before the periodic tail
};

// Runs the greedy construction for n = r .. n_max. prefix_ok records whether
// the greedy state just before the first insertion of letter n equals the
// n-1 output. Periodicity of the delta sequence is declared only if a period
// repeats at least 3 full times within the scan horizon.
inline ScanResult scan(const Pattern& u, int n_max) {
  const int r = u.r();
  if (n_max < r) raise(Errc::alphabet_too_small, "n_max below r");
  ScanResult out;
  Seq prev = greedy_saturate(r - 1, u);
  for (int n = r; n <= n_max; ++n) {
    GreedyRun run = greedy_saturate_traced(n, u);
    ScanRecord rec;
    rec.n = n;
    rec.length = run.result.size();
    rec.delta = run.result.size() - prev.size();
    rec.prefix_ok = run.before_first_max.letters == prev.letters;
    out.records.push_back(rec);
    prev = run.result;
  }
  const int m = static_cast<int>(out.records.size());
  for (int p = 1; p * 3 <= m && !out.periodic; ++p) {
    for (int q = 0; q + 3 * p <= m; ++q) {
      bool ok = true;
      for (int i = q; i + p < m && ok; ++i)
        ok = out.records[i].delta == out.records[i + p].delta;
      if (ok) {
        out.periodic = true;
        out.period = p;
        out.preperiod = q;
        break;
      }
    }
  }
  return out;
}

}  // namespace satseq
