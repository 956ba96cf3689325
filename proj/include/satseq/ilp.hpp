#pragma once

// The 0-1 integer program for Sat(n, u): pattern-matrix enumeration, placement
// enumeration in the n x N grid, model construction, and an exact internal
// branch-and-bound solver.
//
// A u-pattern is an r x l 0-1 matrix with one 1 per column whose row indices,
// read column by column, spell a sequence isomorphic to u. A u+ (u-) pattern
// has r x (l-1) shape with a single doubled column, read with its numerically
// higher (lower) row first.
//
// The grid variable x[i][j] = 1 says position j of the decoded sequence holds
// letter i. y variables mark placements missing exactly one cell; they appear
// in four families of saturation constraints, one per way of inserting a
// letter next to an occupied column:
//
//   insert i before column j, resident > i   ->  plain or u- completions
//   insert i after  column j, resident < i   ->  plain or u- completions
//   insert i after  column j, resident > i   ->  plain or u+ completions
//   insert i before column j, resident < i   ->  plain or u+ completions
//
// The pairing follows from the reading order of the doubled column (the
// inserted letter reads first exactly when it is inserted before the
// resident); both exact engines agreeing on every test instance pins it down.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "satseq/core.hpp"
#include "satseq/saturation.hpp"

namespace satseq {

enum class MatrixKind { U, UPlus, UMinus };

inline const char* matrix_kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::U: return "U";
    case MatrixKind::UPlus: return "U+";
    case MatrixKind::UMinus: return "U-";
  }
  return "?";
}

// An r x cols 0-1 matrix given by its one-positions (row, col), 1-based,
// sorted column-major. doubled_col = 0 for plain kind.
struct PatternMatrixClass {
  MatrixKind kind = MatrixKind::U;
  int rows = 0, cols = 0;
  std::vector<std::pair<int, int>> ones;
  int doubled_col = 0;
};

// All matrices of the kind over distinct row-labelings of u's letters.
inline std::vector<PatternMatrixClass> enumerate_pattern_matrices(const Pattern& u,
                                                                  MatrixKind kind) {
  const int r = u.r(), len = u.length();
  const auto& a = u.letters();
  std::vector<int> label(r);  // letter c -> row label[c-1]
  for (int c = 0; c < r; ++c) label[c] = c + 1;
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<PatternMatrixClass> out;
  do {
    if (kind == MatrixKind::U) {
      PatternMatrixClass m;
      m.kind = kind;
      m.rows = r;
      m.cols = len;
      for (int k = 0; k < len; ++k) m.ones.push_back({label[a[k] - 1], k + 1});
      std::sort(m.ones.begin(), m.ones.end(),
                [](auto& p, auto& q) { return std::tie(p.second, p.first) < std::tie(q.second, q.first); });
      if (seen.insert(m.ones).second) out.push_back(std::move(m));
      continue;
    }
    // merge adjacent reading positions (k, k+1) into one doubled column
    for (int k = 0; k + 1 < len; ++k) {
      int w1 = label[a[k] - 1], w2 = label[a[k + 1] - 1];
      if (w1 == w2) continue;
      bool first_is_higher = w1 > w2;
      if ((kind == MatrixKind::UPlus) != first_is_higher) continue;
      PatternMatrixClass m;
      m.kind = kind;
      m.rows = r;
      m.cols = len - 1;
      for (int t = 0; t < len; ++t) {
        int col = t <= k ? t + 1 : t;  // positions k and k+1 share column k+1
        m.ones.push_back({label[a[t] - 1], col});
      }
      m.doubled_col = k + 1;
      std::sort(m.ones.begin(), m.ones.end(),
                [](auto& p, auto& q) { return std::tie(p.second, p.first) < std::tie(q.second, q.first); });
      if (seen.insert(m.ones).second) out.push_back(std::move(m));
    }
  } while (std::next_permutation(label.begin(), label.end()));
  std::sort(out.begin(), out.end(),
            [](const PatternMatrixClass& x, const PatternMatrixClass& y) { return x.ones < y.ones; });
  return out;
}

// A copy of some matrix of the class in the all-ones n x N grid: an increasing
// row map and increasing column choice applied to the matrix's one-positions.
struct Placement {
  MatrixKind kind = MatrixKind::U;
  std::vector<std::pair<int, int>> cells;  // (row in [n], col in [N]), column-major
  int doubled_col = 0;                     // grid column holding two cells; 0 for U
};

namespace detail {

template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace detail

inline std::vector<Placement> enumerate_placements(int n, int N, const Pattern& u,
                                                   MatrixKind kind) {
  if (n < u.r() || N < u.length() - 1)
    raise(Errc::grid_too_small, "grid must satisfy n >= r and N >= l-1");
  std::vector<Placement> out;
  for (const auto& m : enumerate_pattern_matrices(u, kind)) {
    if (m.cols > N) continue;
    detail::for_each_combination(n, m.rows, [&](const std::vector<int>& rows) {
      detail::for_each_combination(N, m.cols, [&](const std::vector<int>& cols) {
        Placement p;
        p.kind = kind;
        p.cells.reserve(m.ones.size());
        for (auto [mr, mc] : m.ones) p.cells.push_back({rows[mr - 1], cols[mc - 1]});
        if (m.doubled_col) p.doubled_col = cols[m.doubled_col - 1];
        out.push_back(std::move(p));
      });
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Model.

struct LinTerm {
  long long coef;
  int var;  // x(i,j) -> (i-1)*N + (j-1); y(p) -> n*N + p
};

enum class Sense { LE, GE, EQ };

struct LinConstraint {
  std::string name;
  std::vector<LinTerm> terms;
  Sense sense = Sense::LE;
  long long rhs = 0;
};

struct IlpModel {
  int n = 0, N = 0;
  Pattern u;
  std::vector<Placement> placements;  // plain block, then U+, then U-
  int num_plain = 0, num_plus = 0, num_minus = 0;
  // placement indices through each grid cell, per class
  std::vector<std::vector<int>> at_plain, at_plus, at_minus;
  bool empty_guard = false;  // anchor x_1_1 = 1 added for r = 1, l >= 2

  int x_var(int i, int j) const { return (i - 1) * N + (j - 1); }
  int y_var(int p) const { return n * N + p; }
  int cell_index(int i, int j) const { return (i - 1) * N + (j - 1); }
  int num_x() const { return n * N; }
  int var_count() const { return n * N + static_cast<int>(placements.size()); }
  std::string var_name(int v) const {
    if (v < num_x())
      return "x_" + std::to_string(v / N + 1) + "_" + std::to_string(v % N + 1);
    return "y_" + std::to_string(v - num_x());
  }

  long long constraint_count() const {
    const int r = u.r();
    long long c = num_plain;                                  // no-copy rows
    c += 2LL * placements.size();                             // y linking
    c += 4LL * n * N;                                         // saturation families
    c += N;                                                   // one per column
    c += N - 1;                                               // left-justified
    c += static_cast<long long>(n) * std::max(0, N - r + 1);  // sparsity windows
    c += r - 1;                                               // anchors
    if (empty_guard) c += 1;
    return c;
  }

  // Enumerates every constraint in a fixed deterministic order.
  template <typename Fn>
  void for_each_constraint(Fn&& fn) const {
    const int r = u.r();
    const long long len = u.length();
    LinConstraint row;
    auto emit = [&](const char* name_prefix, std::initializer_list<long long> idx, Sense s,
                    long long rhs) {
      row.name = name_prefix;
      for (long long id : idx) row.name += "_" + std::to_string(id);
      row.sense = s;
      row.rhs = rhs;
      fn(row);
      row.terms.clear();
    };
    for (int p = 0; p < num_plain; ++p) {
      for (auto [i, j] : placements[p].cells) row.terms.push_back({1, x_var(i, j)});
      emit("avoid", {p}, Sense::LE, len - 1);
    }
    for (int p = 0; p < static_cast<int>(placements.size()); ++p) {
      row.terms.push_back({len - 1, y_var(p)});
      for (auto [i, j] : placements[p].cells) row.terms.push_back({-1, x_var(i, j)});
      emit("ylink_hi", {p}, Sense::LE, 0);
      row.terms.push_back({1, y_var(p)});
      for (auto [i, j] : placements[p].cells) row.terms.push_back({-1, x_var(i, j)});
      emit("ylink_lo", {p}, Sense::GE, -len + 2);
    }
    // the four insertion families
    auto saturation_row = [&](const char* name, int i, int j, bool resident_above,
                              bool window_before, const std::vector<std::vector<int>>& extra) {
      for (int p : at_plain[cell_index(i, j)]) row.terms.push_back({1, y_var(p)});
      for (int p : extra[cell_index(i, j)]) row.terms.push_back({1, y_var(p)});
      if (resident_above)
        for (int t = i + 1; t <= n; ++t) row.terms.push_back({-1, x_var(t, j)});
      else
        for (int t = 1; t < i; ++t) row.terms.push_back({-1, x_var(t, j)});
      int lo = window_before ? j - r + 1 : j - r + 2;
      int hi = window_before ? j + r - 2 : j + r - 1;
      for (int t = std::max(1, lo); t <= std::min(N, hi); ++t)
        row.terms.push_back({1, x_var(i, t)});
      emit(name, {i, j}, Sense::GE, 0);
    };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= N; ++j) saturation_row("before_lt", i, j, true, true, at_minus);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= N; ++j) saturation_row("after_gt", i, j, false, false, at_minus);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= N; ++j) saturation_row("after_lt", i, j, true, false, at_plus);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= N; ++j) saturation_row("before_gt", i, j, false, true, at_plus);
    for (int j = 1; j <= N; ++j) {
      for (int i = 1; i <= n; ++i) row.terms.push_back({1, x_var(i, j)});
      emit("col", {j}, Sense::LE, 1);
    }
    for (int j = 1; j < N; ++j) {
      for (int i = 1; i <= n; ++i) row.terms.push_back({1, x_var(i, j)});
      for (int i = 1; i <= n; ++i) row.terms.push_back({-1, x_var(i, j + 1)});
      emit("just", {j}, Sense::GE, 0);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j + r - 1 <= N; ++j) {
        for (int t = j; t <= j + r - 1; ++t) row.terms.push_back({1, x_var(i, t)});
        emit("sparse", {i, j}, Sense::LE, 1);
      }
    for (int i = 1; i <= r - 1; ++i) {
      row.terms.push_back({1, x_var(i, i)});
      emit("anchor", {i}, Sense::EQ, 1);
    }
    if (empty_guard) {
      row.terms.push_back({1, x_var(1, 1)});
      emit("anchor", {1}, Sense::EQ, 1);
    }
  }
};

// Builds the full binary program on the n x N grid. N must exceed Sat(n, u)
// for the optimum to equal Sat(n, u); smaller N yields Infeasible from the
// solver.
inline IlpModel build_ilp(int n, int N, const Pattern& u) {
  if (n < u.r()) raise(Errc::grid_too_small, "need n >= r");
  if (N < 1 || N < u.r() - 1) raise(Errc::grid_too_small, "need N >= max(1, r-1)");
  IlpModel m;
  m.n = n;
  m.N = N;
  m.u = u;
  if (N >= u.length() - 1) {
    auto plain = enumerate_placements(n, N, u, MatrixKind::U);
    auto plus = enumerate_placements(n, N, u, MatrixKind::UPlus);
    auto minus = enumerate_placements(n, N, u, MatrixKind::UMinus);
    m.num_plain = static_cast<int>(plain.size());
    m.num_plus = static_cast<int>(plus.size());
    m.num_minus = static_cast<int>(minus.size());
    m.placements = std::move(plain);
    m.placements.insert(m.placements.end(), plus.begin(), plus.end());
    m.placements.insert(m.placements.end(), minus.begin(), minus.end());
  }
  m.at_plain.assign(static_cast<size_t>(n) * N, {});
  m.at_plus.assign(static_cast<size_t>(n) * N, {});
  m.at_minus.assign(static_cast<size_t>(n) * N, {});
  for (int p = 0; p < static_cast<int>(m.placements.size()); ++p) {
    auto& lists = p < m.num_plain ? m.at_plain
                  : p < m.num_plain + m.num_plus ? m.at_plus
                                                 : m.at_minus;
    for (auto [i, j] : m.placements[p].cells) lists[m.cell_index(i, j)].push_back(p);
  }
  m.empty_guard = (u.r() == 1 && u.length() >= 2);
  return m;
}

// ---------------------------------------------------------------------------
// Internal exact solver: depth-first branch and bound on the x grid in
// column-major order. One-per-column and left-justification are built into
// the branching; anchors and sparsity windows are propagated eagerly; the y
// values are forced by the linking rows to y = [placement misses exactly one
// cell], so only x is searched. Closing the sequence is tried before longer
// fills and letters ascend, which makes the returned witness the
// lexicographically least optimum.

struct IlpLimits {
  long long max_nodes = 200'000'000;
};

struct IlpSolution {
  int objective = 0;
  Seq decoded;
  long long nodes = 0;
};

namespace detail {

class IlpSolver {
 public:
  IlpSolver(const IlpModel& m, IlpLimits limits) : m_(m), limits_(limits) {
    fcount_.assign(m_.placements.size(), 0);
    col_.assign(m_.N + 2, 0);
    anchored_ = m_.u.r() >= 2 ? m_.u.r() - 1 : (m_.empty_guard ? 1 : 0);
  }

  IlpSolution solve() {
    best_len_ = m_.N + 1;
    found_ = false;
    dfs(1);
    if (nodes_ >= limits_.max_nodes)
      raise(Errc::resource_limit,
            "node limit reached; best length so far: " +
                (found_ ? std::to_string(best_len_) : std::string("none")));
    if (!found_) raise(Errc::infeasible, "no feasible assignment; is N > Sat(n, u)?");
    IlpSolution sol;
    sol.objective = best_len_;
    sol.decoded = Seq(std::vector<Letter>(best_.begin(), best_.begin() + best_len_), m_.n);
    sol.nodes = nodes_;
    return sol;
  }

 private:
  void dfs(int j) {
    if (nodes_ >= limits_.max_nodes) return;
    ++nodes_;
    const int k = j - 1;  // sequence length if closed here
    if (k >= anchored_ && k < best_len_ && closure_feasible(k)) {
      best_len_ = k;
      best_.assign(col_.begin() + 1, col_.begin() + 1 + k);
      found_ = true;
    }
    if (j > m_.N || j >= best_len_) return;
    const int r = m_.u.r();
    Letter lo = 1, hi = static_cast<Letter>(m_.n);
    if (j <= anchored_ && m_.u.r() >= 2) lo = hi = static_cast<Letter>(j);
    if (j == 1 && m_.empty_guard) lo = hi = 1;
    for (Letter c = lo; c <= hi; ++c) {
      bool clash = false;
      for (int t = std::max(1, j - r + 1); t < j && !clash; ++t) clash = col_[t] == c;
      if (clash) continue;
      if (!apply(c, j)) {
        undo(c, j);
        continue;
      }
      col_[j] = c;
      dfs(j + 1);
      col_[j] = 0;
      undo(c, j);
    }
  }

  // Bumps fill counts for placements through (c, j); false if a plain
  // placement becomes fully filled (a copy of u would exist).
  bool apply(Letter c, int j) {
    const int cell = m_.cell_index(c, j);
    const long long full = m_.u.length();
    bool ok = true;
    for (int p : m_.at_plain[cell])
      if (++fcount_[p] == full) ok = false;
    for (int p : m_.at_plus[cell]) ++fcount_[p];
    for (int p : m_.at_minus[cell]) ++fcount_[p];
    return ok;
  }

  void undo(Letter c, int j) {
    const int cell = m_.cell_index(c, j);
    for (int p : m_.at_plain[cell]) --fcount_[p];
    for (int p : m_.at_plus[cell]) --fcount_[p];
    for (int p : m_.at_minus[cell]) --fcount_[p];
  }

  // Number of placements in the class lists at (i, col) missing exactly one
  // cell, i.e. with forced y = 1.
  bool has_ready(const std::vector<std::vector<int>>& lists, int i, int col) const {
    const int want = m_.u.length() - 1;
    for (int p : lists[m_.cell_index(i, col)])
      if (fcount_[p] == want) return true;
    return false;
  }

  int window_count(int i, int lo, int hi, int k) const {
    int cnt = 0;
    for (int t = std::max(1, lo); t <= std::min(k, hi); ++t)
      if (col_[t] == i) ++cnt;
    return cnt;
  }

  // All four saturation families hold for the length-k prefix.
  bool closure_feasible(int k) const {
    const int r = m_.u.r();
    for (int col = 1; col <= k; ++col) {
      const Letter res = col_[col];
      for (int i = 1; i <= m_.n; ++i) {
        if (i == res) continue;
        bool before_ok = window_count(i, col - r + 1, col + r - 2, k) > 0;
        bool after_ok = window_count(i, col - r + 2, col + r - 1, k) > 0;
        if (i < res) {
          // insert i before col (reads first, lower row): plain or U-
          if (!before_ok && !has_ready(m_.at_plain, i, col) && !has_ready(m_.at_minus, i, col))
            return false;
          // insert i after col (resident reads first, higher row): plain or U+
          if (!after_ok && !has_ready(m_.at_plain, i, col) && !has_ready(m_.at_plus, i, col))
            return false;
        } else {
          // insert i after col (resident reads first, lower row): plain or U-
          if (!after_ok && !has_ready(m_.at_plain, i, col) && !has_ready(m_.at_minus, i, col))
            return false;
          // insert i before col (reads first, higher row): plain or U+
          if (!before_ok && !has_ready(m_.at_plain, i, col) && !has_ready(m_.at_plus, i, col))
            return false;
        }
      }
    }
    return true;
  }

  const IlpModel& m_;
  IlpLimits limits_;
  std::vector<int> fcount_;
  std::vector<Letter> col_;
  std::vector<Letter> best_;
  int anchored_ = 0;
  int best_len_ = 0;
  bool found_ = false;
  long long nodes_ = 0;
};

}  // namespace detail

// Exact optimum of the model. The decoded sequence is re-checked by the
// saturation verifier before being returned.
inline IlpSolution solve_ilp(const IlpModel& m, IlpLimits limits = {}) {
  detail::IlpSolver solver(m, limits);
  IlpSolution sol = solver.solve();
  if (verify(sol.decoded, m.n, m.u).verdict != Verdict::Saturated)
    raise(Errc::internal, "ILP optimum decoded to a non-saturated sequence");
  return sol;
}

}  // namespace satseq
