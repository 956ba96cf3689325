#pragma once

// Cross-validated exact computation of Sat(n, u): the combinatorial search
// and the 0-1 program must agree, and any disagreement is a hard error.

#include <optional>
#include <string>

#include "satseq/ilp.hpp"
#include "satseq/search.hpp"

namespace satseq {

enum class Engine { Both, Search, Ilp };

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Both: return "both";
    case Engine::Search: return "search";
    case Engine::Ilp: return "ilp";
  }
  return "?";
}

struct ExactResult {
  int value = 0;
  Seq witness;
  bool engines_agree = false;  // true only when both engines ran
  Engine engine = Engine::Both;
  int n_cols = 0;            // N used by the program (greedy length + 1)
  int ilp_vars = 0;          // 0 unless the program ran
  long long ilp_constraints = 0;
  long long ilp_nodes = 0;
};

// The greedy output is saturated, so its length bounds Sat(n, u) from above
// and N = length + 1 is guaranteed to exceed Sat(n, u).
inline ExactResult sat_exact(int n, const Pattern& u, Engine engine = Engine::Both,
                             std::optional<int> manual_N = std::nullopt,
                             IlpLimits limits = {}) {
  if (n < u.r()) raise(Errc::alphabet_too_small, "need n >= r");
  ExactResult res;
  res.engine = engine;
  int greedy_len = greedy_saturate(n, u).size();
  res.n_cols = manual_N ? *manual_N : greedy_len + 1;

  std::optional<SearchOutcome> found;
  if (engine != Engine::Ilp) found = search_sat(n, u, greedy_len);

  std::optional<IlpSolution> ilp;
  if (engine != Engine::Search) {
    IlpModel model = build_ilp(n, res.n_cols, u);
    res.ilp_vars = model.var_count();
    res.ilp_constraints = model.constraint_count();
    ilp = solve_ilp(model, limits);
    res.ilp_nodes = ilp->nodes;
  }

  if (found && ilp && found->value != ilp->objective)
    raise(Errc::engine_disagreement,
          "search found " + std::to_string(found->value) + " (witness " +
              format_seq(found->witness) + ") but the 0-1 program found " +
              std::to_string(ilp->objective) + " (witness " + format_seq(ilp->decoded) + ")");

  res.engines_agree = found && ilp;
  if (found) {
    res.value = found->value;
    res.witness = found->witness;
  } else {
    res.value = ilp->objective;
    res.witness = ilp->decoded;
  }
  return res;
}

}  // namespace satseq
