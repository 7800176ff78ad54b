#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "k2l/minor_model.hpp"

namespace k2l {

struct OracleBudget {
  long long node_limit = 10'000'000;  // search tree nodes
  double time_limit_seconds = 60.0;
  int threads = 1;
};

struct NoMinor {
  long long nodes_expanded = 0;
};

struct BudgetExhausted {
  long long nodes_expanded = 0;
};

using OracleResult = std::variant<MinorModel, NoMinor, BudgetExhausted>;

/// Exhaustive K_{2,ell}-minor search. Branch sets are enumerated as connected
/// sets in ascending vertex id order (the two sides anchored at their lowest
/// ids, with min(side_a) < min(side_b)); legs are matched exactly by
/// vertex-disjoint path packing between the two sides' neighborhoods. The
/// first model in branch order is returned, so the result is canonical for a
/// given (graph, ell). NoMinor means the search space was exhausted within
/// budget. Top-level branches may be split across threads; the canonical
/// (lowest-anchor) model still wins, so output is schedule independent.
OracleResult find_k2l_minor(const Graph& g, int ell,
                            const OracleBudget& budget = {});

struct MinorSweep {
  int ell_max = 0;
  std::optional<int> largest_with_minor;
  std::vector<OracleResult> per_ell;  // index ell-1
};

/// Runs the oracle for ell = 1..ell_max and cross-checks monotonicity
/// (a K_{2,ell} minor implies one for every smaller ell).
MinorSweep minor_free_up_to(const Graph& g, int ell_max,
                            const OracleBudget& budget = {});

}  // namespace k2l
