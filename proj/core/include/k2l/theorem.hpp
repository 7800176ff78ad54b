#pragma once

#include <optional>

#include "k2l/nested_cuts.hpp"

namespace k2l {

/// Driver thresholds. Defaults follow the bounded-size argument exactly:
/// d = ell^3 / 2, required distance 2*(d+1)^ell and size threshold
/// (7*ell)^(2*(d+1)^ell). Those are astronomical for any real input, so the
/// overrides let desk-scale graphs exercise the full machinery; without them
/// the driver answers honestly that the graph is below threshold.
struct DriverConfig {
  int ell = 2;
  std::optional<long long> d_override;
  std::optional<long long> distance_override;
  std::optional<long long> n_threshold_override;
  bool skip_hypotheses = false;
};

/// Full pipeline: (1) hypothesis checks (min degree 5, 3-connectivity, no
/// degree-5 twins -- a twin pair is returned as the witness); (2) degree scan
/// against 7*ell, dispatching to the max-leaf engine at the first high-degree
/// vertex; (3) otherwise layered cuts from the lexicographically least
/// diametral pair, the k-maximization over cut pairs, and either the direct
/// side-to-side model (k = ell) or the assembled 2-nested sequence handed to
/// extract_from_nested.
Witness theorem_driver(const Graph& g, const DriverConfig& cfg);

}  // namespace k2l
