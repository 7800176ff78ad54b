#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "k2l/graph.hpp"

namespace k2l {

/// Branch-set certificate of a K_{2,ell} minor: two side sets and ell leg
/// sets, all pairwise disjoint, each inducing a connected subgraph, with an
/// edge from every leg to each side. Extra adjacency inside or between sets
/// is allowed (minors tolerate supergraphs).
struct MinorModel {
  int ell = 0;
  VertexSet side_a;
  VertexSet side_b;
  std::vector<VertexSet> legs;
};

struct VerifyResult {
  bool ok = false;
  /// First violated clause when not ok, e.g. "overlap: side_a/leg 1".
  std::string violation;
};

/// Checks every model invariant against the host graph. Never throws on a
/// bad model; out-of-range ids are reported as violations.
VerifyResult verify_model(const Graph& g, const MinorModel& model);

// Certificate text format: line "ell <k>", line "A: id...", line "B: id...",
// then ell lines "L<i>: id..." with ids ascending and space separated.
void write_certificate(std::ostream& out, const MinorModel& model);
std::string certificate_to_string(const MinorModel& model);
MinorModel read_certificate(std::istream& in);

}  // namespace k2l
