#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "k2l/connectivity.hpp"
#include "k2l/witness.hpp"

namespace k2l {

/// Ordered 2-nested sequence of minimum S-T cuts: every cut has size eta,
/// avoids S u T, the source sides strictly nest, and distinct cuts are at
/// graph distance at least 2.
struct CutSequence {
  VertexSet source_side;  // S
  VertexSet sink_side;    // T
  std::vector<VertexSet> cuts;
  int eta = 0;

  /// Throws InvalidCutSequenceError when any invariant fails.
  void validate(const Graph& g) const;
};

/// eta internally disjoint S->T paths; with a cut sequence, every path meets
/// every cut in exactly one vertex, in nesting order.
struct PathSystem {
  VertexSet source_side;
  VertexSet sink_side;
  std::vector<std::vector<Vertex>> paths;
};

/// One minimalized breadth-layer cut: an inclusion-minimal st-cut contained
/// in the set of vertices at distance `layer` from s.
struct LayerCut {
  int layer = 0;
  VertexSet cut;
};

/// For each 0 < i < dist(s, t): the distance-i layer minimalized greedily
/// (ascending id; a vertex is dropped whenever the remainder still cuts).
/// Throws TooCloseError when dist(s, t) < 2.
std::vector<LayerCut> layer_cuts(const Graph& g, Vertex s, Vertex t);

/// Longest subsequence of the size-eta layer cuts whose layer indices are
/// pairwise >= 2 apart (so cut distance >= 2) and whose source sides
/// strictly nest; earliest layers win ties.
CutSequence find_2nested(const Graph& g, const VertexSet& s,
                         const VertexSet& t,
                         const std::vector<LayerCut>& cuts, int eta);

/// Menger paths for the cut sequence, validated to cross every cut exactly
/// once.
PathSystem disjoint_path_system(const Graph& g, const CutSequence& cuts);

// Exactly one case holds per gap between consecutive cuts:
//  Case1 - a connector path of length >= 2 joins two distinct paths inside
//          the closed slab, interior avoiding those two paths;
//  Case2 - some vertex of the gap lies off every path (components of the
//          leftover attach to exactly one path when the graph is sane);
//  Case3 - the paths cover the whole gap.
struct GapCase1 {
  int path_a = 0;
  int path_b = 0;
  std::vector<Vertex> connector;  // path vertex, interior..., path vertex
};
struct GapCase2 {
  VertexSet component;
  int path_index = -1;  // unique adjacent path, -1 if none
};
struct GapCase3 {
  int path_index = 0;
  Vertex first_vertex = -1;  // first gap vertex of that path
};
struct GapCase {
  int gap = 0;  // between cuts[gap] and cuts[gap+1]
  std::variant<GapCase1, GapCase2, GapCase3> c;
};

GapCase classify_gap(const Graph& g, const CutSequence& cuts,
                     const PathSystem& ps, int gap);

struct RerouteResult {
  enum class Status { applied, stuck, twins } status;
  PathSystem system;       // valid when applied
  Vertex twin_v = -1;
  Vertex twin_w = -1;
};

/// Applies the exchange for a Case2 or Case3 gap. Progress is measured by
/// (#Case1 gaps, #Case2 gaps, -total in-gap path length) increasing
/// lexicographically; an exchange that does not make progress is rolled back
/// and reported as stuck. A Case3 gap with no exchange left is checked for
/// the degree-5 twin configuration.
RerouteResult reroute(const Graph& g, const CutSequence& cuts,
                      const PathSystem& ps, const GapCase& gapcase);

/// Runs the classify/reroute loop to a fixpoint, then either extracts a
/// K_{2,ell} minor by the common-pair pigeonhole over Case1 connectors,
/// exits with a twin pair found during a stuck Case3 analysis, or reports
/// saturation with per-gap cases and pair tallies.
Witness extract_from_nested(const Graph& g, const CutSequence& cuts, int ell);

}  // namespace k2l
