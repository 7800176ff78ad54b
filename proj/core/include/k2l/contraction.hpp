#pragma once

#include <vector>

#include "k2l/graph.hpp"

namespace k2l {

struct ContractionResult {
  Graph graph;
  /// old vertex id -> new vertex id. New ids are assigned by ascending
  /// minimum old id per merged class.
  std::vector<Vertex> mapping;
};

/// Contracts the listed edges simultaneously (quotient by the connected
/// classes they span). Parallel edges merge and loops vanish, so the result
/// is simple. Throws NotAnEdgeError when a listed pair is not an edge.
ContractionResult contract_edges(const Graph& g, const std::vector<Edge>& edges);

}  // namespace k2l
