#pragma once

#include <vector>

#include "k2l/graph.hpp"

namespace k2l {

/// eta(S, T): the minimum size of a vertex cut C inside V \ (S u T) whose
/// removal separates S from T. Equals the maximum number of internally
/// disjoint S-T paths (computed by unit-vertex-capacity flow with vertex
/// splitting). Requires S, T nonempty, disjoint, and with no S-T edge;
/// otherwise no such cut exists and NotSeparableError is thrown.
int st_connectivity(const Graph& g, const VertexSet& s, const VertexSet& t);

/// A minimum S-T vertex cut, canonical choice: the cut closest to S (the
/// standard source-side residual cut). Deterministic.
VertexSet min_vertex_cut(const Graph& g, const VertexSet& s,
                         const VertexSet& t);

/// eta(S, T) internally disjoint S->T paths. Interiors avoid S u T and are
/// pairwise disjoint; endpoints lie in S resp. T and may repeat. Flow
/// augmentation and path decomposition walk neighbors in ascending id order,
/// so the result is deterministic.
std::vector<std::vector<Vertex>> disjoint_st_paths(const Graph& g,
                                                   const VertexSet& s,
                                                   const VertexSet& t);

/// Global vertex connectivity. Minimum of st_connectivity over non-adjacent
/// pairs, with the usual convention kappa(K_n) = n - 1. Requires n >= 2.
int vertex_connectivity(const Graph& g);

}  // namespace k2l
