#pragma once

#include "k2l/graph.hpp"

namespace k2l {

/// Exact isomorphism decision for graphs with at most 16 vertices (degree
/// refinement plus backtracking). Throws TooLargeError beyond 16 vertices.
bool is_isomorphic_small(const Graph& g1, const Graph& g2);

inline constexpr int kIsomorphismVertexCap = 16;

}  // namespace k2l
