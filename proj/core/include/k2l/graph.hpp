#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k2l/errors.hpp"

namespace k2l {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Set of vertex ids with ascending iteration order.
///
/// Backed by a sorted vector; every algorithm in the library iterates sets in
/// ascending id order so that outputs are reproducible.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet single(Vertex v) { return VertexSet({v}); }
  static VertexSet range(Vertex lo, Vertex hi);  // [lo, hi)

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  Vertex min() const { return ids_.front(); }

  const std::vector<Vertex>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet unite(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> ids_;  // sorted, unique
};

/// Simple undirected graph over dense vertex ids 0..n-1, immutable after
/// construction. Adjacency lists are sorted; all operations are pure reads,
/// so a Graph can be shared freely across threads.
class Graph {
 public:
  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  int degree(Vertex v) const { return static_cast<int>(adj_[check(v)].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[check(v)]; }
  bool has_edge(Vertex u, Vertex v) const;

  int min_degree() const;
  int max_degree() const;

  /// All edges as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  /// Closed neighborhood N[v] as a sorted vector.
  std::vector<Vertex> closed_neighborhood(Vertex v) const;

  friend Graph build_graph(int n, const std::vector<Edge>& edges);

 private:
  Graph() = default;
  Vertex check(Vertex v) const {
    if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
    return v;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

/// Canonicalizes the edge list: duplicates collapse, self loops are rejected.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// BFS distance classes from a source vertex. layers[i] holds the vertices at
/// distance exactly i; unreachable vertices do not appear.
struct Layering {
  Vertex source = 0;
  std::vector<VertexSet> layers;

  /// Distance of v from the source, or nullopt when unreachable.
  std::optional<int> layer_of(Vertex v) const;
};

Layering bfs_layering(const Graph& g, Vertex s);

/// min over a in A, b in B of dist(a, b); 0 when the sets intersect and
/// nullopt when no path joins them.
std::optional<int> distance_between_sets(const Graph& g, const VertexSet& a,
                                         const VertexSet& b);

/// All pairs u < v with identical closed neighborhoods (such pairs are always
/// adjacent). With degree_filter set, only pairs of that degree are returned.
/// Output is sorted lexicographically.
std::vector<Edge> find_twins(const Graph& g,
                             std::optional<int> degree_filter = std::nullopt);

/// True when every vertex of the set is reachable from every other inside the
/// induced subgraph. The empty set counts as disconnected.
bool induces_connected(const Graph& g, const VertexSet& s);

/// Vertices reachable from any seed in G with the given set removed.
VertexSet reachable_avoiding(const Graph& g, const VertexSet& seeds,
                             const VertexSet& removed);

}  // namespace k2l
