#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "k2l/minor_model.hpp"

namespace k2l {

/// Steiner tree of X = N(x) inside G minus x with every leaf in X. The local
/// search mutates copies; validate() checks the full invariant set.
class SteinerTree {
 public:
  SteinerTree(const Graph& g, Vertex x, VertexSet terminals);

  const Graph& host() const { return *g_; }
  Vertex excluded_vertex() const { return x_; }
  const VertexSet& terminals() const { return terminals_; }

  bool in_tree(Vertex v) const { return vertices_.contains(v); }
  int tree_degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& tree_neighbors(Vertex v) const { return adj_[v]; }
  bool has_tree_edge(Vertex u, Vertex v) const;

  const VertexSet& vertices() const { return vertices_; }
  int edge_count() const { return edges_; }
  std::vector<Edge> tree_edges() const;

  VertexSet leaves() const;  // tree degree <= 1
  int leaf_count() const;

  /// Unique tree path from a to b (inclusive).
  std::vector<Vertex> tree_path(Vertex a, Vertex b) const;

  void add_vertex(Vertex v);
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  /// Adds a path; endpoints may already be tree vertices.
  void add_path(const std::vector<Vertex>& path);
  /// Repeatedly removes non-terminal leaves.
  void prune_nonterminal_leaves();

  /// Throws Error unless this is a tree inside G minus x spanning all
  /// terminals with every leaf a terminal.
  void validate() const;

 private:
  const Graph* g_;
  Vertex x_;
  VertexSet terminals_;
  VertexSet vertices_;
  std::vector<std::vector<Vertex>> adj_;  // sorted
  int edges_ = 0;
};

/// Builds a first tree by attaching each terminal along a shortest path to
/// the growing tree (terminals in ascending id order), then pruning.
/// Throws TerminalsDisconnectedError when N(x) spans several components of
/// G minus x.
SteinerTree initial_steiner_tree(const Graph& g, Vertex x);

enum class XLabel { branching, non_strictly_internal, even, odd };

/// One maximal path of the tree minus its branching vertices, oriented from
/// its lower-id endpoint. x_vertices lists the terminals on it in order;
/// position parity (1-based) gives the even/odd labels of the strictly
/// internal ones.
struct BarePath {
  std::vector<Vertex> vertices;
  std::vector<Vertex> x_vertices;
  int even_count = 0;
  int odd_count = 0;
};

struct PathClassification {
  VertexSet branching;  // tree vertices of degree >= 3
  std::vector<BarePath> bare_paths;
  std::vector<std::pair<Vertex, XLabel>> labels;  // per terminal, ascending
  int branching_in_x = 0;
  int non_strictly_internal = 0;  // path-endpoint terminals (includes leaves)
  int even = 0;
  int odd = 0;
};

PathClassification classify(const SteinerTree& t);

enum class MoveKind { PathSwap, ComponentReroute, QuAugment, DoubleQuCombine };

/// A leaf-increasing exchange: add the listed paths (interiors outside the
/// tree), remove the listed tree edges, then prune. The untargeted fallback
/// search reports as PathSwap.
struct Move {
  MoveKind kind;
  std::vector<std::vector<Vertex>> added_paths;
  std::vector<Edge> removed_tree_edges;
};

/// First applicable move in catalog order: QuAugment over even terminals
/// ascending, then ComponentReroute, then PathSwap, then DoubleQuCombine,
/// then an untargeted ear sweep. nullopt means saturation.
std::optional<Move> find_improving_move(const Graph& g, Vertex x,
                                        const SteinerTree& t);

/// Applies a move and re-validates; throws Error if the result is not a
/// valid Steiner tree with strictly more leaves.
SteinerTree apply_move(const SteinerTree& t, const Move& move);

struct SaturationInfo {
  SteinerTree tree;
  PathClassification classification;
};

struct MaxLeafResult {
  std::variant<MinorModel, SaturationInfo> outcome;
  int iterations = 0;
  std::map<MoveKind, int> move_counts;  // telemetry
};

/// Hill-climbs the move catalog. On reaching ell leaves returns the model
/// side_a = {x}, side_b = internal tree vertices, legs = the ell lowest-id
/// leaves as singletons. Throws IterationCapExceededError when the cap stops
/// the loop before saturation or success.
MaxLeafResult max_leaf_search(const Graph& g, Vertex x, int ell,
                              std::optional<int> iteration_cap = std::nullopt);

/// Vertices of degree greater than 7*ell, ascending.
std::vector<Vertex> degree_scan(const Graph& g, int ell);

}  // namespace k2l
