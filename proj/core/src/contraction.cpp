#include "k2l/contraction.hpp"

#include <algorithm>
#include <numeric>

namespace k2l {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ContractionResult contract_edges(const Graph& g,
                                 const std::vector<Edge>& edges) {
  UnionFind uf(g.vertex_count());
  for (auto [u, v] : edges) {
    if (!g.has_edge(u, v)) throw NotAnEdgeError(u, v);
    uf.unite(u, v);
  }

  // Class representatives are minima, so numbering them in ascending order
  // gives new ids by ascending minimum old id.
  std::vector<Vertex> mapping(g.vertex_count(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (uf.find(v) == v) mapping[v] = next++;
  for (Vertex v = 0; v < g.vertex_count(); ++v) mapping[v] = mapping[uf.find(v)];

  std::vector<Edge> quotient;
  for (auto [u, v] : g.edges()) {
    Vertex a = mapping[u], b = mapping[v];
    if (a == b) continue;
    quotient.emplace_back(std::min(a, b), std::max(a, b));
  }
  return {build_graph(next, quotient), std::move(mapping)};
}

}  // namespace k2l
