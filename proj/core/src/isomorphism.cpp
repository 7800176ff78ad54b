#include "k2l/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace k2l {

namespace {

// Color refinement on the disjoint union of both graphs so color ids live in
// one namespace; returns colors for g1's vertices then g2's.
std::vector<int> refine_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  const int n = n1 + g2.vertex_count();
  auto neighbors = [&](int v) -> std::vector<int> {
    std::vector<int> out;
    if (v < n1) {
      out = g1.neighbors(v);
    } else {
      for (Vertex u : g2.neighbors(v - n1)) out.push_back(u + n1);
    }
    return out;
  };
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v)
    color[v] = v < n1 ? g1.degree(v) : g2.degree(v - n1);
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> relabel;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      for (int u : neighbors(v)) sig.push_back(color[u]);
      std::sort(sig.begin(), sig.end());
      auto key = std::make_pair(color[v], std::move(sig));
      auto [it, _] = relabel.try_emplace(key, static_cast<int>(relabel.size()));
      next[v] = it->second;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

bool extend(const Graph& g1, const Graph& g2, const std::vector<int>& c1,
            const std::vector<int>& c2, std::vector<int>& map12,
            std::vector<int>& map21, Vertex v) {
  const int n = g1.vertex_count();
  if (v == n) return true;
  for (Vertex w = 0; w < n; ++w) {
    if (map21[w] >= 0 || c2[w] != c1[v]) continue;
    bool ok = true;
    for (Vertex u = 0; u < v && ok; ++u)
      if (g1.has_edge(u, v) != g2.has_edge(map12[u], w)) ok = false;
    if (!ok) continue;
    map12[v] = w;
    map21[w] = v;
    if (extend(g1, g2, c1, c2, map12, map21, v + 1)) return true;
    map12[v] = -1;
    map21[w] = -1;
  }
  return false;
}

}  // namespace

bool is_isomorphic_small(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() > kIsomorphismVertexCap ||
      g2.vertex_count() > kIsomorphismVertexCap)
    throw TooLargeError("isomorphism check capped at 16 vertices");
  if (g1.vertex_count() != g2.vertex_count()) return false;
  if (g1.edge_count() != g2.edge_count()) return false;

  auto color = refine_union(g1, g2);
  std::vector<int> c1(color.begin(), color.begin() + g1.vertex_count());
  std::vector<int> c2(color.begin() + g1.vertex_count(), color.end());
  auto sorted1 = c1;
  auto sorted2 = c2;
  std::sort(sorted1.begin(), sorted1.end());
  std::sort(sorted2.begin(), sorted2.end());
  if (sorted1 != sorted2) return false;

  std::vector<int> map12(g1.vertex_count(), -1), map21(g1.vertex_count(), -1);
  return extend(g1, g2, c1, c2, map12, map21, 0);
}

}  // namespace k2l
