#include "k2l/graph.hpp"

#include <algorithm>
#include <queue>

namespace k2l {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(Vertex lo, Vertex hi) {
  std::vector<Vertex> ids;
  for (Vertex v = lo; v < hi; ++v) ids.push_back(v);
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) ids_.erase(it);
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out));
  VertexSet r;
  r.ids_ = std::move(out);
  return r;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
  VertexSet r;
  r.ids_ = std::move(out);
  return r;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out));
  VertexSet r;
  r.ids_ = std::move(out);
  return r;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : static_cast<int>(adj_[0].size());
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const {
  std::vector<Vertex> out = adj_[check(v)];
  auto it = std::lower_bound(out.begin(), out.end(), v);
  out.insert(it, v);
  return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw ParamTooSmallError("vertex count must be nonnegative");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
    if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
    if (u == v) throw SelfLoopError(u);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  g.m_ = 0;
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    g.m_ += static_cast<int>(a.size());
  }
  g.m_ /= 2;
  return g;
}

std::optional<int> Layering::layer_of(Vertex v) const {
  for (size_t i = 0; i < layers.size(); ++i)
    if (layers[i].contains(v)) return static_cast<int>(i);
  return std::nullopt;
}

Layering bfs_layering(const Graph& g, Vertex s) {
  if (s < 0 || s >= g.vertex_count())
    throw VertexOutOfRangeError(s, g.vertex_count());
  Layering out;
  out.source = s;
  std::vector<int> dist(g.vertex_count(), -1);
  dist[s] = 0;
  std::vector<Vertex> frontier = {s};
  while (!frontier.empty()) {
    out.layers.push_back(VertexSet(frontier));
    std::vector<Vertex> next;
    for (Vertex u : frontier)
      for (Vertex v : g.neighbors(u))
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          next.push_back(v);
        }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::optional<int> distance_between_sets(const Graph& g, const VertexSet& a,
                                         const VertexSet& b) {
  if (a.empty() || b.empty())
    throw ParamTooSmallError("distance_between_sets: empty set");
  if (a.intersects(b)) return 0;
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  for (Vertex v : a) {
    dist[v] = 0;
    q.push(v);
  }
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      if (b.contains(v)) return dist[v];
      q.push(v);
    }
  }
  return std::nullopt;
}

std::vector<Edge> find_twins(const Graph& g, std::optional<int> degree_filter) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (degree_filter && g.degree(u) != *degree_filter) continue;
    // Twins have equal closed neighborhoods, hence are adjacent.
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      if (degree_filter && g.degree(v) != *degree_filter) continue;
      if (g.closed_neighborhood(u) == g.closed_neighborhood(v))
        out.emplace_back(u, v);
    }
  }
  return out;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  std::vector<Vertex> stack = {s.min()};
  VertexSet seen = VertexSet::single(s.min());
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u))
      if (s.contains(v) && !seen.contains(v)) {
        seen.insert(v);
        stack.push_back(v);
      }
  }
  return seen.size() == s.size();
}

VertexSet reachable_avoiding(const Graph& g, const VertexSet& seeds,
                             const VertexSet& removed) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (Vertex v : seeds)
    if (!removed.contains(v)) {
      seen[v] = 1;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u))
      if (!seen[v] && !removed.contains(v)) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (seen[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

}  // namespace k2l
