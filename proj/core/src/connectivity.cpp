#include "k2l/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace k2l {

namespace {

// Unit-vertex-capacity flow network via vertex splitting. For a vertex v not
// in S u T, node 2v is its in-node and 2v+1 its out-node, joined by a
// capacity-1 arc. S-vertices feed from a super source, T-vertices drain into
// a super sink; neither is capacitated, so paths may share endpoints.
struct SplitFlow {
  struct Arc {
    int to;
    int cap;
    int rev;  // index of the reverse arc in arcs[to]
  };

  int node_count;
  int source, sink;
  std::vector<std::vector<Arc>> arcs;

  SplitFlow(const Graph& g, const VertexSet& s, const VertexSet& t) {
    const int n = g.vertex_count();
    node_count = 2 * n + 2;
    source = 2 * n;
    sink = 2 * n + 1;
    arcs.assign(node_count, {});
    const int inf = n + 2;

    auto in_node = [](Vertex v) { return 2 * v; };
    auto out_node = [](Vertex v) { return 2 * v + 1; };

    for (Vertex v = 0; v < n; ++v) {
      if (s.contains(v)) {
        add(source, out_node(v), inf);
      } else if (t.contains(v)) {
        add(in_node(v), sink, inf);
      } else {
        add(in_node(v), out_node(v), 1);
      }
    }
    // Arcs are added per vertex in ascending order, neighbors ascending, so
    // augmentation and decomposition are deterministic.
    for (Vertex u = 0; u < n; ++u) {
      if (t.contains(u)) continue;  // no flow out of T
      for (Vertex v : g.neighbors(u)) {
        if (s.contains(v)) continue;  // flow never returns into S
        add(out_node(u), in_node(v), inf);
      }
    }
  }

  void add(int from, int to, int cap) {
    arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
    arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
  }

  // One BFS augmentation of value 1; false when no augmenting path remains.
  bool augment() {
    std::vector<std::pair<int, int>> parent(node_count, {-1, -1});
    std::queue<int> q;
    q.push(source);
    parent[source] = {source, 0};
    while (!q.empty() && parent[sink].first < 0) {
      int u = q.front();
      q.pop();
      for (int i = 0; i < static_cast<int>(arcs[u].size()); ++i) {
        const Arc& a = arcs[u][i];
        if (a.cap <= 0 || parent[a.to].first >= 0) continue;
        parent[a.to] = {u, i};
        if (a.to == sink) break;
        q.push(a.to);
      }
    }
    if (parent[sink].first < 0) return false;
    int v = sink;
    while (v != source) {
      auto [u, i] = parent[v];
      arcs[u][i].cap -= 1;
      arcs[arcs[u][i].to][arcs[u][i].rev].cap += 1;
      v = u;
    }
    return true;
  }

  int max_flow(int limit = std::numeric_limits<int>::max()) {
    int flow = 0;
    while (flow < limit && augment()) ++flow;
    return flow;
  }

  // Nodes reachable from the source in the residual network.
  std::vector<char> residual_reachable() const {
    std::vector<char> seen(node_count, 0);
    std::vector<int> stack = {source};
    seen[source] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const Arc& a : arcs[u])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    return seen;
  }
};

void check_separable(const Graph& g, const VertexSet& s, const VertexSet& t) {
  if (s.empty() || t.empty())
    throw NotSeparableError("S and T must be nonempty");
  if (s.intersects(t)) throw NotSeparableError("S and T intersect");
  for (Vertex u : s)
    for (Vertex v : g.neighbors(u))
      if (t.contains(v))
        throw NotSeparableError("edge between S and T (" + std::to_string(u) +
                                "-" + std::to_string(v) + ")");
}

}  // namespace

int st_connectivity(const Graph& g, const VertexSet& s, const VertexSet& t) {
  check_separable(g, s, t);
  SplitFlow net(g, s, t);
  return net.max_flow();
}

VertexSet min_vertex_cut(const Graph& g, const VertexSet& s,
                         const VertexSet& t) {
  check_separable(g, s, t);
  SplitFlow net(g, s, t);
  net.max_flow();
  auto seen = net.residual_reachable();
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v) || t.contains(v)) continue;
    if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
  }
  return VertexSet(std::move(cut));
}

std::vector<std::vector<Vertex>> disjoint_st_paths(const Graph& g,
                                                   const VertexSet& s,
                                                   const VertexSet& t) {
  check_separable(g, s, t);
  SplitFlow net(g, s, t);
  int flow = net.max_flow();

  // Flow decomposition. flow_out[v] lists vertices w with a unit of flow on
  // out(v) -> in(w); used units are consumed front to back (ascending w).
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> flow_out(n);
  for (Vertex v = 0; v < n; ++v) {
    int out_node = 2 * v + 1;
    for (const auto& a : net.arcs[out_node]) {
      // Genuine flow arcs out(v) -> in(w): even target below 2n, w != v.
      // Everything else at out(v) is a reverse arc.
      if (a.to >= 2 * n || a.to % 2 != 0 || a.to / 2 == v) continue;
      Vertex w = a.to / 2;
      // arc carried flow iff its reverse arc gained capacity
      int used = net.arcs[a.to][a.rev].cap;
      for (int k = 0; k < used; ++k) flow_out[v].push_back(w);
    }
    std::sort(flow_out[v].begin(), flow_out[v].end());
  }

  std::vector<std::vector<Vertex>> paths;
  paths.reserve(flow);
  std::vector<int> source_units(n, 0);
  for (const auto& a : net.arcs[net.source]) {
    int used = net.arcs[a.to][a.rev].cap;
    if (a.to % 2 == 1) source_units[a.to / 2] += used;
  }
  for (Vertex sv : s) {
    while (source_units[sv] > 0) {
      --source_units[sv];
      std::vector<Vertex> path = {sv};
      Vertex cur = sv;
      while (!t.contains(cur)) {
        Vertex nxt = flow_out[cur].front();
        flow_out[cur].erase(flow_out[cur].begin());
        path.push_back(nxt);
        cur = nxt;
      }
      paths.push_back(std::move(path));
    }
  }
  return paths;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw TooSmallError("vertex connectivity needs n >= 2");
  // Even-Tarjan style: a minimum cut of size k misses some vertex among the
  // first k+1, so scanning sources 0..bound suffices.
  int bound = n - 1;
  for (Vertex s = 0; s < n && s <= bound; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (t == s || g.has_edge(s, t)) continue;
      bound = std::min(
          bound, st_connectivity(g, VertexSet::single(s), VertexSet::single(t)));
    }
  }
  return bound;
}

}  // namespace k2l
