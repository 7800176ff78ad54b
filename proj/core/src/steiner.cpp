#include "k2l/steiner.hpp"

#include <algorithm>
#include <queue>

namespace k2l {

SteinerTree::SteinerTree(const Graph& g, Vertex x, VertexSet terminals)
    : g_(&g), x_(x), terminals_(std::move(terminals)), adj_(g.vertex_count()) {}

bool SteinerTree::has_tree_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> SteinerTree::tree_edges() const {
  std::vector<Edge> out;
  for (Vertex u : vertices_)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet SteinerTree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v : vertices_)
    if (adj_[v].size() <= 1) out.push_back(v);
  return VertexSet(std::move(out));
}

int SteinerTree::leaf_count() const { return leaves().size(); }

std::vector<Vertex> SteinerTree::tree_path(Vertex a, Vertex b) const {
  std::vector<Vertex> parent(g_->vertex_count(), -1);
  std::vector<Vertex> stack = {a};
  parent[a] = a;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    if (u == b) break;
    for (Vertex v : adj_[u])
      if (parent[v] < 0) {
        parent[v] = u;
        stack.push_back(v);
      }
  }
  if (parent[b] < 0) throw Error("tree_path: endpoints not connected in tree");
  std::vector<Vertex> path;
  for (Vertex v = b; v != a; v = parent[v]) path.push_back(v);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

void SteinerTree::add_edge(Vertex u, Vertex v) {
  if (u == x_ || v == x_) throw Error("tree may not touch the excluded vertex");
  if (!g_->has_edge(u, v)) throw NotAnEdgeError(u, v);
  if (has_tree_edge(u, v)) return;
  auto ins = [this](Vertex a, Vertex b) {
    auto& lst = adj_[a];
    lst.insert(std::lower_bound(lst.begin(), lst.end(), b), b);
  };
  ins(u, v);
  ins(v, u);
  vertices_.insert(u);
  vertices_.insert(v);
  ++edges_;
}

void SteinerTree::remove_edge(Vertex u, Vertex v) {
  if (!has_tree_edge(u, v)) throw NotAnEdgeError(u, v);
  auto del = [this](Vertex a, Vertex b) {
    auto& lst = adj_[a];
    lst.erase(std::lower_bound(lst.begin(), lst.end(), b));
  };
  del(u, v);
  del(v, u);
  --edges_;
  if (adj_[u].empty() && !terminals_.contains(u)) vertices_.erase(u);
  if (adj_[v].empty() && !terminals_.contains(v)) vertices_.erase(v);
}

void SteinerTree::add_vertex(Vertex v) {
  if (v == x_) throw Error("tree may not touch the excluded vertex");
  vertices_.insert(v);
}

void SteinerTree::add_path(const std::vector<Vertex>& path) {
  for (size_t i = 0; i + 1 < path.size(); ++i) add_edge(path[i], path[i + 1]);
}

void SteinerTree::prune_nonterminal_leaves() {
  bool again = true;
  while (again) {
    again = false;
    for (Vertex v : vertices_.ids()) {
      if (terminals_.contains(v)) continue;
      if (adj_[v].size() == 1) {
        remove_edge(v, adj_[v].front());
        again = true;
        break;
      }
      if (adj_[v].empty()) {
        vertices_.erase(v);
        again = true;
        break;
      }
    }
  }
}

void SteinerTree::validate() const {
  if (vertices_.empty()) throw Error("steiner tree is empty");
  if (!terminals_.is_subset_of(vertices_))
    throw Error("steiner tree does not span all terminals");
  if (vertices_.contains(x_)) throw Error("steiner tree touches excluded vertex");
  int expect_edges = vertices_.size() - 1;
  if (edges_ != expect_edges)
    throw Error("steiner tree edge count is not |V|-1 (cycle or split)");
  // connectivity by walk
  VertexSet seen = VertexSet::single(vertices_.min());
  std::vector<Vertex> stack = {vertices_.min()};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adj_[u])
      if (!seen.contains(v)) {
        seen.insert(v);
        stack.push_back(v);
      }
  }
  if (!(seen == vertices_)) throw Error("steiner tree is disconnected");
  for (Vertex v : vertices_) {
    if (adj_[v].size() <= 1 && !terminals_.contains(v) && vertices_.size() > 1)
      throw Error("non-terminal leaf " + std::to_string(v));
    for (Vertex u : adj_[v])
      if (!g_->has_edge(u, v)) throw Error("tree edge missing from host graph");
  }
}

SteinerTree initial_steiner_tree(const Graph& g, Vertex x) {
  if (g.degree(x) < 1) throw ParamTooSmallError("x must have a neighbor");
  VertexSet terminals(std::vector<Vertex>(g.neighbors(x).begin(),
                                          g.neighbors(x).end()));
  SteinerTree t(g, x, terminals);

  // Grow from the lowest terminal, attaching each next terminal along a
  // shortest path from the current tree (BFS in G minus x, neighbors
  // ascending, first discovery wins).
  VertexSet in_tree = VertexSet::single(terminals.min());
  for (Vertex target : terminals) {
    if (in_tree.contains(target)) continue;
    std::vector<Vertex> parent(g.vertex_count(), -1);
    std::queue<Vertex> q;
    for (Vertex v : in_tree) {
      parent[v] = v;
      q.push(v);
    }
    while (!q.empty() && parent[target] < 0) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        if (v == x || parent[v] >= 0) continue;
        parent[v] = u;
        q.push(v);
      }
    }
    if (parent[target] < 0)
      throw TerminalsDisconnectedError(
          "neighborhood of " + std::to_string(x) +
          " is not contained in one component of the graph minus it");
    std::vector<Vertex> path;
    Vertex v = target;
    while (parent[v] != v) {
      path.push_back(v);
      v = parent[v];
    }
    path.push_back(v);
    std::reverse(path.begin(), path.end());
    t.add_path(path);
    for (Vertex p : path) in_tree.insert(p);
  }
  t.add_vertex(terminals.min());  // covers the single-terminal tree
  t.prune_nonterminal_leaves();
  t.validate();
  return t;
}

PathClassification classify(const SteinerTree& t) {
  PathClassification pc;
  const VertexSet& verts = t.vertices();
  std::vector<Vertex> branch;
  for (Vertex v : verts)
    if (t.tree_degree(v) >= 3) branch.push_back(v);
  pc.branching = VertexSet(branch);

  // components of the tree minus branching vertices are paths
  VertexSet seen;
  for (Vertex v : verts) {
    if (pc.branching.contains(v) || seen.contains(v)) continue;
    // collect component
    std::vector<Vertex> comp;
    std::vector<Vertex> stack = {v};
    seen.insert(v);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : t.tree_neighbors(u))
        if (!pc.branching.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    // order as a path from its lower-id endpoint
    auto inner_degree = [&](Vertex u) {
      int d = 0;
      for (Vertex w : t.tree_neighbors(u))
        if (!pc.branching.contains(w)) ++d;
      return d;
    };
    Vertex start = -1;
    for (Vertex u : comp)
      if (inner_degree(u) <= 1 && (start < 0 || u < start)) start = u;
    BarePath bp;
    Vertex prev = -1, cur = start;
    while (cur >= 0) {
      bp.vertices.push_back(cur);
      Vertex next = -1;
      for (Vertex w : t.tree_neighbors(cur))
        if (w != prev && !pc.branching.contains(w)) next = w;
      prev = cur;
      cur = next;
    }
    // terminals on the path, in path order
    for (Vertex u : bp.vertices)
      if (t.terminals().contains(u)) bp.x_vertices.push_back(u);
    const int s = static_cast<int>(bp.x_vertices.size());
    for (int i = 1; i <= s; ++i) {
      Vertex u = bp.x_vertices[i - 1];
      if (i == 1 || i == s) {
        pc.labels.emplace_back(u, XLabel::non_strictly_internal);
      } else if (i % 2 == 0) {
        pc.labels.emplace_back(u, XLabel::even);
        ++bp.even_count;
      } else {
        pc.labels.emplace_back(u, XLabel::odd);
        ++bp.odd_count;
      }
    }
    pc.bare_paths.push_back(std::move(bp));
  }
  std::sort(pc.bare_paths.begin(), pc.bare_paths.end(),
            [](const BarePath& a, const BarePath& b) {
              return a.vertices.front() < b.vertices.front();
            });
  for (Vertex v : t.terminals())
    if (pc.branching.contains(v)) {
      pc.labels.emplace_back(v, XLabel::branching);
      ++pc.branching_in_x;
    }
  std::sort(pc.labels.begin(), pc.labels.end());
  for (auto& [v, label] : pc.labels) {
    if (label == XLabel::non_strictly_internal) ++pc.non_strictly_internal;
    if (label == XLabel::even) ++pc.even;
    if (label == XLabel::odd) ++pc.odd;
  }
  return pc;
}

namespace {

struct Ear {
  Vertex from;                // tree vertex z
  std::vector<Vertex> path;   // z ... y, interior outside the tree
  Vertex to;                  // tree vertex y != z
};

// Ears rooted at z: direct non-tree edges first, then BFS through non-tree
// vertices (shortest per endpoint, discovery order breaking ties).
std::vector<Ear> ears_from(const Graph& g, Vertex x, const SteinerTree& t,
                           Vertex z, const std::vector<char>& endpoint_ok) {
  std::vector<Ear> ears;
  for (Vertex y : g.neighbors(z)) {
    if (y == x || y == z || !t.in_tree(y)) continue;
    if (!endpoint_ok[y] || t.has_tree_edge(z, y)) continue;
    ears.push_back({z, {z, y}, y});
  }
  // BFS over outside vertices
  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  for (Vertex u : g.neighbors(z)) {
    if (u == x || t.in_tree(u)) continue;
    parent[u] = z;
    dist[u] = 1;
    q.push(u);
  }
  struct Hit {
    int len;
    Vertex y;
    Vertex entry;  // last outside vertex
  };
  std::vector<Hit> hits;
  std::vector<char> y_seen(g.vertex_count(), 0);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (w == x) continue;
      if (t.in_tree(w)) {
        if (w != z && endpoint_ok[w] && !y_seen[w]) {
          y_seen[w] = 1;
          hits.push_back({dist[u] + 1, w, u});
        }
        continue;
      }
      if (parent[w] < 0) {
        parent[w] = u;
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return a.len != b.len ? a.len < b.len : a.y < b.y;
  });
  for (const Hit& h : hits) {
    std::vector<Vertex> path = {h.y};
    for (Vertex v = h.entry; v != z; v = parent[v]) path.push_back(v);
    path.push_back(z);
    std::reverse(path.begin(), path.end());
    ears.push_back({z, std::move(path), h.y});
  }
  return ears;
}

// Adds the ear and removes the best single cycle edge; returns the move and
// leaf delta when some removal yields a valid tree.
struct EarOutcome {
  Move move;
  int delta;
};

std::optional<EarOutcome> apply_ear(const SteinerTree& t, const Ear& ear,
                                    MoveKind kind) {
  const int before = t.leaf_count();
  std::vector<Vertex> cycle = t.tree_path(ear.from, ear.to);
  std::optional<EarOutcome> best;
  for (size_t k = 0; k + 1 < cycle.size(); ++k) {
    SteinerTree cand = t;
    cand.add_path(ear.path);
    cand.remove_edge(cycle[k], cycle[k + 1]);
    cand.prune_nonterminal_leaves();
    int delta = cand.leaf_count() - before;
    if (delta >= 1 && (!best || delta > best->delta)) {
      Move mv{kind, {ear.path}, {{cycle[k], cycle[k + 1]}}};
      best = EarOutcome{std::move(mv), delta};
    }
  }
  return best;
}

// Connected component of `seed` in G minus x minus tree.
std::vector<Vertex> outside_component(const Graph& g, Vertex x,
                                      const SteinerTree& t, Vertex seed) {
  std::vector<Vertex> comp = {seed};
  std::vector<char> seen(g.vertex_count(), 0);
  seen[seed] = 1;
  std::vector<Vertex> stack = {seed};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (v == x || t.in_tree(v) || seen[v]) continue;
      seen[v] = 1;
      comp.push_back(v);
      stack.push_back(v);
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

// Even terminals with their bare-path X-neighbors (v = previous, w = next).
struct EvenVertex {
  Vertex u, v, w;
};

std::vector<EvenVertex> even_vertices(const PathClassification& pc) {
  std::vector<EvenVertex> out;
  for (const BarePath& bp : pc.bare_paths) {
    for (size_t i = 1; i + 1 < bp.x_vertices.size(); ++i) {
      if ((i + 1) % 2 == 0)  // 1-based index i+1 even
        out.push_back({bp.x_vertices[i], bp.x_vertices[i - 1],
                       bp.x_vertices[i + 1]});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const EvenVertex& a, const EvenVertex& b) { return a.u < b.u; });
  return out;
}

}  // namespace

std::optional<Move> find_improving_move(const Graph& g, Vertex x,
                                        const SteinerTree& t) {
  const PathClassification pc = classify(t);
  const VertexSet leaf_set = t.leaves();
  const int n = g.vertex_count();
  const auto evens = even_vertices(pc);

  // 1. QuAugment: ears out of the open path segment around an even terminal,
  // ending anywhere off that segment. Collect blocked ears (leaf endpoints)
  // for the two-ear combination later.
  std::vector<std::pair<Vertex, Ear>> blocked;  // even u -> its leaf-ending ear
  for (const EvenVertex& ev : evens) {
    std::vector<Vertex> seg = t.tree_path(ev.v, ev.w);
    std::vector<char> on_seg(n, 0);
    for (Vertex s : seg) on_seg[s] = 1;
    std::vector<char> ok(n, 0);
    for (Vertex y : t.vertices())
      if (!on_seg[y]) ok[y] = 1;
    bool recorded = false;
    for (size_t zi = 1; zi + 1 < seg.size(); ++zi) {
      for (const Ear& ear : ears_from(g, x, t, seg[zi], ok)) {
        if (auto out = apply_ear(t, ear, MoveKind::QuAugment))
          return out->move;
        if (!recorded && leaf_set.contains(ear.to)) {
          blocked.emplace_back(ev.u, ear);
          recorded = true;
        }
      }
    }
  }

  // 2. ComponentReroute: even terminal with tree path v-u-w and an outside
  // component hanging on u that reaches both v and w.
  for (const EvenVertex& ev : evens) {
    std::vector<Vertex> seg = t.tree_path(ev.v, ev.w);
    if (seg.size() != 3 || g.has_edge(ev.v, ev.w)) continue;
    for (Vertex u2 : g.neighbors(ev.u)) {
      if (u2 == x || t.in_tree(u2)) continue;
      std::vector<Vertex> comp = outside_component(g, x, t, u2);
      std::vector<char> in_comp(n, 0);
      for (Vertex c : comp) in_comp[c] = 1;
      bool touch_v = false, touch_w = false;
      for (Vertex c : comp) {
        for (Vertex y : g.neighbors(c)) {
          touch_v |= y == ev.v;
          touch_w |= y == ev.w;
        }
      }
      if (!touch_v || !touch_w) continue;
      // path v -> w through the component
      std::vector<int> parent(n, -1);
      std::queue<Vertex> q;
      for (Vertex c : comp)
        if (g.has_edge(ev.v, c)) {
          parent[c] = ev.v;
          q.push(c);
        }
      Vertex hit = -1;
      while (!q.empty() && hit < 0) {
        Vertex a = q.front();
        q.pop();
        if (g.has_edge(a, ev.w)) {
          hit = a;
          break;
        }
        for (Vertex b : g.neighbors(a))
          if (in_comp[b] && parent[b] < 0) {
            parent[b] = a;
            q.push(b);
          }
      }
      if (hit < 0) continue;
      std::vector<Vertex> vw_path = {ev.w};
      for (Vertex a = hit; a != ev.v; a = parent[a]) vw_path.push_back(a);
      vw_path.push_back(ev.v);
      std::reverse(vw_path.begin(), vw_path.end());
      // attach u into the new path through the component
      std::vector<char> on_path(n, 0);
      for (Vertex a : vw_path) on_path[a] = 1;
      std::vector<Vertex> attach;
      if (on_path[u2]) {
        attach = {ev.u, u2};
      } else {
        std::vector<int> par2(n, -1);
        std::queue<Vertex> q2;
        par2[u2] = u2;
        q2.push(u2);
        Vertex end = -1;
        while (!q2.empty() && end < 0) {
          Vertex a = q2.front();
          q2.pop();
          if (on_path[a]) {
            end = a;
            break;
          }
          for (Vertex b : g.neighbors(a))
            if (in_comp[b] && par2[b] < 0) {
              par2[b] = a;
              q2.push(b);
            }
        }
        if (end < 0) continue;
        attach = {end};
        for (Vertex a = end; par2[a] != a;) {
          a = par2[a];
          attach.push_back(a);
        }
        std::reverse(attach.begin(), attach.end());
        attach.insert(attach.begin(), ev.u);
      }
      Move mv{MoveKind::ComponentReroute,
              {vw_path, attach},
              {{ev.u, ev.v}, {ev.u, ev.w}}};
      // verify it gains a leaf before returning
      SteinerTree cand = t;
      for (auto& p : mv.added_paths) cand.add_path(p);
      for (auto [eu, evv] : mv.removed_tree_edges) cand.remove_edge(eu, evv);
      cand.prune_nonterminal_leaves();
      if (cand.leaf_count() > t.leaf_count()) return mv;
    }
  }

  // 3. PathSwap: ears out of bare-path interiors, endpoint off the path and
  // not a leaf.
  for (const BarePath& bp : pc.bare_paths) {
    if (bp.vertices.size() < 3) continue;
    std::vector<char> on_path(n, 0);
    for (Vertex s : bp.vertices) on_path[s] = 1;
    std::vector<char> ok(n, 0);
    for (Vertex y : t.vertices())
      if (!on_path[y] && !leaf_set.contains(y)) ok[y] = 1;
    for (size_t zi = 1; zi + 1 < bp.vertices.size(); ++zi) {
      for (const Ear& ear : ears_from(g, x, t, bp.vertices[zi], ok))
        if (auto out = apply_ear(t, ear, MoveKind::PathSwap)) return out->move;
    }
  }

  // 4. DoubleQuCombine: two blocked ears meeting at one leaf.
  for (Vertex y : leaf_set) {
    std::vector<const Ear*> here;
    for (auto& [u, ear] : blocked)
      if (ear.to == y) here.push_back(&ear);
    if (here.size() < 2) continue;
    for (size_t i = 0; i < here.size(); ++i) {
      for (size_t j = i + 1; j < here.size(); ++j) {
        const Ear& e1 = *here[i];
        const Ear& e2 = *here[j];
        // interiors must be disjoint for the two-cycle surgery
        VertexSet i1(std::vector<Vertex>(e1.path.begin() + 1, e1.path.end() - 1));
        VertexSet i2(std::vector<Vertex>(e2.path.begin() + 1, e2.path.end() - 1));
        if (i1.intersects(i2)) continue;
        auto c1 = t.tree_path(e1.from, e1.to);
        auto c2 = t.tree_path(e2.from, e2.to);
        for (size_t k1 = 0; k1 + 1 < c1.size(); ++k1) {
          for (size_t k2 = 0; k2 + 1 < c2.size(); ++k2) {
            SteinerTree cand = t;
            try {
              cand.add_path(e1.path);
              cand.add_path(e2.path);
              cand.remove_edge(c1[k1], c1[k1 + 1]);
              if (!cand.has_tree_edge(c2[k2], c2[k2 + 1])) continue;
              cand.remove_edge(c2[k2], c2[k2 + 1]);
              cand.prune_nonterminal_leaves();
              cand.validate();
            } catch (const Error&) {
              continue;
            }
            if (cand.leaf_count() > t.leaf_count())
              return Move{MoveKind::DoubleQuCombine,
                          {e1.path, e2.path},
                          {{c1[k1], c1[k1 + 1]}, {c2[k2], c2[k2 + 1]}}};
          }
        }
      }
    }
  }

  // 5. Untargeted fallback: ears from every tree vertex.
  {
    std::vector<char> ok(n, 0);
    for (Vertex y : t.vertices()) ok[y] = 1;
    for (Vertex z : t.vertices())
      for (const Ear& ear : ears_from(g, x, t, z, ok))
        if (auto out = apply_ear(t, ear, MoveKind::PathSwap)) return out->move;
  }
  return std::nullopt;
}

SteinerTree apply_move(const SteinerTree& t, const Move& move) {
  SteinerTree out = t;
  for (const auto& p : move.added_paths) out.add_path(p);
  for (auto [u, v] : move.removed_tree_edges) out.remove_edge(u, v);
  out.prune_nonterminal_leaves();
  out.validate();
  if (out.leaf_count() <= t.leaf_count())
    throw Error("move did not increase the leaf count");
  return out;
}

MaxLeafResult max_leaf_search(const Graph& g, Vertex x, int ell,
                              std::optional<int> iteration_cap) {
  if (ell < 1) throw ParamTooSmallError("max_leaf_search needs ell >= 1");
  SteinerTree t = initial_steiner_tree(g, x);
  const int cap =
      iteration_cap.value_or(static_cast<int>(t.terminals().size()) + 1);
  if (cap < 1) throw ParamTooSmallError("iteration cap must be >= 1");

  MaxLeafResult res;
  for (;;) {
    if (t.leaf_count() >= ell) {
      VertexSet all_leaves = t.leaves();
      VertexSet internal = t.vertices().minus(all_leaves);
      if (internal.empty()) break;  // degenerate tree; fall through saturated
      MinorModel model;
      model.ell = ell;
      model.side_a = VertexSet::single(x);
      model.side_b = internal;
      int taken = 0;
      for (Vertex leaf : all_leaves) {
        if (taken == ell) break;
        model.legs.push_back(VertexSet::single(leaf));
        ++taken;
      }
      auto check = verify_model(g, model);
      if (!check.ok)
        throw Error("max_leaf_search built an invalid model: " + check.violation);
      res.outcome = std::move(model);
      return res;
    }
    if (res.iterations >= cap)
      throw IterationCapExceededError("no success after " +
                                      std::to_string(res.iterations) + " moves");
    auto mv = find_improving_move(g, x, t);
    if (!mv) break;
    t = apply_move(t, *mv);
    ++res.iterations;
    ++res.move_counts[mv->kind];
  }
  res.outcome = SaturationInfo{t, classify(t)};
  return res;
}

std::vector<Vertex> degree_scan(const Graph& g, int ell) {
  if (ell < 1) throw ParamTooSmallError("degree_scan needs ell >= 1");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 7 * ell) out.push_back(v);
  return out;
}

}  // namespace k2l
