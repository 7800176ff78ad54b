#include "k2l/families.hpp"

#include "k2l/connectivity.hpp"

namespace k2l {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParamTooSmallError(what);
}

}  // namespace

Graph necklace(int n) {
  require(n >= 4, "necklace needs n >= 4");
  std::vector<Edge> edges;
  auto w = [n](int i) { return n + (i % n); };
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);      // v-cycle
    edges.emplace_back(w(i), w(i + 1));      // w-cycle
    edges.emplace_back(i, w(i));
    edges.emplace_back(i, w(i + 1));
  }
  return build_graph(2 * n, edges);
}

Graph wheel(int n) {
  require(n >= 3, "wheel needs rim length >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n);
  }
  return build_graph(n + 1, edges);
}

Graph gadget_wheel_delta(int n, int delta) {
  require(n >= 2, "gadget wheel needs at least 2 gadgets");
  require(delta >= 3, "gadget wheel needs delta >= 3");
  const int rim = 2 * n;
  const int fresh_per_gadget = delta - 1;
  std::vector<Edge> edges;
  auto u = [rim](int i) { return 1 + ((i - 1) % rim); };  // u_1..u_rim
  for (int i = 1; i <= rim; ++i) {
    edges.emplace_back(0, u(i));        // hub spokes
    edges.emplace_back(u(i), u(i + 1)); // rim cycle
  }
  int next = rim + 1;
  for (int i = 1; i <= n; ++i) {
    std::vector<Vertex> clique = {u(2 * i - 1), u(2 * i)};
    for (int k = 0; k < fresh_per_gadget; ++k) clique.push_back(next++);
    for (size_t a = 0; a < clique.size(); ++a)
      for (size_t b = a + 1; b < clique.size(); ++b)
        edges.emplace_back(clique[a], clique[b]);
  }
  return build_graph(next, edges);
}

Graph gadget_wheel(int n) { return gadget_wheel_delta(n, 4); }

Graph cycle_strong_edge(int n) {
  require(n >= 4, "cycle strong product needs n >= 4");
  std::vector<Edge> edges;
  auto b = [n](int i) { return n + (i % n); };
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    edges.emplace_back(i, j);        // a-rail
    edges.emplace_back(b(i), b(j));  // b-rail
    edges.emplace_back(i, b(i));     // rung
    edges.emplace_back(i, b(j));     // diagonals
    edges.emplace_back(b(i), j);
  }
  return build_graph(2 * n, edges);
}

Graph king(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "king graph needs rows, cols >= 1");
  std::vector<Edge> edges;
  auto id = [cols](int i, int j) { return i * cols + j; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
      if (i + 1 < rows && j + 1 < cols) {
        edges.emplace_back(id(i, j), id(i + 1, j + 1));
        edges.emplace_back(id(i, j + 1), id(i + 1, j));
      }
    }
  return build_graph(rows * cols, edges);
}

Graph complete_bipartite_2l(int ell) {
  require(ell >= 1, "K_{2,ell} needs ell >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < ell; ++i) {
    edges.emplace_back(0, 2 + i);
    edges.emplace_back(1, 2 + i);
  }
  return build_graph(ell + 2, edges);
}

Graph apex_necklace(int n) {
  require(n >= 4, "apex necklace needs n >= 4");
  Graph base = necklace(n);
  std::vector<Edge> edges = base.edges();
  for (int i = 0; i < n; ++i) edges.emplace_back(i, 2 * n);
  return build_graph(2 * n + 1, edges);
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto need = [&](size_t k) {
    if (p.size() != k)
      throw ParamTooSmallError("family " + family_kind_name(spec.kind) +
                               " expects " + std::to_string(k) + " parameter(s)");
  };
  switch (spec.kind) {
    case FamilyKind::necklace: need(1); return necklace(p[0]);
    case FamilyKind::wheel: need(1); return wheel(p[0]);
    case FamilyKind::gadget_wheel: need(1); return gadget_wheel(p[0]);
    case FamilyKind::cycle_strong_edge: need(1); return cycle_strong_edge(p[0]);
    case FamilyKind::king: need(2); return king(p[0], p[1]);
    case FamilyKind::complete_bipartite_2l: need(1); return complete_bipartite_2l(p[0]);
    case FamilyKind::apex_necklace: need(1); return apex_necklace(p[0]);
  }
  throw Error("unknown family kind");
}

FamilyKind parse_family_kind(const std::string& name) {
  if (name == "necklace") return FamilyKind::necklace;
  if (name == "wheel") return FamilyKind::wheel;
  if (name == "gadget_wheel") return FamilyKind::gadget_wheel;
  if (name == "cycle_strong_edge") return FamilyKind::cycle_strong_edge;
  if (name == "king") return FamilyKind::king;
  if (name == "complete_bipartite_2l") return FamilyKind::complete_bipartite_2l;
  if (name == "apex_necklace") return FamilyKind::apex_necklace;
  throw ParamTooSmallError("unknown family: " + name);
}

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::necklace: return "necklace";
    case FamilyKind::wheel: return "wheel";
    case FamilyKind::gadget_wheel: return "gadget_wheel";
    case FamilyKind::cycle_strong_edge: return "cycle_strong_edge";
    case FamilyKind::king: return "king";
    case FamilyKind::complete_bipartite_2l: return "complete_bipartite_2l";
    case FamilyKind::apex_necklace: return "apex_necklace";
  }
  return "?";
}

FamilyAudit audit(const Graph& g, int ell) {
  if (ell < 1) throw ParamTooSmallError("audit needs ell >= 1");
  FamilyAudit a;
  a.n = g.vertex_count();
  a.m = g.edge_count();
  a.min_degree = g.min_degree();
  a.max_degree = g.max_degree();
  a.connectivity = a.n >= 2 ? vertex_connectivity(g) : 0;
  a.twin_pairs = find_twins(g);
  a.twin_pairs_deg5 = find_twins(g, 5);
  a.regular = a.min_degree == a.max_degree;
  a.density_bound_x2 =
      static_cast<long long>(ell + 1) * (static_cast<long long>(a.n) - 1);
  a.density_slack_x2 = a.density_bound_x2 - 2LL * a.m;
  a.density_ok = a.density_slack_x2 >= 0;
  return a;
}

}  // namespace k2l
