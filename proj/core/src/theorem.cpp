#include "k2l/theorem.hpp"

#include <algorithm>

#include "k2l/steiner.hpp"

namespace k2l {

namespace {

constexpr long long kSat = 1LL << 62;

long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSat / b) return kSat;
  return a * b;
}

long long sat_pow(long long base, long long exp) {
  long long p = 1;
  for (long long i = 0; i < exp; ++i) {
    p = sat_mul(p, base);
    if (p >= kSat) return kSat;
  }
  return p;
}

// Exact decision n >= base^exp without big integers: base >= 2, so the
// partial product either exceeds n within ~63 steps or the exponent runs out.
bool at_least_pow(long long n, long long base, long long exp) {
  long long p = 1;
  for (long long i = 0; i < exp; ++i) {
    p = sat_mul(p, base);
    if (p > n) return false;
  }
  return n >= p;
}

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::PathSwap: return "path-swap";
    case MoveKind::ComponentReroute: return "component-reroute";
    case MoveKind::QuAugment: return "qu-augment";
    case MoveKind::DoubleQuCombine: return "double-qu-combine";
  }
  return "?";
}

Witness run_degree_branch(const Graph& g, Vertex x, int ell) {
  MaxLeafResult r = max_leaf_search(g, x, ell);
  if (auto* model = std::get_if<MinorModel>(&r.outcome))
    return MinorFound{std::move(*model)};
  const auto& sat = std::get<SaturationInfo>(r.outcome);
  Report rep;
  rep.emplace_back("reason", "max-leaf search saturated below ell");
  rep.emplace_back("vertex", std::to_string(x));
  rep.emplace_back("degree", std::to_string(g.degree(x)));
  rep.emplace_back("leaves", std::to_string(sat.tree.leaf_count()));
  rep.emplace_back("branching-in-x", std::to_string(sat.classification.branching_in_x));
  rep.emplace_back("non-strictly-internal",
                   std::to_string(sat.classification.non_strictly_internal));
  rep.emplace_back("even", std::to_string(sat.classification.even));
  rep.emplace_back("odd", std::to_string(sat.classification.odd));
  rep.emplace_back("iterations", std::to_string(r.iterations));
  for (const auto& [kind, count] : r.move_counts)
    rep.emplace_back("moves-" + move_kind_name(kind), std::to_string(count));
  std::string edges;
  for (auto [u, v] : sat.tree.tree_edges()) {
    if (!edges.empty()) edges += ' ';
    edges += std::to_string(u) + "-" + std::to_string(v);
  }
  rep.emplace_back("tree-edges", edges);
  return Saturated{std::move(rep)};
}

}  // namespace

Witness theorem_driver(const Graph& g, const DriverConfig& cfg) {
  const int ell = cfg.ell;
  if (ell < 1) throw ParamTooSmallError("theorem_driver needs ell >= 1");
  const int n = g.vertex_count();

  // (1) hypothesis checks
  if (!cfg.skip_hypotheses) {
    if (n < 4)
      return Inconclusive{{{"reason", "hypothesis violated"},
                           {"hypothesis", "graph too small"},
                           {"n", std::to_string(n)}}};
    if (g.min_degree() < 5)
      return Inconclusive{{{"reason", "hypothesis violated"},
                           {"hypothesis", "minimum degree at least 5"},
                           {"min-degree", std::to_string(g.min_degree())}}};
    if (vertex_connectivity(g) < 3)
      return Inconclusive{{{"reason", "hypothesis violated"},
                           {"hypothesis", "3-connected"},
                           {"connectivity",
                            std::to_string(vertex_connectivity(g))}}};
    auto twins5 = find_twins(g, 5);
    if (!twins5.empty()) return TwinsFound{twins5[0].first, twins5[0].second};
  }

  // (2) a vertex of degree above 7*ell feeds the max-leaf engine
  auto high = degree_scan(g, ell);
  if (!high.empty()) return run_degree_branch(g, high.front(), ell);

  // (3) layered nested-cut machinery
  const long long d =
      cfg.d_override.value_or(std::max(1LL, 1LL * ell * ell * ell / 2));
  const long long need_distance =
      cfg.distance_override.value_or(sat_mul(2, sat_pow(d + 1, ell)));

  if (cfg.n_threshold_override) {
    if (n < *cfg.n_threshold_override)
      return Inconclusive{{{"reason", "below size threshold"},
                           {"n", std::to_string(n)},
                           {"threshold",
                            std::to_string(*cfg.n_threshold_override)}}};
  } else {
    long long exp = sat_mul(2, sat_pow(d + 1, ell));
    if (!at_least_pow(n, 7LL * ell, exp))
      return Inconclusive{{{"reason", "below size threshold"},
                           {"n", std::to_string(n)},
                           {"threshold", "(7*ell)^(2*(d+1)^ell)"},
                           {"driver-d", std::to_string(d)}}};
  }

  // lexicographically least diametral pair
  int best_dist = -1;
  Vertex bs = -1, bt = -1;
  for (Vertex s = 0; s < n; ++s) {
    Layering lay = bfs_layering(g, s);
    for (Vertex t = s + 1; t < n; ++t) {
      auto dt = lay.layer_of(t);
      if (dt && *dt > best_dist) {
        best_dist = *dt;
        bs = s;
        bt = t;
      }
    }
  }
  if (best_dist < static_cast<int>(std::min<long long>(need_distance, kSat)))
    return Inconclusive{{{"reason", "no vertex pair is far enough apart"},
                         {"diameter", std::to_string(best_dist)},
                         {"required-distance", std::to_string(need_distance)}}};

  std::vector<LayerCut> lcuts = layer_cuts(g, bs, bt);
  auto cut_at_layer = [&](long long layer) -> const VertexSet& {
    return lcuts[layer - 1].cut;  // layers are 1..dist-1, stored in order
  };

  // k-maximization: largest k <= ell admitting layer indices i < j with
  // j - i >= 2*(d+1)^(ell-k) and eta(C_i, C_j) >= k
  const int max_layer = static_cast<int>(lcuts.size());  // = dist - 1
  int found_k = 0;
  long long fi = -1, fj = -1;
  for (int k = ell; k >= 1 && found_k == 0; --k) {
    long long need = sat_mul(2, sat_pow(d + 1, ell - k));
    if (need >= kSat) continue;
    for (long long i = 1; i <= max_layer && found_k == 0; ++i) {
      for (long long j = i + need; j <= max_layer; ++j) {
        int eta = st_connectivity(g, cut_at_layer(i), cut_at_layer(j));
        if (eta >= k) {
          found_k = k;
          fi = i;
          fj = j;
          break;
        }
      }
    }
  }
  if (found_k == 0)
    return Inconclusive{{{"reason", "no qualifying cut pair"},
                         {"layers", std::to_string(max_layer)}}};

  VertexSet s_side =
      reachable_avoiding(g, VertexSet::single(bs), cut_at_layer(fi));
  VertexSet t_side =
      reachable_avoiding(g, VertexSet::single(bt), cut_at_layer(fj));

  if (found_k == ell) {
    // direct model: the two sides plus ell disjoint connecting paths of
    // length at least 2
    Report fail = {{"reason", "k reached ell but side extraction failed"}};
    if (s_side.intersects(t_side))
      return Saturated{std::move(fail)};
    try {
      auto paths = disjoint_st_paths(g, s_side, t_side);
      MinorModel model;
      model.ell = ell;
      model.side_a = s_side;
      model.side_b = t_side;
      for (const auto& p : paths) {
        if (static_cast<int>(model.legs.size()) == ell) break;
        if (p.size() < 3) continue;  // no interior, cannot form a leg
        model.legs.push_back(
            VertexSet(std::vector<Vertex>(p.begin() + 1, p.end() - 1)));
      }
      if (static_cast<int>(model.legs.size()) == ell) {
        auto check = verify_model(g, model);
        if (check.ok) return MinorFound{std::move(model)};
        fail.emplace_back("violation", check.violation);
      }
    } catch (const Error& e) {
      fail.emplace_back("error", e.what());
    }
    return Saturated{std::move(fail)};
  }

  // k < ell: assemble the d evenly spaced minimum cuts and hand over
  const long long dprime = sat_mul(2, sat_pow(d + 1, ell - found_k - 1));
  CutSequence seq;
  seq.source_side = s_side.unite(cut_at_layer(fi));
  seq.sink_side =
      reachable_avoiding(g, VertexSet::single(bt), cut_at_layer(fi + d * dprime))
          .unite(cut_at_layer(fi + d * dprime));
  seq.eta = found_k;
  try {
    for (long long t = 0; t < d; ++t) {
      seq.cuts.push_back(min_vertex_cut(g, cut_at_layer(fi + t * dprime),
                                        cut_at_layer(fi + (t + 1) * dprime)));
    }
    return extract_from_nested(g, seq, ell);
  } catch (const Error& e) {
    return Saturated{{{"reason", "assembled cut sequence was not usable"},
                      {"error", e.what()},
                      {"k", std::to_string(found_k)},
                      {"d", std::to_string(d)},
                      {"spacing", std::to_string(dprime)}}};
  }
}

}  // namespace k2l
