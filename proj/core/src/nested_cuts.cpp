#include "k2l/nested_cuts.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <tuple>

namespace k2l {

// ---------------------------------------------------------------- witness --

void write_witness(std::ostream& out, const Witness& w) {
  if (const auto* mf = std::get_if<MinorFound>(&w)) {
    out << "MINOR\n";
    write_certificate(out, mf->model);
  } else if (const auto* tf = std::get_if<TwinsFound>(&w)) {
    out << "TWINS " << tf->v << ' ' << tf->w << '\n';
  } else if (const auto* sat = std::get_if<Saturated>(&w)) {
    out << "SATURATED\n";
    for (const auto& [k, v] : sat->report) out << k << ": " << v << '\n';
  } else {
    const auto& inc = std::get<Inconclusive>(w);
    out << "INCONCLUSIVE\n";
    for (const auto& [k, v] : inc.report) out << k << ": " << v << '\n';
  }
}

std::string witness_to_string(const Witness& w) {
  std::ostringstream os;
  write_witness(os, w);
  return os.str();
}

// ----------------------------------------------------------- cut sequence --

namespace {

bool separates(const Graph& g, const VertexSet& s, const VertexSet& t,
               const VertexSet& cut) {
  VertexSet reach = reachable_avoiding(g, s, cut);
  return !reach.intersects(t);
}

}  // namespace

void CutSequence::validate(const Graph& g) const {
  auto bad = [](const std::string& why) {
    throw InvalidCutSequenceError(why);
  };
  if (source_side.empty() || sink_side.empty()) bad("empty S or T");
  if (eta != st_connectivity(g, source_side, sink_side))
    bad("eta does not equal the S-T connectivity");
  VertexSet st = source_side.unite(sink_side);
  std::vector<VertexSet> sides;
  for (size_t j = 0; j < cuts.size(); ++j) {
    const VertexSet& c = cuts[j];
    if (c.size() != eta)
      bad("cut " + std::to_string(j) + " does not have size eta");
    if (c.intersects(st)) bad("cut " + std::to_string(j) + " touches S or T");
    if (!separates(g, source_side, sink_side, c))
      bad("cut " + std::to_string(j) + " does not separate S from T");
    sides.push_back(reachable_avoiding(g, source_side, c));
  }
  for (size_t j = 0; j + 1 < cuts.size(); ++j) {
    if (!(sides[j].size() < sides[j + 1].size() &&
          sides[j].is_subset_of(sides[j + 1])))
      bad("source sides do not strictly nest at position " + std::to_string(j));
  }
  for (size_t i = 0; i < cuts.size(); ++i)
    for (size_t j = i + 1; j < cuts.size(); ++j) {
      auto d = distance_between_sets(g, cuts[i], cuts[j]);
      if (!d || *d < 2)
        bad("cuts " + std::to_string(i) + " and " + std::to_string(j) +
            " are at distance < 2");
    }
}

std::vector<LayerCut> layer_cuts(const Graph& g, Vertex s, Vertex t) {
  Layering lay = bfs_layering(g, s);
  auto dt = lay.layer_of(t);
  if (!dt) throw TooCloseError("t is unreachable from s");
  if (*dt < 2) throw TooCloseError("dist(s, t) must be at least 2");
  VertexSet sset = VertexSet::single(s);
  VertexSet tset = VertexSet::single(t);
  std::vector<LayerCut> out;
  for (int i = 1; i < *dt; ++i) {
    VertexSet cut = lay.layers[i];
    // every s-t path meets layer i, so this is an st-cut; minimalize greedily
    for (Vertex v : lay.layers[i]) {
      VertexSet smaller = cut;
      smaller.erase(v);
      if (separates(g, sset, tset, smaller)) cut = std::move(smaller);
    }
    out.push_back({i, std::move(cut)});
  }
  return out;
}

CutSequence find_2nested(const Graph& g, const VertexSet& s,
                         const VertexSet& t,
                         const std::vector<LayerCut>& cuts, int eta) {
  struct Cand {
    int layer;
    const VertexSet* cut;
    VertexSet side;
  };
  std::vector<Cand> cands;
  for (const LayerCut& lc : cuts)
    if (lc.cut.size() == eta)
      cands.push_back({lc.layer, &lc.cut, reachable_avoiding(g, s, lc.cut)});

  const int k = static_cast<int>(cands.size());
  auto compatible = [&](int i, int j) {
    return cands[j].layer - cands[i].layer >= 2 &&
           cands[i].side.size() < cands[j].side.size() &&
           cands[i].side.is_subset_of(cands[j].side);
  };
  // longest chain; earliest layers among maximum chains
  std::vector<int> f(k, 1);
  for (int i = k - 1; i >= 0; --i)
    for (int j = i + 1; j < k; ++j)
      if (compatible(i, j)) f[i] = std::max(f[i], 1 + f[j]);
  int best = 0;
  for (int i = 0; i < k; ++i) best = std::max(best, f[i]);

  CutSequence seq;
  seq.source_side = s;
  seq.sink_side = t;
  seq.eta = eta;
  int prev = -1;
  for (int need = best; need >= 1; --need) {
    for (int i = prev + 1; i < k; ++i) {
      if (f[i] != need) continue;
      if (prev >= 0 && !compatible(prev, i)) continue;
      seq.cuts.push_back(*cands[i].cut);
      prev = i;
      break;
    }
  }
  return seq;
}

// ------------------------------------------------------------ path system --

namespace {

// Per-system slab bookkeeping:  source sides per cut, gap sets, and the
// position of each path's unique crossing of each cut.
struct Slabs {
  std::vector<VertexSet> side;            // side[j]: S side of cuts[j]
  std::vector<VertexSet> y;               // y[j]: between cuts[j] and cuts[j+1]
  std::vector<std::vector<int>> cross;    // cross[p][j]
  std::vector<int> owner;                 // vertex -> path index, -1 if none

  static Slabs build(const Graph& g, const CutSequence& cuts,
                     const PathSystem& ps) {
    Slabs sl;
    for (const VertexSet& c : cuts.cuts)
      sl.side.push_back(reachable_avoiding(g, cuts.source_side, c));
    for (size_t j = 0; j + 1 < cuts.cuts.size(); ++j) {
      VertexSet yj =
          sl.side[j + 1].minus(sl.side[j]).minus(cuts.cuts[j]);
      if (yj.empty())
        throw Error("empty gap between 2-nested cuts " + std::to_string(j) +
                    " and " + std::to_string(j + 1));
      sl.y.push_back(std::move(yj));
    }
    sl.owner.assign(g.vertex_count(), -1);
    for (size_t p = 0; p < ps.paths.size(); ++p) {
      const auto& path = ps.paths[p];
      for (size_t i = 1; i + 1 < path.size(); ++i) sl.owner[path[i]] = p;
    }
    sl.cross.assign(ps.paths.size(), {});
    for (size_t p = 0; p < ps.paths.size(); ++p) {
      const auto& path = ps.paths[p];
      int prev = -1;
      for (size_t j = 0; j < cuts.cuts.size(); ++j) {
        int hit = -1;
        for (size_t i = 0; i < path.size(); ++i) {
          if (cuts.cuts[j].contains(path[i])) {
            if (hit >= 0)
              throw Error("path " + std::to_string(p) + " crosses cut " +
                          std::to_string(j) + " more than once");
            hit = static_cast<int>(i);
          }
        }
        if (hit < 0)
          throw Error("path " + std::to_string(p) + " misses cut " +
                      std::to_string(j));
        if (hit <= prev)
          throw Error("path " + std::to_string(p) +
                      " crosses cuts out of order");
        sl.cross[p].push_back(hit);
        prev = hit;
      }
    }
    return sl;
  }
};

void validate_path_system(const Graph& g, const CutSequence& cuts,
                          const PathSystem& ps) {
  if (static_cast<int>(ps.paths.size()) != cuts.eta)
    throw Error("path system must have eta paths");
  VertexSet st = ps.source_side.unite(ps.sink_side);
  VertexSet interiors;
  for (const auto& path : ps.paths) {
    if (path.size() < 2) throw Error("degenerate path");
    if (!ps.source_side.contains(path.front()))
      throw Error("path does not start in S");
    if (!ps.sink_side.contains(path.back()))
      throw Error("path does not end in T");
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (!g.has_edge(path[i], path[i + 1]))
        throw Error("path uses a non-edge");
    VertexSet inner(std::vector<Vertex>(path.begin() + 1, path.end() - 1));
    if (inner.size() != static_cast<int>(path.size()) - 2)
      throw Error("path repeats a vertex");
    if (inner.intersects(st)) throw Error("path interior touches S or T");
    if (inner.intersects(interiors))
      throw Error("path interiors are not disjoint");
    interiors = interiors.unite(inner);
  }
  Slabs::build(g, cuts, ps);  // throws on crossing violations
}

}  // namespace

PathSystem disjoint_path_system(const Graph& g, const CutSequence& cuts) {
  PathSystem ps;
  ps.source_side = cuts.source_side;
  ps.sink_side = cuts.sink_side;
  ps.paths = disjoint_st_paths(g, cuts.source_side, cuts.sink_side);
  if (static_cast<int>(ps.paths.size()) != cuts.eta)
    throw InvalidCutSequenceError(
        "flow value does not match eta; cut sequence inconsistent");
  validate_path_system(g, cuts, ps);
  return ps;
}

// --------------------------------------------------------- classification --

GapCase classify_gap(const Graph& g, const CutSequence& cuts,
                     const PathSystem& ps, int gap) {
  Slabs sl = Slabs::build(g, cuts, ps);
  const int n = g.vertex_count();
  const int eta = static_cast<int>(ps.paths.size());
  const VertexSet& yg = sl.y[gap];

  GapCase out;
  out.gap = gap;

  // Case 1: connector of length >= 2 between two paths' slab segments with
  // interior in the gap, off both paths (other paths' vertices are allowed).
  for (int a = 0; a < eta; ++a) {
    for (int b = a + 1; b < eta; ++b) {
      std::vector<char> on_a(n, 0), on_b(n, 0);
      for (Vertex v : ps.paths[a]) on_a[v] = 1;
      for (Vertex v : ps.paths[b]) on_b[v] = 1;
      std::vector<char> seg_b(n, 0);
      for (int i = sl.cross[b][gap]; i <= sl.cross[b][gap + 1]; ++i)
        seg_b[ps.paths[b][i]] = 1;

      std::vector<Vertex> sources;
      for (int i = sl.cross[a][gap]; i <= sl.cross[a][gap + 1]; ++i)
        sources.push_back(ps.paths[a][i]);
      std::sort(sources.begin(), sources.end());

      std::vector<int> parent(n, -1);
      std::queue<Vertex> q;
      for (Vertex v : sources) {
        parent[v] = v;
        q.push(v);
      }
      std::vector<char> interior_ok(n, 0);
      for (Vertex v : yg)
        if (!on_a[v] && !on_b[v]) interior_ok[v] = 1;
      Vertex hit = -1, hit_end = -1;
      while (!q.empty() && hit < 0) {
        Vertex u = q.front();
        q.pop();
        bool u_is_source = std::binary_search(sources.begin(), sources.end(), u);
        if (!u_is_source) {
          for (Vertex wv : g.neighbors(u))
            if (seg_b[wv]) {
              hit = u;
              hit_end = wv;
              break;
            }
          if (hit >= 0) break;
        }
        for (Vertex wv : g.neighbors(u))
          if (interior_ok[wv] && parent[wv] < 0) {
            parent[wv] = u;
            q.push(wv);
          }
      }
      if (hit >= 0) {
        std::vector<Vertex> rev = {hit_end};
        Vertex v = hit;
        while (parent[v] != v) {
          rev.push_back(v);
          v = parent[v];
        }
        rev.push_back(v);  // the path-a root
        std::vector<Vertex> connector(rev.rbegin(), rev.rend());
        out.c = GapCase1{a, b, std::move(connector)};
        return out;
      }
    }
  }

  // Case 2: leftover vertices off every path
  VertexSet off = yg;
  for (const auto& path : ps.paths)
    off = off.minus(VertexSet(std::vector<Vertex>(path.begin(), path.end())));
  if (!off.empty()) {
    // components of the leftover, by ascending minimum vertex
    VertexSet seen;
    GapCase2 first_choice;
    bool have = false;
    for (Vertex v : off) {
      if (seen.contains(v)) continue;
      std::vector<Vertex> comp = {v};
      std::vector<Vertex> stack = {v};
      seen.insert(v);
      while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex wv : g.neighbors(u))
          if (off.contains(wv) && !seen.contains(wv)) {
            seen.insert(wv);
            comp.push_back(wv);
            stack.push_back(wv);
          }
      }
      VertexSet comp_set(comp);
      // adjacent paths
      std::vector<int> adj_paths;
      for (Vertex u : comp_set)
        for (Vertex wv : g.neighbors(u)) {
          int p = sl.owner[wv];
          if (p >= 0 &&
              std::find(adj_paths.begin(), adj_paths.end(), p) == adj_paths.end())
            adj_paths.push_back(p);
        }
      if (adj_paths.size() == 1) {
        out.c = GapCase2{std::move(comp_set), adj_paths.front()};
        return out;
      }
      if (!have) {
        first_choice = GapCase2{comp_set, -1};
        have = true;
      }
    }
    out.c = first_choice;  // no singly-attached component; reroute will stall
    return out;
  }

  // Case 3: paths cover the gap
  out.c = GapCase3{0, ps.paths[0][sl.cross[0][gap] + 1]};
  return out;
}

// ----------------------------------------------------------------- moves --

namespace {

std::tuple<int, int, long long> progress_measure(const Graph& g,
                                                 const CutSequence& cuts,
                                                 const PathSystem& ps) {
  Slabs sl = Slabs::build(g, cuts, ps);
  int c1 = 0, c2 = 0;
  long long len = 0;
  const int gaps = static_cast<int>(cuts.cuts.size()) - 1;
  for (int j = 0; j < gaps; ++j) {
    GapCase gc = classify_gap(g, cuts, ps, j);
    if (std::holds_alternative<GapCase1>(gc.c)) ++c1;
    if (std::holds_alternative<GapCase2>(gc.c)) ++c2;
    for (size_t p = 0; p < ps.paths.size(); ++p)
      len += sl.cross[p][j + 1] - sl.cross[p][j];
  }
  return {c1, c2, -len};
}

std::optional<PathSystem> accept_if_progress(const Graph& g,
                                             const CutSequence& cuts,
                                             const PathSystem& old_ps,
                                             PathSystem cand) {
  try {
    validate_path_system(g, cuts, cand);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (progress_measure(g, cuts, cand) <= progress_measure(g, cuts, old_ps))
    return std::nullopt;
  return cand;
}

std::vector<Vertex> splice(const std::vector<Vertex>& prefix_path, int keep_to,
                           const std::vector<Vertex>& mid,
                           const std::vector<Vertex>& suffix_path,
                           int resume_from) {
  std::vector<Vertex> out(prefix_path.begin(), prefix_path.begin() + keep_to + 1);
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), suffix_path.begin() + resume_from, suffix_path.end());
  return out;
}

// Case 3 helper: v's neighbor structure against the one other path.
struct Case3Frame {
  int p = -1;          // path owning v
  int q = -1;          // the unique other path carrying v's neighbors
  Vertex v = -1;       // first gap vertex of path p
  Vertex w = -1;       // first neighbor of v on q inside the gap
  int pos_v = -1, pos_w = -1;
  std::vector<int> v_list;  // positions on p of w's neighbors, ascending
  std::vector<int> w_list;  // positions on q of v's neighbors, ascending
};

std::optional<Case3Frame> case3_frame(const Graph& g, const Slabs& sl,
                                      const PathSystem& ps, int gap, int p) {
  Case3Frame fr;
  fr.p = p;
  const auto& path = ps.paths[p];
  fr.pos_v = sl.cross[p][gap] + 1;
  if (fr.pos_v >= sl.cross[p][gap + 1]) return std::nullopt;  // no interior
  fr.v = path[fr.pos_v];

  for (Vertex u : g.neighbors(fr.v)) {
    int o = sl.owner[u];
    if (o < 0 || o == p) continue;
    if (fr.q < 0)
      fr.q = o;
    else if (fr.q != o)
      return std::nullopt;  // neighbors on two other paths: a case-1 shape
  }
  if (fr.q < 0) return std::nullopt;

  const auto& qpath = ps.paths[fr.q];
  for (int i = sl.cross[fr.q][gap] + 1; i < sl.cross[fr.q][gap + 1]; ++i) {
    if (g.has_edge(fr.v, qpath[i])) {
      fr.pos_w = i;
      fr.w = qpath[i];
      break;
    }
  }
  if (fr.pos_w < 0) return std::nullopt;

  for (size_t i = 0; i < qpath.size(); ++i)
    if (g.has_edge(fr.v, qpath[i])) fr.w_list.push_back(static_cast<int>(i));
  for (size_t i = 0; i < path.size(); ++i)
    if (g.has_edge(fr.w, path[i])) fr.v_list.push_back(static_cast<int>(i));
  return fr;
}

}  // namespace

RerouteResult reroute(const Graph& g, const CutSequence& cuts,
                      const PathSystem& ps, const GapCase& gapcase) {
  const int gap = gapcase.gap;
  Slabs sl = Slabs::build(g, cuts, ps);
  RerouteResult stuck{RerouteResult::Status::stuck, {}, -1, -1};

  if (const auto* c2 = std::get_if<GapCase2>(&gapcase.c)) {
    if (c2->path_index < 0) return stuck;
    const int p = c2->path_index;
    const auto& path = ps.paths[p];
    std::vector<int> att;
    for (size_t i = 0; i < path.size(); ++i)
      for (Vertex u : g.neighbors(path[i]))
        if (c2->component.contains(u)) {
          att.push_back(static_cast<int>(i));
          break;
        }
    if (att.size() < 2) return stuck;
    const int first = att.front(), last = att.back();
    // shortest path inside the component joining neighbors of both ends
    std::vector<int> parent(g.vertex_count(), -1);
    std::queue<Vertex> q;
    for (Vertex u : c2->component)
      if (g.has_edge(path[first], u)) {
        parent[u] = u;
        q.push(u);
      }
    Vertex hit = -1;
    while (!q.empty() && hit < 0) {
      Vertex u = q.front();
      q.pop();
      if (g.has_edge(u, path[last])) {
        hit = u;
        break;
      }
      for (Vertex wv : g.neighbors(u))
        if (c2->component.contains(wv) && parent[wv] < 0) {
          parent[wv] = u;
          q.push(wv);
        }
    }
    if (hit < 0) return stuck;
    std::vector<Vertex> mid;
    Vertex u = hit;
    while (parent[u] != u) {
      mid.push_back(u);
      u = parent[u];
    }
    mid.push_back(u);
    std::reverse(mid.begin(), mid.end());

    PathSystem cand = ps;
    cand.paths[p] = splice(path, first, mid, path, last);
    if (auto ok = accept_if_progress(g, cuts, ps, std::move(cand)))
      return {RerouteResult::Status::applied, std::move(*ok), -1, -1};
    return stuck;
  }

  if (!std::holds_alternative<GapCase3>(gapcase.c)) return stuck;

  const int eta = static_cast<int>(ps.paths.size());

  // (a) chord shortcuts keep every gap segment induced
  for (int p = 0; p < eta; ++p) {
    const auto& path = ps.paths[p];
    const int lo = sl.cross[p][gap], hi = sl.cross[p][gap + 1];
    for (int i = lo; i <= hi; ++i)
      for (int k = i + 2; k <= hi; ++k) {
        if (!g.has_edge(path[i], path[k])) continue;
        PathSystem cand = ps;
        cand.paths[p] = splice(path, i, {}, path, k);
        if (auto ok = accept_if_progress(g, cuts, ps, std::move(cand)))
          return {RerouteResult::Status::applied, std::move(*ok), -1, -1};
      }
  }

  // (b) crossing swaps between the two paths sharing the first gap vertex
  for (int p = 0; p < eta; ++p) {
    auto fr = case3_frame(g, sl, ps, gap, p);
    if (!fr) continue;
    const auto& ppath = ps.paths[fr->p];
    const auto& qpath = ps.paths[fr->q];
    auto in_closed_nbhd = [&](Vertex a, Vertex b) {
      return a == b || g.has_edge(a, b);
    };

    // forward on the v side: jump v -> w_t and w -> v_i
    if (!fr->w_list.empty() && fr->w_list.back() > fr->pos_w) {
      const int wt = fr->w_list.back();
      for (int vi : fr->v_list) {
        if (vi <= fr->pos_v || in_closed_nbhd(ppath[vi], fr->v)) continue;
        PathSystem cand = ps;
        cand.paths[fr->p] = splice(ppath, fr->pos_v, {}, qpath, wt);
        cand.paths[fr->q] = splice(qpath, fr->pos_w, {}, ppath, vi);
        if (auto ok = accept_if_progress(g, cuts, ps, std::move(cand)))
          return {RerouteResult::Status::applied, std::move(*ok), -1, -1};
      }
    }
    // backward on the v side: jump v_i -> w and w_1 -> v
    if (!fr->w_list.empty() && fr->w_list.front() < fr->pos_w) {
      const int w1 = fr->w_list.front();
      for (int vi : fr->v_list) {
        if (vi >= fr->pos_v || in_closed_nbhd(ppath[vi], fr->v)) continue;
        PathSystem cand = ps;
        cand.paths[fr->p] = splice(ppath, vi, {}, qpath, fr->pos_w);
        cand.paths[fr->q] = splice(qpath, w1, {}, ppath, fr->pos_v);
        if (auto ok = accept_if_progress(g, cuts, ps, std::move(cand)))
          return {RerouteResult::Status::applied, std::move(*ok), -1, -1};
      }
    }
    // forward on the w side: jump w -> v_s and v -> w_i
    if (!fr->v_list.empty() && fr->v_list.back() > fr->pos_v) {
      const int vs = fr->v_list.back();
      for (int wi : fr->w_list) {
        if (wi <= fr->pos_w || in_closed_nbhd(qpath[wi], fr->w)) continue;
        PathSystem cand = ps;
        cand.paths[fr->q] = splice(qpath, fr->pos_w, {}, ppath, vs);
        cand.paths[fr->p] = splice(ppath, fr->pos_v, {}, qpath, wi);
        if (auto ok = accept_if_progress(g, cuts, ps, std::move(cand)))
          return {RerouteResult::Status::applied, std::move(*ok), -1, -1};
      }
    }
    // backward on the w side: jump w_i -> v and v_1 -> w
    if (!fr->v_list.empty() && fr->v_list.front() < fr->pos_v) {
      const int v1 = fr->v_list.front();
      for (int wi : fr->w_list) {
        if (wi >= fr->pos_w || in_closed_nbhd(qpath[wi], fr->w)) continue;
        PathSystem cand = ps;
        cand.paths[fr->q] = splice(qpath, wi, {}, ppath, fr->pos_v);
        cand.paths[fr->p] = splice(ppath, v1, {}, qpath, fr->pos_w);
        if (auto ok = accept_if_progress(g, cuts, ps, std::move(cand)))
          return {RerouteResult::Status::applied, std::move(*ok), -1, -1};
      }
    }
  }

  // (c) no exchange applies: the first stuck frame matching the degree-5
  // twin configuration ends the whole analysis
  for (int p = 0; p < eta; ++p) {
    auto fr = case3_frame(g, sl, ps, gap, p);
    if (!fr) continue;
    if (g.degree(fr->v) == 5 && g.degree(fr->w) == 5 &&
        g.closed_neighborhood(fr->v) == g.closed_neighborhood(fr->w)) {
      return {RerouteResult::Status::twins, {}, std::min(fr->v, fr->w),
              std::max(fr->v, fr->w)};
    }
  }
  return stuck;
}

// ------------------------------------------------------------- extraction --

Witness extract_from_nested(const Graph& g, const CutSequence& cuts, int ell) {
  if (ell < 1) throw ParamTooSmallError("extract_from_nested needs ell >= 1");
  cuts.validate(g);
  PathSystem ps = disjoint_path_system(g, cuts);
  const int gaps = static_cast<int>(cuts.cuts.size()) - 1;

  // progress measure strictly increases per applied reroute; the guard only
  // trips on an implementation fault
  long long guard =
      1000 + 4LL * (gaps + 2) * (gaps + 2) * (g.vertex_count() + 2);
  std::vector<GapCase> cases;
  for (;;) {
    if (--guard < 0) throw Error("reroute loop exceeded its progress bound");
    cases.clear();
    for (int j = 0; j < gaps; ++j) cases.push_back(classify_gap(g, cuts, ps, j));
    bool improved = false;
    for (int j = 0; j < gaps && !improved; ++j) {
      if (std::holds_alternative<GapCase1>(cases[j].c)) continue;
      RerouteResult rr = reroute(g, cuts, ps, cases[j]);
      switch (rr.status) {
        case RerouteResult::Status::applied:
          ps = std::move(rr.system);
          improved = true;
          break;
        case RerouteResult::Status::twins:
          return TwinsFound{rr.twin_v, rr.twin_w};
        case RerouteResult::Status::stuck:
          break;
      }
    }
    if (!improved) break;
  }

  // pigeonhole over the common pair
  std::vector<std::pair<std::pair<int, int>, std::vector<int>>> tally;
  int c1 = 0, c2 = 0, c3 = 0;
  for (int j = 0; j < gaps; ++j) {
    if (const auto* g1 = std::get_if<GapCase1>(&cases[j].c)) {
      ++c1;
      auto key = std::make_pair(g1->path_a, g1->path_b);
      auto it = std::find_if(tally.begin(), tally.end(),
                             [&](const auto& t) { return t.first == key; });
      if (it == tally.end())
        tally.push_back({key, {j}});
      else
        it->second.push_back(j);
    } else if (std::holds_alternative<GapCase2>(cases[j].c)) {
      ++c2;
    } else {
      ++c3;
    }
  }
  std::sort(tally.begin(), tally.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [pair, gap_list] : tally) {
    if (static_cast<int>(gap_list.size()) < ell) continue;
    // first ell gaps carrying this pair
    std::vector<int> chosen(gap_list.begin(), gap_list.begin() + ell);
    Slabs sl = Slabs::build(g, cuts, ps);
    const int a = pair.first, b = pair.second;
    const int jfirst = chosen.front(), jlast = chosen.back() + 1;

    MinorModel model;
    model.ell = ell;
    auto slice = [&](int p) {
      const auto& path = ps.paths[p];
      return VertexSet(std::vector<Vertex>(
          path.begin() + sl.cross[p][jfirst],
          path.begin() + sl.cross[p][jlast] + 1));
    };
    model.side_a = slice(a);
    model.side_b = slice(b);
    for (int j : chosen) {
      const auto& conn = std::get<GapCase1>(cases[j].c).connector;
      model.legs.push_back(VertexSet(
          std::vector<Vertex>(conn.begin() + 1, conn.end() - 1)));
    }
    auto check = verify_model(g, model);
    if (check.ok) return MinorFound{std::move(model)};
    Report rep = {{"reason", "pigeonhole model failed verification"},
                  {"violation", check.violation}};
    return Saturated{std::move(rep)};
  }

  long long eta_pairs = 1LL * cuts.eta * (cuts.eta - 1) / 2;
  Report rep;
  rep.emplace_back("reason", "no common pair reached ell connectors");
  rep.emplace_back("cuts", std::to_string(cuts.cuts.size()));
  rep.emplace_back("eta", std::to_string(cuts.eta));
  rep.emplace_back("gaps", std::to_string(gaps));
  rep.emplace_back("case1-gaps", std::to_string(c1));
  rep.emplace_back("case2-gaps", std::to_string(c2));
  rep.emplace_back("case3-gaps", std::to_string(c3));
  rep.emplace_back("pigeonhole-threshold", std::to_string(ell * eta_pairs));
  int best_count = 0;
  for (const auto& [pair, gap_list] : tally)
    best_count = std::max(best_count, static_cast<int>(gap_list.size()));
  rep.emplace_back("best-pair-count", std::to_string(best_count));
  return Saturated{std::move(rep)};
}

}  // namespace k2l
