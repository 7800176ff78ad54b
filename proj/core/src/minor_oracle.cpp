#include "k2l/minor_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>

namespace k2l {

namespace {

using Clock = std::chrono::steady_clock;

// Small dynamic bitset; word loops keep the hot set operations cheap.
struct Bits {
  std::vector<uint64_t> w;

  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int count() const {
    int c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    return *this;
  }
  Bits& and_not(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    return *this;
  }
  template <typename F>
  void for_each(F f) const {
    for (size_t k = 0; k < w.size(); ++k) {
      uint64_t x = w[k];
      while (x) {
        int b = std::countr_zero(x);
        f(static_cast<int>(k * 64 + b));
        x &= x - 1;
      }
    }
  }
};

struct StopSearch {};   // budget tripped
struct SkipAnchor {};   // a lower anchor already produced a model
struct Found {};

// Per-worker search state. The enumeration order (side anchors ascending,
// connected-set extension in discovery order) defines the canonical first
// model for a given (graph, ell).
struct Searcher {
  const Graph& g;
  int n;
  int ell;
  long long node_limit;
  std::vector<Bits> adj;

  std::atomic<long long>& nodes;
  std::atomic<bool>& stop;
  std::atomic<int>& best_anchor;
  Clock::time_point deadline;

  int current_anchor = 0;
  int a_size_ = 0;
  std::optional<MinorModel> result;

  // scratch for leg packing
  std::vector<signed char> vertex_used;
  std::vector<std::vector<signed char>> edge_flow;

  Searcher(const Graph& graph, int ell_, const OracleBudget& b,
           std::atomic<long long>& nodes_, std::atomic<bool>& stop_,
           std::atomic<int>& best_anchor_, Clock::time_point deadline_)
      : g(graph),
        n(graph.vertex_count()),
        ell(ell_),
        node_limit(b.node_limit),
        nodes(nodes_),
        stop(stop_),
        best_anchor(best_anchor_),
        deadline(deadline_),
        vertex_used(n, 0),
        edge_flow(n, std::vector<signed char>(n, 0)) {
    adj.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      Bits bm(n);
      for (Vertex u : g.neighbors(v)) bm.set(u);
      adj.push_back(std::move(bm));
    }
  }

  void tick() {
    long long c = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (c > node_limit || ((c & 1023) == 0 && Clock::now() > deadline))
      stop.store(true, std::memory_order_relaxed);
    if (stop.load(std::memory_order_relaxed)) throw StopSearch{};
    if (current_anchor > best_anchor.load(std::memory_order_relaxed))
      throw SkipAnchor{};
  }

  // Maximum set of vertex-disjoint paths between N(A) and N(B) inside mid,
  // stopping at ell; each path becomes one leg. Unit vertex capacities via
  // implicit node splitting: node 2v is in(v), 2v+1 is out(v).
  std::optional<std::vector<std::vector<Vertex>>> pack_legs(const Bits& a,
                                                            const Bits& b,
                                                            const Bits& mid) {
    Bits na(n), nb(n);
    a.for_each([&](int v) { na |= adj[v]; });
    b.for_each([&](int v) { nb |= adj[v]; });
    na &= mid;
    nb &= mid;
    if (na.count() < ell || nb.count() < ell) return std::nullopt;

    std::fill(vertex_used.begin(), vertex_used.end(), 0);
    mid.for_each(
        [&](int v) { std::fill(edge_flow[v].begin(), edge_flow[v].end(), 0); });

    std::vector<int> parent(2 * n);
    std::vector<int> queue;
    for (int flow = 0; flow < ell; ++flow) {
      std::fill(parent.begin(), parent.end(), -1);
      queue.clear();
      na.for_each([&](int v) {
        parent[2 * v] = 2 * v;  // roots
        queue.push_back(2 * v);
      });
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int node = queue[qi];
        int v = node / 2;
        if (node % 2 == 0) {
          // in(v): forward split arc when v is free
          if (!vertex_used[v] && parent[2 * v + 1] < 0) {
            parent[2 * v + 1] = node;
            queue.push_back(2 * v + 1);
          }
          // backward edge arcs: cancel a unit flowing u -> v
          adj[v].for_each([&](int u) {
            if (mid.test(u) && edge_flow[u][v] > 0 && parent[2 * u + 1] < 0) {
              parent[2 * u + 1] = node;
              queue.push_back(2 * u + 1);
            }
          });
        } else {
          // out(v): forward edge arcs; backward split arc when v is used
          adj[v].for_each([&](int u) {
            if (mid.test(u) && parent[2 * u] < 0) {
              parent[2 * u] = node;
              queue.push_back(2 * u);
            }
          });
          if (vertex_used[v] && parent[2 * v] < 0) {
            parent[2 * v] = node;
            queue.push_back(2 * v);
          }
        }
      }
      int goal = -1;
      nb.for_each([&](int v) {
        if (goal < 0 && parent[2 * v + 1] >= 0) goal = 2 * v + 1;
      });
      if (goal < 0) return std::nullopt;

      for (int node = goal; parent[node] != node;) {
        int prev = parent[node];
        int nv = node / 2, pv = prev / 2;
        if (nv == pv) {
          vertex_used[nv] = prev % 2 == 0 ? 1 : 0;  // claim or release
        } else if (prev % 2 == 1 && node % 2 == 0) {
          edge_flow[pv][nv] += 1;  // forward out(pv) -> in(nv)
        } else {
          edge_flow[nv][pv] -= 1;  // cancellation of nv -> pv
        }
        node = prev;
      }
    }

    // decode: path starts are used N(A) vertices with no inbound flow
    std::vector<std::vector<Vertex>> legs;
    na.for_each([&](int v) {
      if (static_cast<int>(legs.size()) == ell || !vertex_used[v]) return;
      bool inbound = false;
      adj[v].for_each([&](int u) {
        if (mid.test(u) && edge_flow[u][v] > 0) inbound = true;
      });
      if (inbound) return;
      std::vector<Vertex> path = {v};
      for (int cur = v;;) {
        int next = -1;
        adj[cur].for_each([&](int u) {
          if (next < 0 && mid.test(u) && edge_flow[cur][u] > 0) next = u;
        });
        if (next < 0) break;
        path.push_back(next);
        cur = next;
      }
      legs.push_back(std::move(path));
    });
    if (static_cast<int>(legs.size()) != ell) return std::nullopt;
    return legs;
  }

  void try_pair(const Bits& a, const Bits& b) {
    tick();
    Bits mid(n);
    for (int v = 0; v < n; ++v)
      if (!a.test(v) && !b.test(v)) mid.set(v);
    if (mid.count() < ell) return;
    auto legs = pack_legs(a, b, mid);
    if (!legs) return;
    MinorModel model;
    model.ell = ell;
    std::vector<Vertex> av, bv;
    a.for_each([&](int v) { av.push_back(v); });
    b.for_each([&](int v) { bv.push_back(v); });
    model.side_a = VertexSet(std::move(av));
    model.side_b = VertexSet(std::move(bv));
    for (auto& leg : *legs) model.legs.emplace_back(std::move(leg));
    result = std::move(model);
    throw Found{};
  }

  // Connected-set enumeration: ext holds candidate extensions in discovery
  // order; seen covers the set, ext, and everything permanently excluded in
  // this subtree (skipped candidates stay excluded, so no duplicates).
  void enumerate_b(const Bits& a, Bits& b, int b_size,
                   const std::vector<Vertex>& ext, const Bits& seen,
                   const Bits& na_template, int na_free) {
    tick();
    if (na_free >= ell) try_pair(a, b);
    if (na_free < ell) return;  // B only grows, N(A) only shrinks
    if (b_size >= n - ell - a_size_) return;
    for (size_t i = 0; i < ext.size(); ++i) {
      Vertex v = ext[i];
      int nf = na_free - (na_template.test(v) ? 1 : 0);
      if (nf < ell) continue;
      std::vector<Vertex> next_ext(ext.begin() + i + 1, ext.end());
      Bits next_seen = seen;
      b.set(v);
      adj[v].for_each([&](int u) {
        if (!next_seen.test(u)) {
          next_seen.set(u);
          next_ext.push_back(u);
        }
      });
      enumerate_b(a, b, b_size + 1, next_ext, next_seen, na_template, nf);
      b.reset(v);
    }
  }

  void start_b_phase(const Bits& a, int a_anchor) {
    Bits na(n);
    a.for_each([&](int v) { na |= adj[v]; });
    na.and_not(a);
    if (na.count() < ell) return;  // each leg needs its own N(A) vertex
    for (Vertex b0 = a_anchor + 1; b0 < n; ++b0) {
      if (a.test(b0)) continue;
      Bits b(n);
      b.set(b0);
      Bits seen = a;
      for (Vertex v = 0; v <= b0; ++v) seen.set(v);  // min(B) = b0
      std::vector<Vertex> ext;
      adj[b0].for_each([&](int u) {
        if (!seen.test(u)) {
          seen.set(u);
          ext.push_back(u);
        }
      });
      enumerate_b(a, b, 1, ext, seen, na,
                  na.count() - (na.test(b0) ? 1 : 0));
    }
  }

  void enumerate_a(Bits& a, int a_size, const std::vector<Vertex>& ext,
                   const Bits& seen, int anchor) {
    tick();
    a_size_ = a_size;
    start_b_phase(a, anchor);
    if (a_size >= n - ell - 1) return;
    for (size_t i = 0; i < ext.size(); ++i) {
      Vertex v = ext[i];
      std::vector<Vertex> next_ext(ext.begin() + i + 1, ext.end());
      Bits next_seen = seen;
      a.set(v);
      adj[v].for_each([&](int u) {
        if (!next_seen.test(u)) {
          next_seen.set(u);
          next_ext.push_back(u);
        }
      });
      enumerate_a(a, a_size + 1, next_ext, next_seen, anchor);
      a.reset(v);
    }
  }

  void run_anchor(int a0) {
    current_anchor = a0;
    Bits a(n);
    a.set(a0);
    Bits seen(n);
    for (Vertex v = 0; v <= a0; ++v) seen.set(v);  // min(A) = a0
    std::vector<Vertex> ext;
    adj[a0].for_each([&](int u) {
      if (!seen.test(u)) {
        seen.set(u);
        ext.push_back(u);
      }
    });
    enumerate_a(a, 1, ext, seen, a0);
  }
};

}  // namespace

OracleResult find_k2l_minor(const Graph& g, int ell,
                            const OracleBudget& budget) {
  if (ell < 1) throw ParamTooSmallError("find_k2l_minor needs ell >= 1");
  const int n = g.vertex_count();
  if (n < ell + 2) return NoMinor{0};
  // An exhaustive run on thousands of vertices cannot finish under any
  // realistic budget; refuse before allocating quadratic scratch.
  if (n > 2048) return BudgetExhausted{0};

  std::atomic<long long> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<int> next_anchor{0};
  std::atomic<int> best_anchor{n};
  auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(budget.time_limit_seconds));

  const int workers = std::max(1, std::min(budget.threads, n));
  std::vector<std::optional<MinorModel>> found(n);
  std::atomic<bool> exhausted{false};

  auto work = [&](int) {
    Searcher s(g, ell, budget, nodes, stop, best_anchor, deadline);
    for (;;) {
      int a0 = next_anchor.fetch_add(1, std::memory_order_relaxed);
      if (a0 >= n - 1) break;  // min(A) < min(B) needs a0 <= n-2
      if (a0 > best_anchor.load(std::memory_order_relaxed)) break;
      try {
        s.result.reset();
        s.run_anchor(a0);
      } catch (const Found&) {
        found[a0] = std::move(s.result);
        int cur = best_anchor.load(std::memory_order_relaxed);
        while (a0 < cur && !best_anchor.compare_exchange_weak(
                               cur, a0, std::memory_order_relaxed)) {
        }
      } catch (const SkipAnchor&) {
        continue;
      } catch (const StopSearch&) {
        exhausted.store(true, std::memory_order_relaxed);
        break;
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  for (int a0 = 0; a0 < n; ++a0)
    if (found[a0]) return std::move(*found[a0]);
  if (exhausted.load() || stop.load()) return BudgetExhausted{budget.node_limit};
  return NoMinor{nodes.load()};
}

MinorSweep minor_free_up_to(const Graph& g, int ell_max,
                            const OracleBudget& budget) {
  if (ell_max < 1)
    throw ParamTooSmallError("minor_free_up_to needs ell_max >= 1");
  MinorSweep sweep;
  sweep.ell_max = ell_max;
  for (int ell = 1; ell <= ell_max; ++ell) {
    sweep.per_ell.push_back(find_k2l_minor(g, ell, budget));
    if (std::holds_alternative<MinorModel>(sweep.per_ell.back()))
      sweep.largest_with_minor = ell;
  }
  // monotonicity cross-check: a minor at ell implies one at every smaller ell
  for (int ell = 2; ell <= ell_max; ++ell) {
    if (std::holds_alternative<MinorModel>(sweep.per_ell[ell - 1]) &&
        std::holds_alternative<NoMinor>(sweep.per_ell[ell - 2]))
      throw Error("oracle monotonicity violated at ell=" + std::to_string(ell));
  }
  return sweep;
}

}  // namespace k2l
