#include "doctest.h"
#include "k2l/connectivity.hpp"
#include "k2l/families.hpp"
#include "test_helpers.hpp"

using namespace k2l;
using namespace k2l_test;

TEST_CASE("st_connectivity on forced instances") {
  Graph k23 = complete_bipartite_2l(3);
  CHECK(st_connectivity(k23, VertexSet({0}), VertexSet({1})) == 3);

  Graph c6 = cycle_graph(6);
  CHECK(st_connectivity(c6, VertexSet({0}), VertexSet({3})) == 2);

  CHECK_THROWS_AS(st_connectivity(c6, VertexSet({0}), VertexSet({1})),
                  NotSeparableError);
  CHECK_THROWS_AS(st_connectivity(c6, VertexSet({0}), VertexSet({0})),
                  NotSeparableError);
}

TEST_CASE("st_connectivity matches brute force on the strong product") {
  // Frozen: the antipodal rung pairs of C20 x K2 are joined by exactly 4
  // internally disjoint paths (brute force re-checks the 4 below).
  Graph g = cycle_strong_edge(20);
  VertexSet s({0, 20}), t({10, 30});
  CHECK(st_connectivity(g, s, t) == 4);
  CHECK(brute_st_connectivity(g, s, t, 4) == 4);
}

TEST_CASE("vertex_connectivity") {
  CHECK(vertex_connectivity(complete_graph(4)) == 3);
  CHECK(vertex_connectivity(cycle_graph(5)) == 2);
  CHECK(vertex_connectivity(necklace(8)) == 4);
  CHECK(vertex_connectivity(path_graph(4)) == 1);
  Graph disconnected = build_graph(4, {{0, 1}, {2, 3}});
  CHECK(vertex_connectivity(disconnected) == 0);
  CHECK_THROWS_AS(vertex_connectivity(build_graph(1, {})), TooSmallError);
}

TEST_CASE("min_vertex_cut canonical choice") {
  Graph k23 = complete_bipartite_2l(3);
  CHECK(min_vertex_cut(k23, VertexSet({0}), VertexSet({1})) ==
        VertexSet({2, 3, 4}));

  // C6 with antipodal singletons: the source-side cut takes the two interior
  // vertices adjacent to the source.
  Graph c6 = cycle_graph(6);
  CHECK(min_vertex_cut(c6, VertexSet({0}), VertexSet({3})) ==
        VertexSet({1, 5}));
}

TEST_CASE("disjoint paths on forced instances") {
  Graph k23 = complete_bipartite_2l(3);
  auto paths = disjoint_st_paths(k23, VertexSet({0}), VertexSet({1}));
  REQUIRE(paths.size() == 3);
  for (const auto& p : paths) {
    CHECK(p.size() == 3);
    CHECK(p.front() == 0);
    CHECK(p.back() == 1);
  }

  Graph c6 = cycle_graph(6);
  auto arcs = disjoint_st_paths(c6, VertexSet({0}), VertexSet({3}));
  REQUIRE(arcs.size() == 2);
}

TEST_CASE("strong product rung pairs form the minimum cuts") {
  // S and T are antipodal rung pairs; a minimum cut takes one full rung pair
  // on each side of the cycle
  int n = 12;
  Graph g = cycle_strong_edge(n);
  VertexSet s({0, n}), t({6, n + 6});
  CHECK(st_connectivity(g, s, t) == 4);
  VertexSet cut = min_vertex_cut(g, s, t);
  REQUIRE(cut.size() == 4);
  // shape {(i,a),(i,b),(j,a),(j,b)} with i on one arc and j on the other
  auto ids = cut.ids();
  int i = ids[0], j = ids[1];
  CHECK(cut == VertexSet({i, j, n + i, n + j}));
  CHECK((1 <= i && i < 6));
  CHECK((6 < j && j < n));

  auto paths = disjoint_st_paths(g, s, t);
  REQUIRE(paths.size() == 4);
  int forward = 0, backward = 0;
  for (const auto& p : paths) {
    // classify by which arc the second vertex sits on
    int second = p[1] % n;
    (second >= 1 && second <= 5 ? forward : backward) += 1;
  }
  CHECK(forward == 2);
  CHECK(backward == 2);
}

TEST_CASE("Menger consistency on random instances") {
  std::mt19937 rng(11);
  int done = 0;
  while (done < 200) {
    Graph g = random_connected_graph(rng, 10, 0.3);
    std::uniform_int_distribution<int> pick(0, 9);
    int s = pick(rng), t = pick(rng);
    if (s == t || g.has_edge(s, t)) continue;
    VertexSet S({s}), T({t});
    int eta = st_connectivity(g, S, T);
    VertexSet cut = min_vertex_cut(g, S, T);
    auto paths = disjoint_st_paths(g, S, T);
    CHECK(cut.size() == eta);
    CHECK(static_cast<int>(paths.size()) == eta);
    CHECK(cut_separates(g, S, T, cut.ids()));
    // interiors pairwise disjoint
    VertexSet seen;
    for (const auto& p : paths) {
      for (size_t i = 1; i + 1 < p.size(); ++i) {
        CHECK(!seen.contains(p[i]));
        seen.insert(p[i]);
      }
    }
    ++done;
  }
}
