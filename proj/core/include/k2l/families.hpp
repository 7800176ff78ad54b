#pragma once

#include <string>
#include <vector>

#include "k2l/graph.hpp"

namespace k2l {

// Deterministic generators for the named graph families. Vertex id layouts
// are fixed so that certificates and golden tests are stable:
//
//   necklace(n)           v_i = i, w_i = n + i; cycles v_0..v_{n-1} and
//                         w_0..w_{n-1}, plus v_i ~ w_i and v_i ~ w_{i+1}.
//                         4-regular, 4n edges.
//   wheel(n)              rim 0..n-1, hub n adjacent to the whole rim.
//   gadget_wheel(n)       hub 0, rim u_1..u_{2n} = 1..2n, then per gadget i
//                         three vertices x_i,y_i,z_i such that
//                         {u_{2i-1}, u_{2i}, x_i, y_i, z_i} induces a K5.
//   gadget_wheel_delta(n, delta)
//                         same with delta-1 fresh vertices per gadget forming
//                         a K_{delta+1}; gadget_wheel(n) is delta = 4.
//   cycle_strong_edge(n)  strong product of an n-cycle with an edge:
//                         a-rail 0..n-1, b-rail n..2n-1; rungs and both
//                         diagonals per rung cell. 5-regular.
//   king(rows, cols)      rows x cols grid, id (i,j) = i*cols + j, with
//                         horizontal, vertical and both diagonal adjacencies
//                         in every unit cell.
//   complete_bipartite_2l(ell)
//                         sides {0,1} and {2..ell+1}.
//   apex_necklace(n)      necklace(n) plus apex 2n adjacent to all v_i.

Graph necklace(int n);                         // n >= 4
Graph wheel(int n);                            // n >= 3 (rim length)
Graph gadget_wheel(int n);                     // n >= 2 (gadget count)
Graph gadget_wheel_delta(int n, int delta);    // n >= 2, delta >= 3
Graph cycle_strong_edge(int n);                // n >= 4
Graph king(int rows, int cols);                // rows, cols >= 1
Graph complete_bipartite_2l(int ell);          // ell >= 1
Graph apex_necklace(int n);                    // n >= 4

enum class FamilyKind {
  necklace,
  wheel,
  gadget_wheel,
  cycle_strong_edge,
  king,
  complete_bipartite_2l,
  apex_necklace,
};

struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;
};

Graph generate(const FamilySpec& spec);

/// Parses a family name as used by the CLI ("necklace", "wheel", ...).
FamilyKind parse_family_kind(const std::string& name);
std::string family_kind_name(FamilyKind kind);

/// Static audit of a graph against the bounds relevant for excluding a
/// K_{2,ell} minor. density_slack is (ell+1)(n-1)/2 - m, kept as twice its
/// value so half-integers stay exact. Negative slack flags an inconsistency
/// with a minor-freeness claim; it is not an error.
struct FamilyAudit {
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  int connectivity = 0;
  std::vector<Edge> twin_pairs;         // all twin pairs
  std::vector<Edge> twin_pairs_deg5;    // twins of degree exactly 5
  bool regular = false;
  long long density_bound_x2 = 0;       // (ell+1)(n-1)
  long long density_slack_x2 = 0;       // bound - 2m
  bool density_ok = false;              // slack >= 0
};

FamilyAudit audit(const Graph& g, int ell);

}  // namespace k2l
