#pragma once

// Test-only reference oracle: enumerates every assignment of vertices to the
// ell+2 branch sets (plus "unused") with canonical ordering, checking the
// model conditions directly. Independent of the library search; exponential,
// so keep instances at n <= 9.

#include <vector>

#include "k2l/graph.hpp"

namespace k2l_test {

class NaiveMinorOracle {
 public:
  NaiveMinorOracle(const k2l::Graph& g, int ell) : g_(g), ell_(ell) {}

  bool has_minor() {
    assign_.assign(g_.vertex_count(), kUnused);
    counts_.assign(ell_ + 2, 0);
    return place(0);
  }

 private:
  static constexpr int kUnused = -1;
  static constexpr int kSideA = 0;
  static constexpr int kSideB = 1;
  // legs are classes 2..ell+1

  bool place(int v) {
    const int n = g_.vertex_count();
    if (v == n) return valid();
    int empty_classes = 0;
    for (int c = 0; c < ell_ + 2; ++c)
      if (counts_[c] == 0) ++empty_classes;
    if (empty_classes > n - v) return false;

    for (int c = kUnused; c < ell_ + 2; ++c) {
      // canonical representatives: the two sides are interchangeable, so
      // min(A) < min(B); legs are interchangeable, so their minima ascend
      if (c == kSideB && counts_[kSideA] == 0) continue;
      if (c > 2 && counts_[c - 1] == 0) continue;
      assign_[v] = c;
      if (c >= 0) ++counts_[c];
      if (place(v + 1)) return true;
      if (c >= 0) --counts_[c];
      assign_[v] = kUnused;
    }
    return false;
  }

  bool connected_class(int c) const {
    std::vector<int> members;
    for (int v = 0; v < g_.vertex_count(); ++v)
      if (assign_[v] == c) members.push_back(v);
    if (members.empty()) return false;
    std::vector<char> seen(g_.vertex_count(), 0);
    std::vector<int> stack = {members[0]};
    seen[members[0]] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g_.neighbors(u))
        if (assign_[w] == c && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == static_cast<int>(members.size());
  }

  bool touches(int c1, int c2) const {
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (assign_[v] != c1) continue;
      for (int w : g_.neighbors(v))
        if (assign_[w] == c2) return true;
    }
    return false;
  }

  bool valid() const {
    for (int c = 0; c < ell_ + 2; ++c)
      if (counts_[c] == 0 || !connected_class(c)) return false;
    for (int leg = 2; leg < ell_ + 2; ++leg)
      if (!touches(kSideA, leg) || !touches(kSideB, leg)) return false;
    return true;
  }

  const k2l::Graph& g_;
  int ell_;
  std::vector<int> assign_;
  std::vector<int> counts_;
};

inline bool naive_has_k2l_minor(const k2l::Graph& g, int ell) {
  return NaiveMinorOracle(g, ell).has_minor();
}

}  // namespace k2l_test
