#pragma once

// Named graph families: circulants, the Moebius ladder cubic supply, the
// C* gadget (order ell, degrees 4^{ell-1} 2), the DSO-extremal family, and
// the Claim 1 Case 2.2 comparison graph.

#include <numeric>
#include <set>
#include <vector>

#include "dso/graph.hpp"

namespace dso {

struct CirculantSpec {
  int r = 0;                 // vertex count
  std::vector<int> offsets;  // strictly increasing, 1 <= a1 < ... <= r/2

  void validate() const {
    if (r < 2) {
      throw std::domain_error("circulant requires r >= 2, got " +
                              std::to_string(r));
    }
    if (offsets.empty()) {
      throw std::domain_error("circulant requires at least one offset");
    }
    int prev = 0;
    for (int a : offsets) {
      if (a <= prev) {
        throw std::domain_error(
            "circulant offsets must be strictly increasing positive integers");
      }
      if (a > r / 2) {
        throw std::domain_error("circulant offset " + std::to_string(a) +
                                " exceeds floor(r/2) = " +
                                std::to_string(r / 2));
      }
      prev = a;
    }
  }
};

// Vertices 0..r-1, edges {i, (i+a) mod r} for each offset a. 2k-regular when
// the largest offset stays below r/2; connected iff gcd(a1,...,ak,r) = 1.
inline Graph circulant(const CirculantSpec& spec) {
  spec.validate();
  std::set<VertexPair> edges;
  for (int a : spec.offsets) {
    for (int i = 0; i < spec.r; ++i) {
      const int j = (i + a) % spec.r;
      edges.insert(std::minmax(i, j));
    }
  }
  std::vector<VertexPair> list(edges.begin(), edges.end());
  return Graph(spec.r, list);
}

inline Graph circulant(int r, std::vector<int> offsets) {
  return circulant(CirculantSpec{r, std::move(offsets)});
}

// C(2k; 1, k): connected cubic graph on 2k vertices.
inline Graph mobius_ladder(int k) {
  if (k < 2) {
    throw std::domain_error("mobius_ladder requires k >= 2, got " +
                            std::to_string(k));
  }
  return circulant(2 * k, {1, k});
}

// C*(ell-1; 1, 2): take the 4-regular circulant C(ell-1; 1, 2), remove the
// edge {0,1}, and add a new vertex adjacent to both 0 and 1. Order ell,
// degree sequence (4^{ell-1}, 2), cyclomatic number ell.
inline Graph c_star(int ell) {
  if (ell < 6) {
    throw std::domain_error("c_star requires ell >= 6, got " +
                            std::to_string(ell));
  }
  const Graph base = circulant(ell - 1, {1, 2});
  std::vector<VertexPair> edges;
  for (const auto& e : base.edges()) {
    if (e != VertexPair{0, 1}) edges.push_back(e);
  }
  edges.emplace_back(0, ell - 1);
  edges.emplace_back(1, ell - 1);
  return Graph(ell, edges);
}

// DSO minimizer witness for n >= 2(ell-1) >= 4. At n = 2(ell-1) this is the
// cubic Moebius ladder itself; for larger n the rung {0,1} is replaced by a
// path through n - 2(ell-1) new degree-2 vertices, which realizes the census
// {m22: n-2*ell+1, m23: 2, m33: 3*ell-4}.
inline Graph extremal_graph(int n, int ell) {
  if (2 * (ell - 1) < 4) {
    throw std::domain_error("extremal_graph requires 2*(ell-1) >= 4, got ell=" +
                            std::to_string(ell));
  }
  if (n < 2 * (ell - 1)) {
    throw std::domain_error("extremal_graph requires n >= 2*(ell-1): " +
                            std::to_string(n) + " < " +
                            std::to_string(2 * (ell - 1)));
  }
  const Graph ladder = mobius_ladder(ell - 1);
  if (n == 2 * (ell - 1)) return ladder;
  std::vector<VertexPair> edges;
  for (const auto& e : ladder.edges()) {
    if (e != VertexPair{0, 1}) edges.push_back(e);
  }
  const int first_new = 2 * (ell - 1);
  edges.emplace_back(0, first_new);
  for (int v = first_new; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 1);
  return Graph(n, edges);
}

// The hypothetical Case 2.2 graph from Claim 1: c_star(ell) whose degree-2
// vertex w gains a pendant path through n - ell new vertices, so that w has
// degree 3 and the census is exactly
// {m12: 1, m23: 1, m34: 2, m44: 2*ell-3, m22: n-ell-2}.
inline Graph claim1_case22_graph(int n, int ell) {
  if (ell < 6) {
    throw std::domain_error("claim1_case22_graph requires ell >= 6, got " +
                            std::to_string(ell));
  }
  if (n < ell + 3) {
    throw std::domain_error("claim1_case22_graph requires n >= ell+3: " +
                            std::to_string(n) + " < " +
                            std::to_string(ell + 3));
  }
  const Graph core = c_star(ell);
  std::vector<VertexPair> edges = core.edges();
  for (int v = ell - 1; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

}  // namespace dso
