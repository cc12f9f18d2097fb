#pragma once

// Immutable simple undirected graphs on vertices 0..n-1, plus the degree
// and edge-type queries everything else in this library is built from.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dso {

using VertexPair = std::pair<int, int>;

class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  explicit Graph(int order) : Graph(order, std::span<const VertexPair>{}) {}

  Graph(int order, std::span<const VertexPair> edges) {
    if (order < 1 || order > kMaxOrder) {
      throw std::invalid_argument("graph order must be in [1, " +
                                  std::to_string(kMaxOrder) + "], got " +
                                  std::to_string(order));
    }
    order_ = order;
    adj_.assign(static_cast<std::size_t>(order), 0);
    edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) add_edge_checked(u, v);
    std::sort(edges_.begin(), edges_.end());
  }

  Graph(int order, std::initializer_list<VertexPair> edges)
      : Graph(order, std::span<const VertexPair>(edges.begin(), edges.size())) {}

  int order() const { return order_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Normalized (min,max) pairs in lexicographic order.
  const std::vector<VertexPair>& edges() const { return edges_; }

  std::uint64_t adjacency_mask(int v) const { return adj_[checked(v)]; }
  int degree(int v) const { return std::popcount(adj_[checked(v)]); }

  bool has_edge(int u, int v) const {
    return u != v && ((adj_[checked(u)] >> checked(v)) & 1u) != 0;
  }

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t checked(int v) const {
    if (v < 0 || v >= order_) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range for order " +
                                  std::to_string(order_));
    }
    return static_cast<std::size_t>(v);
  }

  void add_edge_checked(int u, int v) {
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u) +
                                  " rejected (simple graphs only)");
    }
    checked(u);
    checked(v);
    if (has_edge(u, v)) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                  std::to_string(v) +
                                  "} rejected (simple graphs only)");
    }
    adj_[static_cast<std::size_t>(u)] |= 1ull << v;
    adj_[static_cast<std::size_t>(v)] |= 1ull << u;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  int order_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::uint64_t> adj_;
};

struct DegreeProfile {
  std::vector<int> degrees;
  int max_degree = 0;
  int min_degree = 0;
  std::map<int, int> degree_counts;  // degree -> number of vertices

  int count(int degree) const {
    auto it = degree_counts.find(degree);
    return it == degree_counts.end() ? 0 : it->second;
  }
  bool is_pendant(int v) const { return degrees.at(v) == 1; }
  bool is_branching(int v) const { return degrees.at(v) >= 3; }
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    p.degrees.push_back(d);
    ++p.degree_counts[d];
  }
  p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
  return p;
}

// Number of connected components, counting isolated vertices.
inline int component_count(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
  std::uint64_t seen = 0;
  int components = 0;
  while (seen != all) {
    int start = std::countr_zero(~seen & all);
    std::uint64_t frontier = 1ull << start;
    std::uint64_t component = 0;
    while (frontier != 0) {
      component |= frontier;
      std::uint64_t next = 0;
      for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
        next |= g.adjacency_mask(std::countr_zero(rest));
      }
      frontier = next & ~component;
    }
    seen |= component;
    ++components;
  }
  return components;
}

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

// |E| - n + #components; for connected graphs this is |E| - n + 1.
inline int cyclomatic_number(const Graph& g) {
  return g.edge_count() - g.order() + component_count(g);
}

// The census m[i,j]: number of edges whose endpoint degrees, sorted, are (i,j).
struct EdgeTypeCounts {
  std::map<std::pair<int, int>, long long> counts;

  long long at(int i, int j) const {
    auto it = counts.find(std::minmax(i, j));
    return it == counts.end() ? 0 : it->second;
  }
  long long total() const {
    long long t = 0;
    for (const auto& [type, m] : counts) t += m;
    return t;
  }
  bool operator==(const EdgeTypeCounts&) const = default;
};

inline EdgeTypeCounts edge_type_counts(const Graph& g) {
  EdgeTypeCounts c;
  for (const auto& [u, v] : g.edges()) {
    ++c.counts[std::minmax(g.degree(u), g.degree(v))];
  }
  return c;
}

// Degree-pair index sets from the Theorem 1 bookkeeping:
//   A   = {(i,j) : 1 <= i <= j <= 4} \ {(1,1),(1,2)}
//   A*  = A \ {(2,2),(2,3),(3,3)}
//   A** = A* with the upper cap j <= 4 removed.
inline bool in_index_set_a(int i, int j) {
  auto [lo, hi] = std::minmax(i, j);
  if (lo < 1 || hi > 4) return false;
  return !(lo == 1 && hi <= 2);
}

inline bool in_index_set_a_star(int i, int j) {
  auto [lo, hi] = std::minmax(i, j);
  if (!in_index_set_a(lo, hi)) return false;
  return !(lo == 2 && (hi == 2 || hi == 3)) && !(lo == 3 && hi == 3);
}

inline bool in_index_set_a_star_star(int i, int j) {
  auto [lo, hi] = std::minmax(i, j);
  if (lo < 1) return false;
  if (lo == 1 && hi <= 2) return false;
  if (lo == 2 && (hi == 2 || hi == 3)) return false;
  if (lo == 3 && hi == 3) return false;
  return true;
}

}  // namespace dso
