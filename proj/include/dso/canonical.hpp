#pragma once

// Canonical labeling for small graphs: equitable degree refinement followed
// by individualization within the first non-singleton cell (skipping twin
// vertices, whose transposition is an automorphism), taking the labeling
// with the lexicographically smallest adjacency bitstring. Isolated vertices
// carry no structure and are split off before the search.

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "dso/graph.hpp"
#include "dso/graph6.hpp"

namespace dso {

inline constexpr int kMaxCanonicalOrder = 16;
inline constexpr int kDefaultCanonicalLimit = 16;

struct CanonicalForm {
  std::string bytes;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

namespace detail {

// Packed dedup key: triangle bits of the canonical non-isolated subgraph
// plus its vertex count in the (always zero) low byte of the second word.
struct CanonKey {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool operator==(const CanonKey&) const = default;
};

struct CanonKeyHash {
  std::size_t operator()(const CanonKey& k) const {
    std::uint64_t x = k.a * 0x9e3779b97f4a7c15ull;
    x ^= (x >> 32) ^ (k.b * 0xc2b2ae3d27d4eb4full);
    x ^= x >> 29;
    return static_cast<std::size_t>(x);
  }
};

struct CanonOutcome {
  CanonKey key;
  int nonisolated = 0;
  // full_order[pos] = vertex occupying canonical position pos; non-isolated
  // vertices first (canonical order), then isolated vertices ascending.
  std::array<std::uint8_t, kMaxCanonicalOrder> full_order{};
};

class CanonicalSearcher {
 public:
  CanonicalSearcher(int n, const std::uint32_t* rows) : n_(n) {
    for (int v = 0; v < n; ++v) adj_[v] = rows[v];
  }

  void run() {
    if (n_ == 0) return;
    Partition p;
    p.cells[0] = full_mask();
    p.count = 1;
    refine(p);
    descend(p);
  }

  std::uint64_t best_hi() const { return best_hi_; }
  std::uint64_t best_lo() const { return best_lo_; }
  const std::array<std::uint8_t, kMaxCanonicalOrder>& best_order() const {
    return best_order_;
  }

 private:
  struct Partition {
    std::array<std::uint32_t, kMaxCanonicalOrder> cells{};
    int count = 0;
  };

  std::uint32_t full_mask() const {
    return n_ == 32 ? ~0u : ((1u << n_) - 1);
  }

  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int di = 0; di < p.count && !changed; ++di) {
        const std::uint32_t splitter = p.cells[di];
        for (int ci = 0; ci < p.count; ++ci) {
          const std::uint32_t cell = p.cells[ci];
          if (std::popcount(cell) <= 1) continue;
          std::array<std::uint32_t, kMaxCanonicalOrder + 1> buckets{};
          for (std::uint32_t rest = cell; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            buckets[std::popcount(adj_[v] & splitter)] |= 1u << v;
          }
          int groups = 0;
          for (const std::uint32_t b : buckets) groups += (b != 0);
          if (groups <= 1) continue;
          // Replace the cell by its sub-cells, ascending neighbor count.
          for (int k = p.count - 1; k > ci; --k) {
            p.cells[k + groups - 1] = p.cells[k];
          }
          int at = ci;
          for (const std::uint32_t b : buckets) {
            if (b != 0) p.cells[at++] = b;
          }
          p.count += groups - 1;
          changed = true;
          break;
        }
      }
    }
  }

  void descend(const Partition& p) {
    int target = -1;
    for (int i = 0; i < p.count; ++i) {
      if (std::popcount(p.cells[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target < 0) {
      score_leaf(p);
      return;
    }
    const std::uint32_t cell = p.cells[target];
    std::uint32_t reps = 0;
    for (std::uint32_t rest = cell; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      bool twin = false;
      for (std::uint32_t rr = reps; rr != 0; rr &= rr - 1) {
        const int u = std::countr_zero(rr);
        const std::uint32_t m = ~((1u << u) | (1u << v));
        if ((adj_[u] & m) == (adj_[v] & m)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      reps |= 1u << v;
      Partition q = p;
      for (int k = q.count - 1; k > target; --k) q.cells[k + 1] = q.cells[k];
      q.cells[target] = 1u << v;
      q.cells[target + 1] = cell & ~(1u << v);
      ++q.count;
      refine(q);
      descend(q);
    }
  }

  void score_leaf(const Partition& p) {
    std::array<std::uint8_t, kMaxCanonicalOrder> order{};
    for (int i = 0; i < p.count; ++i) {
      order[i] = static_cast<std::uint8_t>(std::countr_zero(p.cells[i]));
    }
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
    int k = 0;
    for (int a = 0; a + 1 < n_; ++a) {
      const std::uint32_t row = adj_[order[a]];
      for (int b = a + 1; b < n_; ++b, ++k) {
        if ((row >> order[b]) & 1u) {
          if (k < 64) {
            hi |= 1ull << (63 - k);
          } else {
            lo |= 1ull << (127 - k);
          }
        }
      }
    }
    if (!have_best_ || hi < best_hi_ ||
        (hi == best_hi_ && lo < best_lo_)) {
      have_best_ = true;
      best_hi_ = hi;
      best_lo_ = lo;
      best_order_ = order;
    }
  }

  int n_;
  std::array<std::uint32_t, kMaxCanonicalOrder> adj_{};
  bool have_best_ = false;
  std::uint64_t best_hi_ = 0;
  std::uint64_t best_lo_ = 0;
  std::array<std::uint8_t, kMaxCanonicalOrder> best_order_{};
};

// rows[v] holds the adjacency mask of v over all n vertices, n <= 16.
inline CanonOutcome canonicalize_rows(int n, const std::uint32_t* rows) {
  std::array<std::uint8_t, kMaxCanonicalOrder> active{};
  std::array<std::uint32_t, kMaxCanonicalOrder> sub{};
  std::array<int, kMaxCanonicalOrder> remap{};
  int nn = 0;
  for (int v = 0; v < n; ++v) {
    if (rows[v] != 0) {
      remap[v] = nn;
      active[nn++] = static_cast<std::uint8_t>(v);
    }
  }
  for (int i = 0; i < nn; ++i) {
    std::uint32_t m = 0;
    for (std::uint32_t rest = rows[active[i]]; rest != 0; rest &= rest - 1) {
      m |= 1u << remap[std::countr_zero(rest)];
    }
    sub[i] = m;
  }
  CanonicalSearcher searcher(nn, sub.data());
  searcher.run();
  CanonOutcome out;
  out.nonisolated = nn;
  out.key.a = searcher.best_hi();
  out.key.b = searcher.best_lo() | static_cast<std::uint64_t>(nn);
  int pos = 0;
  for (int i = 0; i < nn; ++i) {
    out.full_order[pos++] = active[searcher.best_order()[i]];
  }
  for (int v = 0; v < n; ++v) {
    if (rows[v] == 0) out.full_order[pos++] = static_cast<std::uint8_t>(v);
  }
  return out;
}

inline void check_canonical_limit(const Graph& g, int limit) {
  if (limit < 1 || limit > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonicalization limit must be in [1, " +
                                std::to_string(kMaxCanonicalOrder) + "]");
  }
  if (g.order() > limit) {
    throw std::domain_error("canonicalization limit exceeded: order " +
                            std::to_string(g.order()) + " > limit " +
                            std::to_string(limit));
  }
}

inline CanonOutcome canonicalize_graph(const Graph& g, int limit) {
  check_canonical_limit(g, limit);
  std::array<std::uint32_t, kMaxCanonicalOrder> rows{};
  for (int v = 0; v < g.order(); ++v) {
    rows[v] = static_cast<std::uint32_t>(g.adjacency_mask(v));
  }
  return canonicalize_rows(g.order(), rows.data());
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g,
                                    int limit = kDefaultCanonicalLimit) {
  const auto out = detail::canonicalize_graph(g, limit);
  const int nn = out.nonisolated;
  const int tri_bits = nn * (nn - 1) / 2;
  std::string bytes;
  bytes.push_back(static_cast<char>(g.order()));
  bytes.push_back(static_cast<char>(g.order() - nn));
  const std::uint64_t lo = out.key.b & ~0xffull;
  for (int base = 0; base < tri_bits; base += 8) {
    unsigned byte = 0;
    for (int o = 0; o < 8 && base + o < tri_bits; ++o) {
      const int k = base + o;
      const int bit = k < 64 ? static_cast<int>((out.key.a >> (63 - k)) & 1)
                             : static_cast<int>((lo >> (127 - k)) & 1);
      byte |= static_cast<unsigned>(bit) << (7 - o);
    }
    bytes.push_back(static_cast<char>(byte));
  }
  return CanonicalForm{std::move(bytes)};
}

// order[new_label] = old_vertex; isolated vertices placed last.
inline std::vector<int> canonical_labeling(const Graph& g,
                                           int limit = kDefaultCanonicalLimit) {
  const auto out = detail::canonicalize_graph(g, limit);
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) order[i] = out.full_order[i];
  return order;
}

// Rebuild g with vertex order[pos] renamed to pos.
inline Graph apply_labeling(const Graph& g, std::span<const int> order) {
  if (static_cast<int>(order.size()) != g.order()) {
    throw std::invalid_argument("labeling size does not match graph order");
  }
  std::vector<int> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  }
  std::vector<VertexPair> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(position[static_cast<std::size_t>(u)],
                       position[static_cast<std::size_t>(v)]);
  }
  return Graph(g.order(), edges);
}

inline std::string canonical_graph6(const Graph& g,
                                    int limit = kDefaultCanonicalLimit) {
  const auto order = canonical_labeling(g, limit);
  return to_graph6(apply_labeling(g, order));
}

}  // namespace dso
