#pragma once

// Exhaustive isomorphism-free generation of connected simple graphs with
// fixed order n, cyclomatic number ell (so exactly n+ell-1 edges) and an
// optional maximum-degree cap. Graphs are grown one edge at a time;
// duplicates are rejected level by level via canonical forms, and branches
// are pruned when the degree cap is exceeded or the remaining edge budget
// cannot merge the remaining components. Intermediate graphs may be
// disconnected; the component budget forces connectivity at full size.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "dso/canonical.hpp"
#include "dso/graph.hpp"
#include "dso/graph6.hpp"

namespace dso {

inline constexpr double kArgminTolerance = 1e-9;

struct InstanceParams {
  int n = 0;
  int ell = 0;
  std::optional<int> max_degree = 4;  // nullopt: unbounded

  int edge_budget() const { return n + ell - 1; }

  void validate() const {
    if (n < 1) throw std::domain_error("instance requires n >= 1");
    if (ell < 0) throw std::domain_error("instance requires ell >= 0");
    if (max_degree && *max_degree < 1) {
      throw std::domain_error("instance requires max_degree >= 1");
    }
  }
};

struct EnumerationLimits {
  int max_n_capped = 11;
  int max_n_unbounded = 10;
};

struct EnumerationResult {
  InstanceParams params;
  bool infeasible = false;
  std::uint64_t count = 0;
  std::vector<std::string> graphs_g6;  // canonical labelings, sorted
};

namespace detail {

struct LevelGraph {
  std::array<std::uint32_t, kMaxCanonicalOrder> rows{};
};

inline int rows_component_count(int n, const std::uint32_t* rows) {
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  std::uint32_t seen = 0;
  int components = 0;
  while (seen != all) {
    std::uint32_t frontier = 1u << std::countr_zero(~seen & all);
    std::uint32_t component = 0;
    while (frontier != 0) {
      component |= frontier;
      std::uint32_t next = 0;
      for (std::uint32_t rest = frontier; rest != 0; rest &= rest - 1) {
        next |= rows[std::countr_zero(rest)];
      }
      frontier = next & ~component;
    }
    seen |= component;
    ++components;
  }
  return components;
}

inline LevelGraph relabel_rows(int n, const std::uint32_t* rows,
                               const std::array<std::uint8_t, kMaxCanonicalOrder>& order) {
  std::array<int, kMaxCanonicalOrder> position{};
  for (int pos = 0; pos < n; ++pos) position[order[pos]] = pos;
  LevelGraph out;
  for (int pos = 0; pos < n; ++pos) {
    std::uint32_t mask = 0;
    for (std::uint32_t rest = rows[order[pos]]; rest != 0; rest &= rest - 1) {
      mask |= 1u << position[std::countr_zero(rest)];
    }
    out.rows[pos] = mask;
  }
  return out;
}

// Row-major upper-triangle bits, bit (a,b) at position 127 - k matching the
// canonical form's byte layout.
inline std::pair<std::uint64_t, std::uint64_t> triangle_bits(
    int n, const std::uint32_t* rows) {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  int k = 0;
  for (int a = 0; a + 1 < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++k) {
      if ((rows[a] >> b) & 1u) {
        if (k < 64) {
          hi |= 1ull << (63 - k);
        } else {
          lo |= 1ull << (127 - k);
        }
      }
    }
  }
  return {hi, lo};
}

inline Graph rows_to_graph(int n, const std::uint32_t* rows) {
  std::vector<VertexPair> edges;
  for (int u = 0; u < n; ++u) {
    for (std::uint32_t rest = rows[u] >> (u + 1); rest != 0; rest &= rest - 1) {
      edges.emplace_back(u, u + 1 + std::countr_zero(rest));
    }
  }
  return Graph(n, edges);
}

}  // namespace detail

// Streams every isomorphism class once, as its canonically labeled Graph,
// in canonical-form order. Returns false when the edge budget is infeasible
// for the degree cap (no graphs exist; nothing is visited).
template <class Visit>
bool for_each_connected_graph(const InstanceParams& params,
                              const EnumerationLimits& limits, Visit&& visit) {
  params.validate();
  const int limit = std::min(
      params.max_degree ? limits.max_n_capped : limits.max_n_unbounded,
      kMaxCanonicalOrder);
  if (params.n > limit) {
    throw std::domain_error(
        "enumeration refused: n = " + std::to_string(params.n) +
        " exceeds the configured desk-scale limit " + std::to_string(limit) +
        (params.max_degree ? "" : " (unbounded degree)"));
  }
  const int n = params.n;
  const int cap =
      params.max_degree ? std::min(*params.max_degree, n - 1) : n - 1;
  const int m = params.edge_budget();
  if (2ll * m > 1ll * n * cap) return false;  // infeasible edge budget

  std::vector<detail::LevelGraph> level(1);
  for (int k = 0; k < m; ++k) {
    std::unordered_set<detail::CanonKey, detail::CanonKeyHash> seen;
    std::vector<detail::LevelGraph> next;
    const int remaining_after = m - (k + 1);
    for (const auto& lg : level) {
      std::array<int, kMaxCanonicalOrder> deg{};
      for (int v = 0; v < n; ++v) deg[v] = std::popcount(lg.rows[v]);
      for (int u = 0; u + 1 < n; ++u) {
        if (deg[u] >= cap) continue;
        for (int v = u + 1; v < n; ++v) {
          if (deg[v] >= cap) continue;
          if ((lg.rows[u] >> v) & 1u) continue;
          auto rows2 = lg.rows;
          rows2[u] |= 1u << v;
          rows2[v] |= 1u << u;
          if (detail::rows_component_count(n, rows2.data()) - 1 >
              remaining_after) {
            continue;
          }
          const auto canon = detail::canonicalize_rows(n, rows2.data());
          if (seen.insert(canon.key).second) {
            next.push_back(detail::relabel_rows(n, rows2.data(), canon.full_order));
          }
        }
      }
    }
    level = std::move(next);
    if (level.empty()) return true;
  }
  // Stored rows are already canonically labeled, so their row-major triangle
  // bitstrings are the canonical forms; sorting by them fixes the output
  // order. All survivors are connected by construction of the prune.
  std::sort(level.begin(), level.end(),
            [n](const detail::LevelGraph& a, const detail::LevelGraph& b) {
              return detail::triangle_bits(n, a.rows.data()) <
                     detail::triangle_bits(n, b.rows.data());
            });
  for (const auto& lg : level) {
    visit(detail::rows_to_graph(n, lg.rows.data()));
  }
  return true;
}

inline EnumerationResult enumerate(const InstanceParams& params,
                                   const EnumerationLimits& limits = {}) {
  EnumerationResult result;
  result.params = params;
  const bool feasible =
      for_each_connected_graph(params, limits, [&](const Graph& g) {
        ++result.count;
        result.graphs_g6.push_back(to_graph6(g));
      });
  result.infeasible = !feasible;
  return result;
}

struct MinimizeResult {
  InstanceParams params;
  bool infeasible = false;
  std::uint64_t searched = 0;  // isomorphism classes examined
  double minimum = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> argmin_g6;  // all graphs within kArgminTolerance
};

template <class Weight>
MinimizeResult minimize_index(const InstanceParams& params, Weight&& weight,
                              const EnumerationLimits& limits = {}) {
  MinimizeResult result;
  result.params = params;
  std::vector<std::pair<double, std::string>> near;
  double best = std::numeric_limits<double>::infinity();
  const bool feasible =
      for_each_connected_graph(params, limits, [&](const Graph& g) {
        ++result.searched;
        const double value = evaluate_index(g, weight);
        if (value < best) {
          best = value;
          std::erase_if(near, [&](const auto& c) {
            return c.first > best + kArgminTolerance;
          });
        }
        if (value <= best + kArgminTolerance) {
          near.emplace_back(value, to_graph6(g));
        }
      });
  result.infeasible = !feasible;
  if (!near.empty()) {
    result.minimum = best;
    for (auto& [value, g6] : near) {
      if (value <= best + kArgminTolerance) {
        result.argmin_g6.push_back(std::move(g6));
      }
    }
  }
  return result;
}

}  // namespace dso
