#pragma once

// Machine checks for the quantitative claims behind the DSO minimization
// results: the closed-form case deltas of the pendant-edge exclusion lemma,
// the degree-sum identities, h-positivity scans, and brute-force
// adjudication of the lower bound and its extremal characterization.
//
// Bound checks never assume the claimed bound is right: each instance gets
// a verdict relating the brute-force minimum to the two candidate values,
// so a discrepancy surfaces as data instead of a failed assertion.

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dso/enumerate.hpp"
#include "dso/families.hpp"
#include "dso/graph.hpp"
#include "dso/weights.hpp"

namespace dso {

inline constexpr double kVerdictTolerance = 1e-9;

enum class BoundVerdict {
  matches_paper_bound,
  matches_regular_bound,
  below_both,
  above_both,
};

inline std::string to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::matches_paper_bound: return "matches-paper-bound";
    case BoundVerdict::matches_regular_bound: return "matches-regular-bound";
    case BoundVerdict::below_both: return "below-both";
    case BoundVerdict::above_both: return "above-both";
  }
  return "unknown";
}

// Verdict rules, at tolerance kVerdictTolerance (regular < paper always):
//   |min - paper|   <= tol -> matches-paper-bound
//   |min - regular| <= tol -> matches-regular-bound
//   min < regular - tol    -> below-both
//   otherwise              -> above-both (strictly above the regular value;
//                             a min strictly between the bounds lands here
//                             and is called out in the notes)
inline BoundVerdict classify_minimum(double minimum, double paper,
                                     double regular) {
  if (std::abs(minimum - paper) <= kVerdictTolerance) {
    return BoundVerdict::matches_paper_bound;
  }
  if (std::abs(minimum - regular) <= kVerdictTolerance) {
    return BoundVerdict::matches_regular_bound;
  }
  if (minimum < regular - kVerdictTolerance) return BoundVerdict::below_both;
  return BoundVerdict::above_both;
}

struct VerificationReport {
  InstanceParams instance;
  std::uint64_t searched = 0;
  double brute_min = std::numeric_limits<double>::quiet_NaN();
  double paper_bound_value = 0.0;
  double regular_bound_value = 0.0;
  BoundVerdict verdict = BoundVerdict::above_both;
  bool extremal_signature_ok = false;
  std::vector<std::string> argmin_graphs;
  std::vector<std::string> discrepancy_notes;
};

// The census characterizing minimizers for n > 2(ell-1).
inline EdgeTypeCounts extremal_signature(int n, int ell) {
  EdgeTypeCounts sig;
  if (n - 2 * ell + 1 > 0) sig.counts[{2, 2}] = n - 2 * ell + 1;
  sig.counts[{2, 3}] = 2;
  sig.counts[{3, 3}] = 3ll * ell - 4;
  return sig;
}

namespace detail {

inline std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

// Two disjoint cycles joined by two edges closing a quadrangle: the shape
// previously conjectured to minimize DSO at ell = 3. Kept as a comparison
// point; it is never a minimizer.
inline Graph quadrangle_linked_cycles(int n) {
  const int a = n / 2;  // cycle sizes a and n-a, both >= 3 for n >= 6
  std::vector<VertexPair> edges;
  for (int i = 0; i < a; ++i) edges.emplace_back(i, (i + 1) % a);
  for (int i = 0; i < n - a; ++i) {
    edges.emplace_back(a + i, a + (i + 1) % (n - a));
  }
  edges.emplace_back(0, a);
  edges.emplace_back(1, a + 1);
  return Graph(n, edges);
}

}  // namespace detail

inline VerificationReport verify_theorem1(const InstanceParams& params,
                                          const EnumerationLimits& limits = {}) {
  require_bound_domain(params.n, params.ell, "verify_theorem1");
  const int n = params.n;
  const int ell = params.ell;
  const bool boundary = (n == 2 * (ell - 1));

  VerificationReport report;
  report.instance = params;
  report.paper_bound_value = paper_bound(n, ell);
  report.regular_bound_value = regular_bound(n, ell);

  const EdgeTypeCounts signature = extremal_signature(n, ell);
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, std::string>> near;
  std::set<std::string> signature_graphs;
  std::uint64_t regular_argmin = 0;
  std::uint64_t nonregular_argmin = 0;

  const bool feasible = for_each_connected_graph(
      params, limits, [&](const Graph& g) {
        ++report.searched;
        const double value = evaluate_index(g, dso_weight);
        if (value < best) {
          best = value;
          std::erase_if(near, [&](const auto& c) {
            return c.first > best + kArgminTolerance;
          });
        }
        if (value <= best + kArgminTolerance) {
          near.emplace_back(value, to_graph6(g));
        }
        if (!boundary && edge_type_counts(g) == signature) {
          signature_graphs.insert(to_graph6(g));
        }
      });

  if (!feasible || report.searched == 0) {
    report.discrepancy_notes.push_back("no graphs exist for this instance");
    return report;
  }

  report.brute_min = best;
  std::set<std::string> argmin;
  for (const auto& [value, g6] : near) {
    if (value <= best + kArgminTolerance) argmin.insert(g6);
  }
  report.argmin_graphs.assign(argmin.begin(), argmin.end());
  report.verdict =
      classify_minimum(best, report.paper_bound_value, report.regular_bound_value);

  for (const auto& g6 : argmin) {
    const Graph g = from_graph6(g6);
    const auto profile = degree_profile(g);
    if (profile.min_degree == 3 && profile.max_degree == 3) {
      ++regular_argmin;
    } else {
      ++nonregular_argmin;
    }
  }

  if (boundary) {
    report.extremal_signature_ok = (nonregular_argmin == 0);
    if (report.verdict == BoundVerdict::matches_regular_bound) {
      report.discrepancy_notes.push_back(
          "boundary case n = 2(ell-1): minimum equals (n+ell-1)/sqrt(2), "
          "below paper_bound by 2*sqrt(13)/5 - sqrt(2) = " +
          detail::format_value(report.paper_bound_value -
                               report.regular_bound_value) +
          "; the stated equality is not attained here");
    }
  } else {
    bool censuses_ok = true;
    for (const auto& g6 : argmin) {
      const Graph g = from_graph6(g6);
      const auto profile = degree_profile(g);
      if (profile.min_degree != 2 || profile.max_degree != 3 ||
          !(edge_type_counts(g) == signature)) {
        censuses_ok = false;
      }
    }
    report.extremal_signature_ok =
        censuses_ok && signature_graphs == argmin;
    if (signature_graphs != argmin) {
      report.discrepancy_notes.push_back(
          "argmin set and extremal-signature set differ (" +
          std::to_string(argmin.size()) + " vs " +
          std::to_string(signature_graphs.size()) + " graphs)");
    }
  }

  if (report.verdict == BoundVerdict::above_both) {
    report.discrepancy_notes.push_back(
        "minimum " + detail::format_value(best) +
        " lies above the regular value without matching paper_bound");
  }

  if (ell == 3 && n >= 6) {
    const Graph q = detail::quadrangle_linked_cycles(n);
    const double qv = evaluate_index(q, dso_weight);
    report.discrepancy_notes.push_back(
        "quadrangle-linked two-cycle comparison graph has DSO " +
        detail::format_value(qv) + ", exceeding the minimum by " +
        detail::format_value(qv - best));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Closed-form case deltas for the pendant-edge exclusion argument. Each case
// is a local surgery whose DSO change has a closed form in the incident
// degrees; the scan shows every admissible tuple gives a positive delta.

struct LemmaCaseResult {
  std::string case_id;
  std::vector<int> parameter_tuple;
  double delta = 0.0;
  bool positive = false;
};

namespace detail {

inline void require_range(std::string_view case_id, const char* what, int value,
                          int lo, int hi) {
  if (value < lo || value > hi) {
    throw std::domain_error("case " + std::string(case_id) + ": " + what +
                            " must be in [" + std::to_string(lo) + "," +
                            std::to_string(hi) + "], got " +
                            std::to_string(value));
  }
}

inline double lemma_delta(std::string_view case_id, std::span<const int> t) {
  const auto f = [](int i, int j) { return dso_weight(i, j); };
  if (case_id == "1") {
    // t = (dw, d1, ..., d_{s-1}) with s = dw in {3,4}; d1 is the largest
    // non-path neighbor degree and is at least 2; the (4,4) pair at dw = 3
    // belongs to Case 2.
    if (t.size() < 1) throw std::domain_error("case 1: empty tuple");
    const int dw = t[0];
    require_range(case_id, "d_w", dw, 3, 4);
    if (static_cast<int>(t.size()) != dw) {
      throw std::domain_error("case 1: expected " + std::to_string(dw) +
                              " entries (d_w plus " + std::to_string(dw - 1) +
                              " neighbor degrees)");
    }
    const int d1 = t[1];
    require_range(case_id, "d_1 (max non-path neighbor degree)", d1, 2, 4);
    for (std::size_t i = 2; i < t.size(); ++i) {
      require_range(case_id, "d_i", t[i], 1, d1);
    }
    if (dw == 3 && d1 == 4 && t[2] == 4) {
      throw std::domain_error(
          "case 1: (d_1,d_2) = (4,4) with d_w = 3 belongs to case 2");
    }
    double delta = 0.0;
    for (std::size_t i = 2; i < t.size(); ++i) {
      delta += f(dw, t[i]) - f(dw - 1, t[i]);
    }
    delta += f(dw, 2) - f(dw - 1, 2);
    delta += f(1, 2) - f(2, 2);
    delta += f(dw, d1) - f(2, d1);
    return delta;
  }
  if (case_id == "2.1") {
    // t = (d1', e1, e2): d1' the minimum degree over the chosen neighbor's
    // other neighbors (<= 3 by the case split), e1,e2 the remaining two.
    if (t.size() != 3) throw std::domain_error("case 2.1: expected 3 entries");
    require_range(case_id, "d_1'", t[0], 1, 3);
    require_range(case_id, "e_1", t[1], 1, 4);
    require_range(case_id, "e_2", t[2], 1, 4);
    double delta = (f(t[1], 4) - f(t[1], 3)) + (f(t[2], 4) - f(t[2], 3));
    delta += f(t[0], 4) - f(t[0], 2);
    delta += f(1, 2) - f(2, 2);
    delta += f(3, 4) - f(3, 3);
    return delta;
  }
  if (case_id == "2.2.1") {
    // t = (dp): degree of the pendant vertex's unique neighbor. Degree 1 is
    // impossible (it would leave the pendant edge as its own component).
    if (t.size() != 1) throw std::domain_error("case 2.2.1: expected 1 entry");
    require_range(case_id, "d(p_1) (>= 2 by connectivity)", t[0], 2, 4);
    return f(t[0], 1) - f(t[0], 2) + f(2, 3) + 2 * f(3, 4) - 2 * f(2, 2) -
           f(4, 4);
  }
  if (case_id == "2.2.2") {
    // t = (dq1, dq2): q's neighbor degrees with dq1 >= 3 and dq2 >= 2.
    if (t.size() != 2) throw std::domain_error("case 2.2.2: expected 2 entries");
    require_range(case_id, "d(q_1)", t[0], 3, 4);
    require_range(case_id, "d(q_2)", t[1], 2, 4);
    return (f(t[0], 2) - f(t[0], 3)) + (f(t[1], 2) - f(t[1], 3)) +
           2 * f(3, 4) - f(2, 2) - f(4, 4);
  }
  if (case_id == "2.2.3.1") {
    if (!t.empty()) throw std::domain_error("case 2.2.3.1 takes no parameters");
    return 5 * f(4, 3) - 4 * f(4, 4) + f(2, 3) - f(2, 4) - f(2, 2);
  }
  if (case_id == "2.2.3.2") {
    if (!t.empty()) throw std::domain_error("case 2.2.3.2 takes no parameters");
    return f(1, 2) + 2 * f(3, 4) + f(3, 3) - 2 * f(2, 2) - f(4, 4) - f(2, 3);
  }
  if (case_id == "claim1-diff") {
    // t = (ell): census difference between the all-degree-4 core shape and
    // the extremal shape at equal (n, ell); constant in ell.
    if (t.size() != 1) {
      throw std::domain_error("case claim1-diff: expected 1 entry (ell)");
    }
    if (t[0] < 6) {
      throw std::domain_error("case claim1-diff requires ell >= 6, got " +
                              std::to_string(t[0]));
    }
    const double ell = t[0];
    return (ell - 3) * f(2, 2) + (2 * ell - 3) * f(4, 4) + f(1, 2) - f(2, 3) +
           2 * f(3, 4) - (3 * ell - 4) * f(3, 3);
  }
  throw std::domain_error("unknown lemma case id '" + std::string(case_id) +
                          "'");
}

}  // namespace detail

inline LemmaCaseResult lemma_case_delta(std::string_view case_id,
                                        std::span<const int> tuple) {
  LemmaCaseResult r;
  r.case_id = std::string(case_id);
  r.parameter_tuple.assign(tuple.begin(), tuple.end());
  r.delta = detail::lemma_delta(case_id, tuple);
  r.positive = r.delta > 0.0;
  return r;
}

inline LemmaCaseResult lemma_case_delta(std::string_view case_id,
                                        std::initializer_list<int> tuple) {
  return lemma_case_delta(case_id,
                          std::span<const int>(tuple.begin(), tuple.size()));
}

// Every admissible tuple of every case, deterministically ordered. Neighbor
// degrees that enter symmetrically are enumerated as multisets.
inline std::vector<LemmaCaseResult> scan_lemma_cases() {
  std::vector<LemmaCaseResult> results;
  for (int d1 = 2; d1 <= 4; ++d1) {
    for (int d2 = 1; d2 <= d1; ++d2) {
      if (d1 == 4 && d2 == 4) continue;  // case 2
      results.push_back(lemma_case_delta("1", {3, d1, d2}));
    }
  }
  for (int d1 = 2; d1 <= 4; ++d1) {
    for (int d2 = 1; d2 <= d1; ++d2) {
      for (int d3 = d2; d3 <= d1; ++d3) {
        results.push_back(lemma_case_delta("1", {4, d1, d2, d3}));
      }
    }
  }
  for (int d1p = 1; d1p <= 3; ++d1p) {
    for (int e1 = 1; e1 <= 4; ++e1) {
      for (int e2 = e1; e2 <= 4; ++e2) {
        results.push_back(lemma_case_delta("2.1", {d1p, e1, e2}));
      }
    }
  }
  for (int dp = 2; dp <= 4; ++dp) {
    results.push_back(lemma_case_delta("2.2.1", {dp}));
  }
  for (int dq1 = 3; dq1 <= 4; ++dq1) {
    for (int dq2 = 2; dq2 <= 4; ++dq2) {
      results.push_back(lemma_case_delta("2.2.2", {dq1, dq2}));
    }
  }
  results.push_back(lemma_case_delta("2.2.3.1", {}));
  results.push_back(lemma_case_delta("2.2.3.2", {}));
  for (int ell = 6; ell <= 50; ++ell) {
    results.push_back(lemma_case_delta("claim1-diff", {ell}));
  }
  return results;
}

// ---------------------------------------------------------------------------

struct HScanReport {
  int limit = 0;
  long long pairs_checked = 0;
  double min_value = std::numeric_limits<double>::infinity();
  std::pair<int, int> min_at{0, 0};
  bool all_positive = true;
  std::vector<std::pair<int, int>> counterexamples;
};

// h(i,j) > 0 for every 1 <= i <= j <= limit outside the excluded pairs
// {(1,1),(1,2),(2,2),(2,3),(3,3)} (on which h is zero or negative).
inline HScanReport scan_h_positivity(int limit) {
  if (limit < 4) {
    throw std::domain_error("scan_h_positivity requires limit >= 4, got " +
                            std::to_string(limit));
  }
  HScanReport report;
  report.limit = limit;
  for (int i = 1; i <= limit; ++i) {
    for (int j = i; j <= limit; ++j) {
      if (!in_index_set_a_star_star(i, j)) continue;
      ++report.pairs_checked;
      const double value = h_weight(i, j);
      if (value < report.min_value) {
        report.min_value = value;
        report.min_at = {i, j};
      }
      if (value <= 0.0) {
        report.all_positive = false;
        report.counterexamples.emplace_back(i, j);
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

// Exact (rational) degree-sum identity checks for a connected graph without
// isolated vertices:
//   sum over all types of (1/i + 1/j) m[i,j] = n
//   sum over all types of m[i,j]             = n + ell - 1
// When the graph has no (1,1)/(1,2) edges these are equivalent to the
// A*-restricted forms, which are then checked literally together with the
// solved expressions for m23 and m33.
inline bool verify_identities(const Graph& g) {
  const auto profile = degree_profile(g);
  if (!is_connected(g) || profile.min_degree < 1) {
    throw std::domain_error(
        "verify_identities requires a connected graph without isolated "
        "vertices");
  }
  const auto census = edge_type_counts(g);
  const int n = g.order();
  const int ell = cyclomatic_number(g);

  Rational weighted_sum(0);
  long long total = 0;
  for (const auto& [type, m] : census.counts) {
    weighted_sum += degree_sum_coefficient(type.first, type.second) * Rational(m);
    total += m;
  }
  if (weighted_sum != Rational(n)) return false;
  if (total != n + ell - 1) return false;

  if (census.at(1, 1) != 0 || census.at(1, 2) != 0) return true;

  // Restricted forms. The sums run over A**, which coincides with A* on
  // molecular graphs and extends the identity verbatim beyond degree 4.
  const long long m22 = census.at(2, 2);
  const long long m23 = census.at(2, 3);
  const long long m33 = census.at(3, 3);
  Rational residual_weighted(0);
  long long residual_total = 0;
  for (const auto& [type, m] : census.counts) {
    if (!in_index_set_a_star_star(type.first, type.second)) continue;
    residual_weighted +=
        degree_sum_coefficient(type.first, type.second) * Rational(m);
    residual_total += m;
  }
  const Rational rhs02 = Rational(n) - Rational(m22) -
                         Rational(5, 6) * Rational(m23) -
                         Rational(2, 3) * Rational(m33);
  if (residual_weighted != rhs02) return false;
  if (residual_total != n + ell - m22 - m23 - m33 - 1) return false;
  if (profile.max_degree <= 4) {
    // molecular case: the solved forms must reproduce the census exactly
    if (solved_m23(n, ell, m22, census) != Rational(m23)) return false;
    if (solved_m33(n, ell, m22, census) != Rational(m33)) return false;
  }
  return true;
}

}  // namespace dso
