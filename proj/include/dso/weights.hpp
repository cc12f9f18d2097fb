#pragma once

// Bond-incident-degree weights and index evaluation. Index values live in
// doubles; the combinatorial identities they rest on are checked in exact
// rational arithmetic (see solved_m23 / solved_m33 and verify.hpp).

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "dso/graph.hpp"

namespace dso {

using Rational = boost::rational<long long>;

inline const double kSqrt2 = std::sqrt(2.0);
inline const double kSqrt13 = std::sqrt(13.0);

namespace detail {

inline void require_degrees(int i, int j, const char* where) {
  if (i < 1 || j < 1) {
    throw std::domain_error(std::string(where) +
                            " requires positive degrees, got (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

// Compensated (Neumaier) summation; index sums stay within an ulp or two.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

// sqrt(i^2+j^2)/(i+j), in [1/sqrt(2), 1); equals 1/sqrt(2) iff i = j.
inline double dso_weight(int i, int j) {
  detail::require_degrees(i, j, "dso_weight");
  const double x = static_cast<double>(i);
  const double y = static_cast<double>(j);
  return std::sqrt(x * x + y * y) / (x + y);
}

inline double sombor_weight(int i, int j) {
  detail::require_degrees(i, j, "sombor_weight");
  const double x = static_cast<double>(i);
  const double y = static_cast<double>(j);
  return std::sqrt(x * x + y * y);
}

// h(i,j) = (3*sqrt(2) - 6*sqrt(13)/5)(1/i + 1/j) + dso_weight(i,j)
//          + 4*sqrt(13)/5 - 5/sqrt(2)
// The residual weight left over once the (2,2)/(2,3)/(3,3) terms of the DSO
// edge sum are rewritten through the degree-sum identities; positive on A*.
inline double h_weight(int i, int j) {
  detail::require_degrees(i, j, "h_weight");
  const double slope = 3.0 * kSqrt2 - 6.0 * kSqrt13 / 5.0;
  const double offset = 4.0 * kSqrt13 / 5.0 - 5.0 / kSqrt2;
  return slope * (1.0 / i + 1.0 / j) + dso_weight(i, j) + offset;
}

// Edge-sum form: sum over edges uv of w(d(u), d(v)).
template <class Weight>
double evaluate_index(const Graph& g, Weight&& w) {
  detail::KahanSum sum;
  for (const auto& [u, v] : g.edges()) {
    sum.add(w(g.degree(u), g.degree(v)));
  }
  return sum.value();
}

// Census form: sum over types of m[i,j] * w(i,j). Must agree with the
// edge-sum form to within float noise; tests hold the two to 1e-12 relative.
template <class Weight>
double evaluate_index(const EdgeTypeCounts& counts, Weight&& w) {
  detail::KahanSum sum;
  for (const auto& [type, m] : counts.counts) {
    sum.add(static_cast<double>(m) * w(type.first, type.second));
  }
  return sum.value();
}

using EdgeWeightFn = double (*)(int, int);

// Shipped weights; new Sombor variants can be added here.
inline const std::map<std::string, EdgeWeightFn>& weight_registry() {
  static const std::map<std::string, EdgeWeightFn> registry = {
      {"dso", &dso_weight},
      {"sombor", &sombor_weight},
      {"h", &h_weight},
  };
  return registry;
}

inline EdgeWeightFn weight_by_name(std::string_view name) {
  const auto& reg = weight_registry();
  auto it = reg.find(std::string(name));
  if (it == reg.end()) {
    throw std::domain_error("unknown index weight '" + std::string(name) +
                            "' (known: dso, sombor, h)");
  }
  return it->second;
}

inline void require_bound_domain(int n, int ell, const char* where) {
  if (2 * (ell - 1) < 4) {
    throw std::domain_error(std::string(where) +
                            " requires 2*(ell-1) >= 4, violated by ell=" +
                            std::to_string(ell));
  }
  if (n < 2 * (ell - 1)) {
    throw std::domain_error(std::string(where) + " requires n >= 2*(ell-1): " +
                            std::to_string(n) + " < " +
                            std::to_string(2 * (ell - 1)));
  }
}

// (n + ell - 3)/sqrt(2) + 2*sqrt(13)/5: the claimed DSO minimum over
// molecular n-vertex graphs with cyclomatic number ell, attained by the
// extremal census when n > 2(ell-1).
inline double paper_bound(int n, int ell) {
  require_bound_domain(n, ell, "paper_bound");
  return (n + ell - 3) / kSqrt2 + 2.0 * kSqrt13 / 5.0;
}

// (n + ell - 1)/sqrt(2): the DSO value of any graph whose edges all join
// equal-degree endpoints (in particular every regular graph) at this size.
inline double regular_bound(int n, int ell) {
  return (n + ell - 1) / kSqrt2;
}

inline Rational degree_sum_coefficient(int i, int j) {
  detail::require_degrees(i, j, "degree_sum_coefficient");
  return Rational(1, i) + Rational(1, j);
}

// m23 solved from the two degree-sum identities, assuming m11 = m12 = 0:
//   m23 = 2(n - 2*ell - m22 + 2) + sum_{A*} (4 - 6(1/i + 1/j)) m[i,j]
// Entries of `residual` outside A* are ignored.
inline Rational solved_m23(int n, int ell, long long m22,
                           const EdgeTypeCounts& residual) {
  Rational acc = Rational(2) * Rational(n - 2ll * ell - m22 + 2);
  for (const auto& [type, m] : residual.counts) {
    const auto [i, j] = type;
    if (!in_index_set_a_star(i, j)) continue;
    acc += (Rational(4) - Rational(6) * degree_sum_coefficient(i, j)) *
           Rational(m);
  }
  return acc;
}

//   m33 = 5(ell - 1) + m22 - n + sum_{A*} (6(1/i + 1/j) - 5) m[i,j]
inline Rational solved_m33(int n, int ell, long long m22,
                           const EdgeTypeCounts& residual) {
  Rational acc = Rational(5ll * (ell - 1) + m22 - n);
  for (const auto& [type, m] : residual.counts) {
    const auto [i, j] = type;
    if (!in_index_set_a_star(i, j)) continue;
    acc += (Rational(6) * degree_sum_coefficient(i, j) - Rational(5)) *
           Rational(m);
  }
  return acc;
}

}  // namespace dso
