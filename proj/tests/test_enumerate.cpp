#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dso/canonical.hpp"
#include "dso/enumerate.hpp"
#include "dso/weights.hpp"
#include "naive_oracle.hpp"
#include "test_util.hpp"

using Catch::Matchers::WithinAbs;
using dso::enumerate;
using dso::EnumerationLimits;
using dso::Graph;
using dso::InstanceParams;

namespace {
InstanceParams capped(int n, int ell, int cap = 4) { return {n, ell, cap}; }
InstanceParams unbounded(int n, int ell) { return {n, ell, std::nullopt}; }
}  // namespace

TEST_CASE("enumeration counts match the frozen reference values") {
  // counts pinned by an independent generator (labeled filtering plus
  // all-permutations deduplication) before this module was written
  const std::vector<std::tuple<int, int, std::uint64_t>> capped_counts = {
      {3, 1, 1},  {4, 2, 1},  {4, 3, 1},  {5, 2, 5},   {5, 3, 4},
      {6, 1, 12}, {6, 2, 17}, {6, 3, 18}, {6, 4, 14},  {7, 0, 9},
      {7, 1, 29}, {7, 2, 56}, {7, 3, 79}, {8, 3, 326}, {8, 4, 430},
      {8, 5, 427},
  };
  for (const auto& [n, ell, expected] : capped_counts) {
    CAPTURE(n, ell);
    CHECK(enumerate(capped(n, ell)).count == expected);
  }
  CHECK(enumerate(unbounded(5, 3)).count == 4);
  CHECK(enumerate(unbounded(6, 3)).count == 22);
  CHECK(enumerate(unbounded(7, 3)).count == 107);
  CHECK(enumerate(unbounded(8, 3)).count == 486);
}

TEST_CASE("enumeration counts match the naive oracle live") {
  for (const auto& [n, ell] : std::vector<std::pair<int, int>>{
           {4, 1}, {4, 3}, {5, 2}, {5, 3}, {6, 0}, {6, 2}, {6, 3}, {6, 4}}) {
    CAPTURE(n, ell);
    CHECK(enumerate(capped(n, ell)).count == naive::count_classes(n, ell, 4));
  }
  CHECK(enumerate(unbounded(6, 3)).count == naive::count_classes(6, 3, 0));
}

TEST_CASE("single-class instances") {
  const auto k4 = enumerate(capped(4, 3));
  CHECK(k4.count == 1);
  REQUIRE(k4.graphs_g6.size() == 1);
  CHECK(k4.graphs_g6[0] == "C~");
  CHECK(enumerate(capped(3, 1)).graphs_g6 ==
        std::vector<std::string>{dso::canonical_graph6(testutil::cycle(3))});
  const auto k1 = enumerate(capped(1, 0));
  CHECK(k1.count == 1);
  CHECK(k1.graphs_g6 == std::vector<std::string>{"@"});
  CHECK(enumerate(capped(2, 0)).count == 1);
}

TEST_CASE("emitted graphs are sound, isomorph-free, and sorted") {
  for (const auto& params : {capped(6, 3), capped(7, 2), capped(6, 4),
                             unbounded(6, 3)}) {
    CAPTURE(params.n, params.ell);
    std::set<dso::CanonicalForm> forms;
    std::vector<dso::CanonicalForm> emitted;
    const bool feasible = dso::for_each_connected_graph(
        params, EnumerationLimits{}, [&](const Graph& g) {
          CHECK(g.order() == params.n);
          CHECK(g.edge_count() == params.edge_budget());
          CHECK(dso::is_connected(g));
          if (params.max_degree) {
            CHECK(dso::degree_profile(g).max_degree <= *params.max_degree);
          }
          CHECK(forms.insert(dso::canonical_form(g)).second);
          emitted.push_back(dso::canonical_form(g));
        });
    CHECK(feasible);
    CHECK(std::is_sorted(emitted.begin(), emitted.end()));
  }
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate(capped(6, 3));
  const auto b = enumerate(capped(6, 3));
  CHECK(a.graphs_g6 == b.graphs_g6);
}

TEST_CASE("infeasible edge budgets are flagged, not errors") {
  const auto r = enumerate(capped(4, 10));
  CHECK(r.infeasible);
  CHECK(r.count == 0);
  CHECK(r.graphs_g6.empty());
  // degree cap 2 cannot host n + 1 edges
  CHECK(enumerate(capped(5, 2, 2)).infeasible);
  CHECK_FALSE(enumerate(capped(5, 1, 2)).infeasible);  // C5 fits exactly
}

TEST_CASE("desk-scale refusal names the limit") {
  CHECK_THROWS_WITH(enumerate(capped(12, 3)),
                    Catch::Matchers::ContainsSubstring("11"));
  CHECK_THROWS_WITH(enumerate(unbounded(11, 3)),
                    Catch::Matchers::ContainsSubstring("10"));
  EnumerationLimits tight;
  tight.max_n_capped = 6;
  CHECK_THROWS_WITH(enumerate(capped(7, 3), tight),
                    Catch::Matchers::ContainsSubstring("6"));
  CHECK_THROWS_AS(enumerate(capped(0, 1)), std::domain_error);
  CHECK_THROWS_AS(enumerate({4, -1, 4}), std::domain_error);
}

TEST_CASE("minimize_index on pinned instances") {
  const auto k4 = dso::minimize_index(capped(4, 3), dso::dso_weight);
  CHECK_THAT(k4.minimum, WithinAbs(3.0 * dso::kSqrt2, 1e-12));
  CHECK(k4.argmin_g6 == std::vector<std::string>{"C~"});
  CHECK(k4.searched == 1);

  const auto r63 = dso::minimize_index(capped(6, 3), dso::dso_weight);
  CHECK_THAT(r63.minimum, WithinAbs(dso::paper_bound(6, 3), 1e-9));
  CHECK(r63.argmin_g6.size() == 1);
  CHECK(r63.searched == 18);

  // bicyclic instance: minimum pinned by brute force, three argmin graphs
  // sharing the census {m22: 2, m23: 4, m33: 1}
  const auto r62 = dso::minimize_index(capped(6, 2), dso::dso_weight);
  CHECK_THAT(r62.minimum, WithinAbs(5.005761363931, 1e-9));
  CHECK(r62.argmin_g6.size() == 3);
  for (const auto& g6 : r62.argmin_g6) {
    const auto census = dso::edge_type_counts(dso::from_graph6(g6));
    CHECK(census.at(2, 2) == 2);
    CHECK(census.at(2, 3) == 4);
    CHECK(census.at(3, 3) == 1);
  }

  const auto r61 = dso::minimize_index(capped(6, 1), dso::dso_weight);
  CHECK_THAT(r61.minimum, WithinAbs(6.0 / dso::kSqrt2, 1e-12));
  CHECK(r61.argmin_g6 ==
        std::vector<std::string>{dso::canonical_graph6(testutil::cycle(6))});

  const auto r64 = dso::minimize_index(capped(6, 4), dso::dso_weight);
  CHECK_THAT(r64.minimum, WithinAbs(dso::regular_bound(6, 4), 1e-9));
  const std::set<std::string> argmin(r64.argmin_g6.begin(), r64.argmin_g6.end());
  CHECK(argmin == std::set<std::string>{
                      dso::canonical_graph6(testutil::complete_bipartite(3, 3)),
                      dso::canonical_graph6(testutil::prism())});
}

TEST_CASE("minimum is bounded below by the all-equal-degree value") {
  for (const auto& params :
       {capped(5, 2), capped(6, 2), capped(6, 3), capped(7, 1), capped(6, 4)}) {
    const auto r = dso::minimize_index(params, dso::dso_weight);
    const double floor_value =
        (params.n + params.ell - 1) / dso::kSqrt2;
    CHECK(r.minimum >= floor_value - 1e-12);
    bool has_regular = false;
    for (const auto& g6 : r.argmin_g6) {
      const auto profile = dso::degree_profile(dso::from_graph6(g6));
      has_regular |= (profile.min_degree == profile.max_degree);
    }
    CHECK((std::abs(r.minimum - floor_value) <= 1e-9) == has_regular);
  }
}

TEST_CASE("minimize_index propagates infeasibility") {
  const auto r = dso::minimize_index(capped(4, 10), dso::dso_weight);
  CHECK(r.infeasible);
  CHECK(std::isnan(r.minimum));
  CHECK(r.argmin_g6.empty());
}
