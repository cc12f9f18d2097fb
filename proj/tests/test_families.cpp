#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "dso/canonical.hpp"
#include "dso/families.hpp"
#include "dso/weights.hpp"
#include "test_util.hpp"

using Catch::Matchers::WithinAbs;
using dso::Graph;

TEST_CASE("circulant basics") {
  const Graph c5 = dso::circulant(5, {1});
  CHECK(dso::canonical_form(c5) == dso::canonical_form(testutil::cycle(5)));
  CHECK(dso::degree_profile(c5).max_degree == 2);

  const Graph c512 = dso::circulant(5, {1, 2});
  CHECK(c512.edge_count() == 10);
  CHECK(dso::degree_profile(c512).min_degree == 4);
  CHECK(dso::is_connected(c512));

  const Graph c62 = dso::circulant(6, {2});  // gcd(2,6) = 2
  CHECK_FALSE(dso::is_connected(c62));
  CHECK(dso::canonical_form(c62) ==
        dso::canonical_form(
            testutil::disjoint_union(testutil::cycle(3), testutil::cycle(3))));
}

TEST_CASE("circulant validation") {
  CHECK_THROWS_AS(dso::circulant(1, {1}), std::domain_error);
  CHECK_THROWS_AS(dso::circulant(6, {}), std::domain_error);
  CHECK_THROWS_AS(dso::circulant(6, {0, 1}), std::domain_error);
  CHECK_THROWS_AS(dso::circulant(6, {2, 2}), std::domain_error);
  CHECK_THROWS_AS(dso::circulant(6, {4}), std::domain_error);  // > floor(r/2)
  CHECK_NOTHROW(dso::circulant(6, {3}));
}

TEST_CASE("circulant regularity and connectivity across the full grid") {
  for (int r = 2; r <= 20; ++r) {
    const int half = r / 2;
    for (unsigned subset = 1; subset < (1u << half); ++subset) {
      std::vector<int> offsets;
      for (int a = 1; a <= half; ++a) {
        if ((subset >> (a - 1)) & 1u) offsets.push_back(a);
      }
      const Graph g = dso::circulant(r, offsets);
      const int k = static_cast<int>(offsets.size());
      const auto profile = dso::degree_profile(g);
      if (2 * offsets.back() < r) {
        CHECK(profile.min_degree == 2 * k);
        CHECK(profile.max_degree == 2 * k);
      }
      int gcd = r;
      for (int a : offsets) gcd = std::gcd(gcd, a);
      CHECK(dso::is_connected(g) == (gcd == 1));
    }
  }
}

TEST_CASE("mobius ladder") {
  CHECK(dso::canonical_form(dso::mobius_ladder(2)) ==
        dso::canonical_form(testutil::complete(4)));
  const Graph m3 = dso::mobius_ladder(3);
  CHECK(m3.edge_count() == 9);
  CHECK(dso::degree_profile(m3).min_degree == 3);
  CHECK(dso::degree_profile(m3).max_degree == 3);
  CHECK(dso::canonical_form(m3) ==
        dso::canonical_form(testutil::complete_bipartite(3, 3)));
  CHECK_THAT(dso::evaluate_index(dso::mobius_ladder(4), dso::dso_weight),
             WithinAbs(12.0 / dso::kSqrt2, 1e-12));
  for (int k = 2; k <= 12; ++k) {
    const Graph m = dso::mobius_ladder(k);
    CHECK(m.order() == 2 * k);
    CHECK(dso::is_connected(m));
    CHECK(dso::degree_profile(m).min_degree == 3);
    CHECK(dso::degree_profile(m).max_degree == 3);
  }
  CHECK_THROWS_AS(dso::mobius_ladder(1), std::domain_error);
}

TEST_CASE("c_star gadget") {
  const Graph g6 = dso::c_star(6);
  CHECK(g6.order() == 6);
  CHECK(g6.edge_count() == 11);
  {
    const auto profile = dso::degree_profile(g6);
    CHECK(profile.count(4) == 5);
    CHECK(profile.count(2) == 1);
  }
  const Graph g8 = dso::c_star(8);
  CHECK(g8.order() == 8);
  CHECK(g8.edge_count() == 15);
  CHECK(dso::degree_profile(g8).count(2) == 1);

  for (int ell = 6; ell <= 20; ++ell) {
    const Graph g = dso::c_star(ell);
    CHECK(g.order() == ell);
    CHECK(dso::is_connected(g));
    CHECK(dso::cyclomatic_number(g) == ell);
    // handshake form: 4(|V|-1) + 2 = 2|E|
    CHECK(4 * (g.order() - 1) + 2 == 2 * g.edge_count());
    const auto profile = dso::degree_profile(g);
    CHECK(profile.count(4) == ell - 1);
    CHECK(profile.count(2) == 1);
    const auto census = dso::edge_type_counts(g);
    CHECK(census.at(2, 4) == 2);
    CHECK(census.at(4, 4) == 2 * ell - 3);
  }
  CHECK_THROWS_AS(dso::c_star(5), std::domain_error);
}

TEST_CASE("extremal graph examples") {
  const Graph fig2 = dso::extremal_graph(10, 3);
  const auto census = dso::edge_type_counts(fig2);
  CHECK(census.at(2, 2) == 5);
  CHECK(census.at(2, 3) == 2);
  CHECK(census.at(3, 3) == 5);
  CHECK_THAT(dso::evaluate_index(fig2, dso::dso_weight),
             WithinAbs(dso::paper_bound(10, 3), 1e-9));

  CHECK(dso::canonical_form(dso::extremal_graph(4, 3)) ==
        dso::canonical_form(testutil::complete(4)));
  CHECK_THAT(dso::evaluate_index(dso::extremal_graph(4, 3), dso::dso_weight),
             WithinAbs(3.0 * dso::kSqrt2, 1e-12));
  CHECK_THAT(dso::evaluate_index(dso::extremal_graph(6, 3), dso::dso_weight),
             WithinAbs(5.684861197305, 1e-9));

  CHECK_THROWS_AS(dso::extremal_graph(3, 3), std::domain_error);
  CHECK_THROWS_AS(dso::extremal_graph(8, 2), std::domain_error);
}

TEST_CASE("extremal graph certificates across the grid") {
  for (int ell = 3; ell <= 10; ++ell) {
    for (int n = 2 * (ell - 1); n <= 2 * ell + 6; ++n) {
      const Graph g = dso::extremal_graph(n, ell);
      CHECK(g.order() == n);
      CHECK(dso::is_connected(g));
      CHECK(dso::cyclomatic_number(g) == ell);
      const auto profile = dso::degree_profile(g);
      CHECK(profile.max_degree == 3);
      const double value = dso::evaluate_index(g, dso::dso_weight);
      if (n == 2 * (ell - 1)) {
        CHECK(profile.min_degree == 3);
        CHECK_THAT(value, WithinAbs(dso::regular_bound(n, ell), 1e-9));
      } else {
        CHECK(profile.min_degree == 2);
        const auto census = dso::edge_type_counts(g);
        CHECK(census.at(2, 2) == n - 2 * ell + 1);
        CHECK(census.at(2, 3) == 2);
        CHECK(census.at(3, 3) == 3 * ell - 4);
        CHECK(census.total() == n + ell - 1);
        CHECK_THAT(value, WithinAbs(dso::paper_bound(n, ell), 1e-9));
      }
    }
  }
}

TEST_CASE("claim1 case 2.2 graph") {
  const Graph g = dso::claim1_case22_graph(9, 6);
  const auto census = dso::edge_type_counts(g);
  CHECK(census.at(1, 2) == 1);
  CHECK(census.at(2, 3) == 1);
  CHECK(census.at(3, 4) == 2);
  CHECK(census.at(4, 4) == 9);
  CHECK(census.at(2, 2) == 1);
  CHECK(census.total() == g.edge_count());
  CHECK(dso::cyclomatic_number(g) == 6);

  const double expected = 1.0 / dso::kSqrt2 + 9.0 / dso::kSqrt2 +
                          std::sqrt(5.0) / 3.0 + dso::kSqrt13 / 5.0 +
                          2.0 * (5.0 / 7.0);
  CHECK_THAT(dso::evaluate_index(g, dso::dso_weight), WithinAbs(expected, 1e-12));

  CHECK_THROWS_AS(dso::claim1_case22_graph(9, 5), std::domain_error);
  CHECK_THROWS_AS(dso::claim1_case22_graph(8, 6), std::domain_error);
}

TEST_CASE("claim1 vs extremal difference is constant in ell") {
  std::vector<double> diffs;
  for (int ell = 6; ell <= 20; ++ell) {
    const int n = 2 * ell + 2;
    const double a =
        dso::evaluate_index(dso::claim1_case22_graph(n, ell), dso::dso_weight);
    const double b =
        dso::evaluate_index(dso::extremal_graph(n, ell), dso::dso_weight);
    diffs.push_back(a - b);
  }
  for (double d : diffs) {
    CHECK_THAT(d, WithinAbs(0.038603603605, 1e-9));
    CHECK_THAT(d, WithinAbs(diffs.front(), 1e-12));
    CHECK(d > 0.0);
  }
}
