#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "homcount/census.hpp"
#include "homcount/prime_orbits.hpp"
#include "homcount/shift_graph.hpp"
#include "homcount/symbolic.hpp"
#include "oracles.hpp"

using namespace homcount;

namespace {
const double kLog2 = std::log(2.0);
const double kLogPhi = std::log((1.0 + std::sqrt(5.0)) / 2.0);

ShiftGraph two_loops() { return ShiftGraph(2, {{1, 0}, {0, 1}}); }
ShiftGraph two_cycle() { return ShiftGraph(2, {{0, 1}, {1, 0}}); }
ShiftGraph single_loop() { return ShiftGraph(1, {{1}}); }
} // namespace

TEST_CASE("validate_graph") {
  CHECK(validate_graph(ShiftGraph::full_shift(2)).empty());
  CHECK(validate_graph(ShiftGraph::golden_mean()).empty());

  ShiftGraph dangling(2, {{0, 0}, {1, 1}});
  auto diags = validate_graph(dangling);
  REQUIRE(!diags.empty());
  bool mentions_outgoing = false;
  for (const auto& d : diags)
    if (d.find("without outgoing edge") != std::string::npos)
      mentions_outgoing = true;
  CHECK(mentions_outgoing);

  ShiftGraph nonbinary(2, {{1, 2}, {1, 0}});
  auto diags2 = validate_graph(nonbinary);
  REQUIRE(!diags2.empty());
  CHECK(diags2[0].find("not 0 or 1") != std::string::npos);
}

TEST_CASE("irreducibility and mixing") {
  CHECK(is_irreducible(ShiftGraph::full_shift(2)));
  CHECK(!is_irreducible(two_loops()));
  CHECK(is_irreducible(ShiftGraph::golden_mean()));

  CHECK(is_mixing(ShiftGraph::full_shift(2)));
  CHECK(!is_mixing(two_cycle()));
  CHECK(is_mixing(ShiftGraph::golden_mean()));

  // period-based test agrees with literal boolean matrix powers
  std::vector<ShiftGraph> gs = {ShiftGraph::full_shift(2),
                                ShiftGraph::full_shift(3),
                                ShiftGraph::golden_mean(), two_cycle(),
                                single_loop(),
                                ShiftGraph(3, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}),
                                ShiftGraph(4, {{0, 1, 0, 0},
                                               {0, 0, 1, 0},
                                               {0, 0, 0, 1},
                                               {1, 0, 0, 1}})};
  for (const auto& g : gs)
    CHECK(is_mixing(g) == oracle::mixing_by_matrix_power(g));
}

TEST_CASE("spectral entropy") {
  CHECK(spectral_entropy(ShiftGraph::full_shift(2)) ==
        doctest::Approx(kLog2).epsilon(1e-12));
  CHECK(spectral_entropy(ShiftGraph::golden_mean()) ==
        doctest::Approx(kLogPhi).epsilon(1e-12));
  CHECK(spectral_entropy(single_loop()) == doctest::Approx(0.0));
  CHECK(spectral_entropy(two_cycle()) == doctest::Approx(0.0));
  CHECK_THROWS_AS(spectral_entropy(two_loops()), std::invalid_argument);
}

TEST_CASE("periodic census") {
  auto full2 = ShiftGraph::full_shift(2);
  auto golden = ShiftGraph::golden_mean();
  CHECK(periodic_census(full2, 0, 1) == 1);
  CHECK(periodic_census(full2, 0, 3) == 4);
  CHECK(periodic_census(golden, 0, 4) == 5); // Fibonacci F_5

  for (int n = 1; n <= 8; ++n) {
    CHECK(periodic_census(full2, 0, n) ==
          oracle::periodic_census_brute(full2, 0, n));
    CHECK(periodic_census(golden, 1, n) ==
          oracle::periodic_census_brute(golden, 1, n));
  }
  CHECK_THROWS_AS(periodic_census(full2, 7, 1), std::out_of_range);
}

TEST_CASE("prime orbit census") {
  auto full2 = ShiftGraph::full_shift(2);
  auto c1 = prime_orbit_census(full2, 1);
  CHECK(c1.per_period.at(1) == 2);
  CHECK(c1.cumulative == 2);

  auto c3 = prime_orbit_census(full2, 3);
  CHECK(c3.per_period.at(1) == 2);
  CHECK(c3.per_period.at(2) == 1);
  CHECK(c3.per_period.at(3) == 2);
  CHECK(c3.cumulative == 5);

  CHECK(prime_orbit_census(single_loop(), 5).cumulative == 1);

  // necklace enumeration cross-check
  auto golden = ShiftGraph::golden_mean();
  auto brute = oracle::prime_orbits_brute(golden, 8);
  auto fast = prime_orbit_census(golden, 8);
  for (int m = 1; m <= 8; ++m)
    CHECK(fast.per_period.at(m) == brute.at(m));

  // Mobius-inversion consistency: sum_{d|m} d * per_period[d] = tr(A^m)
  auto full2_20 = prime_orbit_census(full2, 20);
  auto tr = trace_powers(full2, 20);
  for (int m = 1; m <= 20; ++m) {
    BigInt s = 0;
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) s += d * full2_20.per_period.at(d);
    CHECK(s == tr[m]);
  }
}

TEST_CASE("connect") {
  auto golden = ShiftGraph::golden_mean();
  CHECK(connect(golden, 0, 0) == Word{0});
  CHECK(connect(golden, 1, 1) == Word{1, 0, 1}); // b has no self-loop
  CHECK_THROWS_WITH(connect(two_loops(), 0, 1), "unreachable");

  // shortest-path lengths agree with plain BFS on a handful of graphs
  for (const auto& g : {ShiftGraph::full_shift(3), golden,
                        ShiftGraph(4, {{0, 1, 0, 0},
                                       {0, 0, 1, 0},
                                       {0, 0, 0, 1},
                                       {1, 0, 0, 1}})}) {
    for (int u = 0; u < g.size(); ++u)
      for (int v = 0; v < g.size(); ++v) {
        auto p = connect(g, u, v);
        CHECK(static_cast<int>(p.size()) - 1 ==
              oracle::path_length_brute(g, u, v));
        CHECK(word_admissible(g, p));
      }
  }
}

TEST_CASE("connect_with_residue lands on the requested length class") {
  auto golden = ShiftGraph::golden_mean();
  for (int r = 0; r < 3; ++r) {
    auto p = connect_with_residue(golden, 1, 0, r, 3);
    REQUIRE(p.has_value());
    CHECK((static_cast<int>(p->size()) - 1) % 3 == r);
    CHECK(word_admissible(golden, *p));
  }
  // bipartite 2-cycle admits only even-length returns
  CHECK(!connect_with_residue(two_cycle(), 0, 0, 1, 2).has_value());
}

TEST_CASE("growth_rate") {
  CensusTable t;
  for (int n = 1; n <= 30; ++n) {
    BigInt c = 1;
    c <<= n; // 2^n
    t.entries[n] = c;
  }
  auto g = growth_rate(t, 1, 30);
  CHECK(g.slope == doctest::Approx(kLog2).epsilon(1e-12));

  CensusTable ones;
  for (int n = 1; n <= 10; ++n) ones.entries[n] = 1;
  CHECK(growth_rate(ones, 1, 10).slope == doctest::Approx(0.0));

  CensusTable with_zeros;
  with_zeros.entries[1] = 0;
  with_zeros.entries[2] = 2;
  with_zeros.entries[3] = 4;
  with_zeros.entries[4] = 8;
  auto gz = growth_rate(with_zeros, 1, 4);
  CHECK(gz.points_used == 3);
  CHECK(gz.skipped_zero == std::vector<long long>{1});

  CensusTable sparse;
  sparse.entries[1] = 1;
  sparse.entries[2] = 2;
  CHECK_THROWS_AS(growth_rate(sparse, 1, 2), std::invalid_argument);
}

TEST_CASE("exp-type ratio of periodic censuses is pinched and converges") {
  for (const auto& g : {ShiftGraph::full_shift(2), ShiftGraph::golden_mean()}) {
    const double h = spectral_entropy(g);
    std::vector<double> ratio;
    for (int n = 5; n <= 60; ++n) {
      BigInt c = periodic_census(g, 0, n);
      ratio.push_back(std::exp(log_big(c) - n * h));
    }
    for (double r : ratio) {
      CHECK(r > 0.1);
      CHECK(r < 10.0);
    }
    // successive differences decrease geometrically until float noise
    for (std::size_t i = 2; i < ratio.size(); ++i) {
      double d1 = std::fabs(ratio[i - 1] - ratio[i - 2]);
      double d2 = std::fabs(ratio[i] - ratio[i - 1]);
      if (d1 < 1e-11) break;
      CHECK(d2 <= 0.8 * d1 + 1e-12);
    }
  }
}

TEST_CASE("graph text parsing") {
  auto g = parse_graph("vertices 2\nlabel 0 a\nlabel 1 b\nedge 0 0\nedge 0 1\nedge 1 0\n");
  CHECK(g.size() == 2);
  CHECK(g.edge(0, 1));
  CHECK(!g.edge(1, 1));
  CHECK(g.label(0) == "a");

  auto m = parse_graph("vertices 2\nmatrix\n1 1\n1 0\n");
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(1, 1) == 0);

  CHECK_THROWS(parse_graph("edge 0 1\n"));
  CHECK_THROWS(parse_graph("vertices 2\nedge 0 5\n"));
  CHECK_THROWS(parse_graph("vertices 2\nfrobnicate\n"));
}
