#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "homcount/system.hpp"
#include "oracles.hpp"

using namespace homcount;

namespace {
const double kLambdaCat = (3.0 + std::sqrt(5.0)) / 2.0;

RatPoint rand_pt(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {u(rng), u(rng)};
}
} // namespace

TEST_CASE("toral construction and eigen data") {
  auto cat = TorusAutomorphism::cat_map();
  CHECK(cat.lambda_u() == doctest::Approx(kLambdaCat).epsilon(1e-14));
  CHECK(cat.lambda_u() * cat.lambda_s() == doctest::Approx(1.0).epsilon(1e-14));

  // symmetric matrix: orthogonal eigenvectors
  auto vu = cat.unstable_dir();
  auto vs = cat.stable_dir();
  CHECK(std::fabs(vu[0] * vs[0] + vu[1] * vs[1]) < 1e-14);

  CHECK_THROWS_AS(TorusAutomorphism({{{1, 1}, {0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(TorusAutomorphism({{{2, 0}, {0, 2}}}), std::invalid_argument);
  // det -1 hyperbolic example (trace nonzero)
  CHECK_NOTHROW(TorusAutomorphism({{{1, 1}, {1, 0}}}));
  CHECK_THROWS_AS(TorusAutomorphism({{{0, 1}, {1, 0}}}), std::invalid_argument);
}

TEST_CASE("toral apply") {
  auto cat = TorusAutomorphism::cat_map();
  RatPoint origin(Rational(0), Rational(0));
  for (long k : {-5L, -1L, 0L, 1L, 7L})
    CHECK(cat.apply(origin, k) == origin);

  RatPoint half(Rational(1, 2), Rational(1, 2));
  RatPoint image = cat.apply(half, 1);
  CHECK(image == RatPoint(Rational(1, 2), Rational(0)));
}

TEST_CASE("exact round trip through the full system interface") {
  std::mt19937_64 rng(7);
  System cat = TorusAutomorphism::cat_map();
  for (int i = 0; i < 1000; ++i) {
    RatPoint p = rand_pt(rng);
    long k = static_cast<long>(rng() % 41) - 20;
    RatPoint back = apply(cat, apply(cat, p, k), -k);
    CHECK(dist(cat, back, p) <= 1e-12);
  }

  System hs = AffineHorseshoe::standard();
  const auto& h = std::get<AffineHorseshoe>(hs);
  for (int i = 0; i < 1000; ++i) {
    // non-escaping points come from random itineraries
    Word core(24);
    for (auto& c : core) c = static_cast<int>(rng() % 2);
    SymbolicPoint s(Word{0}, core, Word{0});
    RatPoint p = h.point_from_itinerary(s, 12); // deep inside the window
    long k = static_cast<long>(rng() % 21) - 10;
    RatPoint back = apply(hs, apply(hs, p, k), -k);
    CHECK(dist(hs, back, p) <= 1e-12);
  }

  System hen = HenonMap(Rational(14, 10), Rational(3, 10));
  for (int i = 0; i < 200; ++i) {
    RatPoint p(Rational(static_cast<long>(rng() % 100), 1000),
               Rational(static_cast<long>(rng() % 100), 1000));
    long k = static_cast<long>(rng() % 13) - 6;
    RatPoint back = apply(hen, apply(hen, p, k), -k);
    CHECK(back == p); // polynomial map on rationals is exact
  }
}

TEST_CASE("horseshoe domain and escape") {
  auto h = AffineHorseshoe::standard();
  CHECK_THROWS_AS(h.apply({Rational(1, 2), Rational(1, 2)}, 1), EscapeError);
  try {
    h.apply({Rational(1, 2), Rational(1, 2)}, 1);
  } catch (const EscapeError& e) {
    CHECK(e.time() == 0);
  }
  // middle band leaves after one step even when starting inside a strip
  RatPoint p(Rational(1, 2), Rational(1, 10));
  try {
    h.apply(p, 3);
    FAIL("expected escape");
  } catch (const EscapeError& e) {
    CHECK(e.time() == 1); // f(p) = (1/10, 1/2) sits in the gap
  }

  CHECK_THROWS_AS(AffineHorseshoe(Rational(3, 5), Rational(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(AffineHorseshoe(Rational(1, 5), Rational(3, 2)),
                  std::invalid_argument);
}

TEST_CASE("horseshoe itinerary round trips") {
  auto h = AffineHorseshoe::standard();
  RatPoint origin = h.fixed_point0();
  auto it = h.itinerary(origin, 10, 10);
  for (int s : it.future) CHECK(s == 0);
  for (int s : it.past) CHECK(s == 0);

  SymbolicPoint s(Word{0}, Word{0, 1, 0}, Word{0});
  RatPoint p = h.point_from_itinerary(s);
  auto back = h.itinerary(p, 6, 4);
  CHECK(back.future == Word{0, 1, 0, 0, 0, 0});
  CHECK(back.past == Word{0, 0, 0, 0});

  // escape reports the first bad time
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.25, 0.75);
  RatPoint mid(u(rng), u(rng));
  CHECK_THROWS_AS(h.itinerary(mid, 3, 0), EscapeError);
}

TEST_CASE("point_from_itinerary closed forms") {
  auto h = AffineHorseshoe::standard();
  CHECK(h.point_from_itinerary(SymbolicPoint::periodic({0})) ==
        h.fixed_point0());
  CHECK(h.point_from_itinerary(SymbolicPoint::periodic({1})) ==
        h.fixed_point1());

  // (01)^inf with s_0 = 0 gives the period-2 point (5/6, 1/6)
  auto s01 = SymbolicPoint::periodic({0, 1});
  RatPoint p2 = h.point_from_itinerary(s01);
  CHECK(p2 == RatPoint(Rational(5, 6), Rational(1, 6)));
  CHECK(h.apply(p2, 2) == p2);
  CHECK(dist(System(h), h.apply(p2, 2), p2) <= 1e-12);

  // conjugacy equivariance on random eventually-periodic itineraries
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int core_len = 1 + static_cast<int>(rng() % 10);
    Word core(core_len);
    for (auto& c : core) c = static_cast<int>(rng() % 2);
    Word lt{static_cast<int>(rng() % 2)};
    Word rt{static_cast<int>(rng() % 2)};
    SymbolicPoint s(lt, core, rt);
    for (long j = -3; j <= 8; ++j) {
      RatPoint a = h.apply(h.point_from_itinerary(s, j), 1);
      RatPoint b = h.point_from_itinerary(s, j + 1);
      CHECK(a == b);
    }
  }
}

TEST_CASE("toral periodic points") {
  auto cat = TorusAutomorphism::cat_map();
  auto p1 = cat.periodic_points(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == RatPoint(Rational(0), Rational(0)));

  CHECK(cat.periodic_points(2).size() == 5);
  CHECK(cat.periodic_points(3).size() == 16);

  for (int n = 1; n <= 10; ++n) {
    auto pts = cat.periodic_points(n);
    CHECK(BigInt(static_cast<long>(pts.size())) == cat.periodic_point_count(n));
    for (const auto& p : pts) {
      RatPoint img = cat.apply(p, n);
      CHECK(img == p); // exact fixed point of A^n mod 1
    }
    // distinctness
    std::set<std::pair<std::string, std::string>> uniq;
    for (const auto& p : pts)
      uniq.insert({p.x.get_str(), p.y.get_str()});
    CHECK(uniq.size() == pts.size());
  }
}

TEST_CASE("cone conditions") {
  std::vector<RatPoint> grid;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      grid.push_back({Rational(i, 4), Rational(j, 4)});

  System cat = TorusAutomorphism::cat_map();
  double aperture = 0.6; // < pi/4
  auto rep = cone_condition_check(cat, grid, aperture);
  CHECK(rep.ok());
  CHECK(rep.min_expansion_u >= kLambdaCat * std::cos(aperture));
  CHECK(rep.min_expansion_s >= kLambdaCat * std::cos(aperture));

  // no expansion anywhere: a=0, b=1 swaps coordinates
  System swap = HenonMap(Rational(0), Rational(1));
  auto rep2 = cone_condition_check(swap, grid, 0.5);
  CHECK(!rep2.ok());

  System hs = AffineHorseshoe::standard();
  std::vector<RatPoint> hgrid;
  for (int i = 0; i <= 4; ++i) {
    hgrid.push_back({Rational(i, 4), Rational(i, 20)});          // in H0
    hgrid.push_back({Rational(i, 4), 1 - Rational(i, 20)});      // in H1
  }
  auto rep3 = cone_condition_check(hs, hgrid, 0.1);
  CHECK(rep3.ok());
  CHECK(rep3.min_expansion_u == doctest::Approx(5.0).epsilon(0.01));
  CHECK(rep3.min_expansion_s == doctest::Approx(5.0).epsilon(0.01));
}

TEST_CASE("system helpers") {
  System cat = TorusAutomorphism::cat_map();
  CHECK(certified_hyperbolic(cat));
  CHECK(!certified_hyperbolic(System(HenonMap(Rational(14, 10), Rational(3, 10)))));
  CHECK(system_name(System(HenonMap(Rational(14, 10), Rational(3, 10))))
            .find("exploratory") != std::string::npos);

  // torus metric wraps
  CHECK(dist(cat, RatPoint(Rational(1, 100), Rational(0)),
             RatPoint(Rational(99, 100), Rational(0))) ==
        doctest::Approx(0.02));

  auto orb = orbit_positions(cat, RatPoint(Rational(0), Rational(0)), 5);
  REQUIRE(orb.size() == 5);
  for (auto& q : orb) {
    CHECK(q[0] == 0.0);
    CHECK(q[1] == 0.0);
  }
}
