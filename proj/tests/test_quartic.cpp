#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "quadft/error.hpp"
#include "quadft/quartic.hpp"

using namespace quadft;

TEST_CASE("evaluate") {
  const QuarticPoly p{1, 0, 0, 0, -1};
  CHECK(evaluate(p, 1.0) == 0.0);
  CHECK(evaluate(p, 0.0) == -1.0);
  const QuarticPoly example{10, 0, -10, -52, 20};
  CHECK(std::abs(evaluate(example, 0.36265)) < 5e-3);
}

TEST_CASE("solve_real_cubic") {
  SUBCASE("three real roots") {
    // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    const auto r = solve_real_cubic(-6, 11, -6);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(r[2] == doctest::Approx(3.0).epsilon(1e-13));
  }
  SUBCASE("one real root") {
    // (x-2)(x^2+1) = x^3 - 2x^2 + x - 2
    const auto r = solve_real_cubic(-2, 1, -2);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == doctest::Approx(2.0).epsilon(1e-14));
  }
  SUBCASE("triple root") {
    const auto r = solve_real_cubic(-3, 3, -1);
    REQUIRE(r.size() == 3);
    for (double x : r) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("solve_real_quartic examples") {
  SUBCASE("y^4 - 1") {
    const auto r = solve_real_quartic({1, 0, 0, 0, -1}).values();
    REQUIRE(r.size() == 2);
    CHECK(r[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(r[1] == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("equilibrium quartic of the a=2, 1.5:1 square") {
    const auto r = solve_real_quartic({10, 0, -10, -52, 20}).values();
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - 0.36265) <= 5e-6);
    CHECK(std::abs(r[1] - 1.80699) <= 5e-6);
  }
  SUBCASE("no real roots") {
    CHECK(solve_real_quartic({1, 0, 0, 0, 1}).roots.empty());
    CHECK(solve_real_quartic({1, 0, 2, 0, 1}).roots.empty());  // (y^2+1)^2
  }
  SUBCASE("double roots are merged") {
    // (y-1)^2 (y+2)^2
    const auto r = solve_real_quartic(oracle::from_roots({1, 1, -2, -2}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].multiplicity == 2);
    CHECK(r.roots[1].multiplicity == 2);
    CHECK(r.roots[0].value == doctest::Approx(-2.0).epsilon(1e-7));
    CHECK(r.roots[1].value == doctest::Approx(1.0).epsilon(1e-7));
  }
  SUBCASE("biquadratic") {
    // (y^2-1)(y^2-4)
    const auto r = solve_real_quartic({1, 0, -5, 0, 4}).values();
    REQUIRE(r.size() == 4);
    CHECK(r[0] == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(r[3] == doctest::Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("large coefficient scale") {
    QuarticPoly p = oracle::from_roots({0.5, 3.0, -7.0, 9.5}, 1e9);
    const auto r = solve_real_quartic(p).values();
    REQUIRE(r.size() == 4);
    CHECK(r[0] == doctest::Approx(-7.0).epsilon(1e-12));
    CHECK(r[3] == doctest::Approx(9.5).epsilon(1e-12));
  }
}

TEST_CASE("solve_real_quartic rejects bad input") {
  CHECK_THROWS_AS(solve_real_quartic({0, 1, 1, 1, 1}), Error);
  CHECK_THROWS_AS(solve_real_quartic({1, std::numeric_limits<double>::quiet_NaN(), 0, 0, 0}), Error);
  CHECK_THROWS_AS(solve_real_quartic({1, 0, std::numeric_limits<double>::infinity(), 0, 0}), Error);
  try {
    solve_real_quartic({0, 1, 1, 1, 1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("random factored quartics match the bisection oracle") {
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> root(-10.0, 10.0);
  std::uniform_real_distribution<double> lead(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<double, 4> r{root(rng), root(rng), root(rng), root(rng)};
    std::sort(r.begin(), r.end());
    double c = lead(rng);
    if (std::abs(c) < 0.1) c = 1.0;
    const QuarticPoly p = oracle::from_roots(r, c);
    const auto got = solve_real_quartic(p).values();
    const auto grid = oracle::bisection_roots([&](double y) { return evaluate(p, y); }, -11.0, 11.0, 20000);
    REQUIRE(got.size() == 4);
    REQUIRE(grid.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(std::abs(got[i] - r[i]) <= 1e-8);
      CHECK(std::abs(got[i] - grid[i]) <= 1e-8);
    }
  }
}

TEST_CASE("quartic properties") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  std::uniform_real_distribution<double> root(-10.0, 10.0);

  SUBCASE("root-count parity and local sign change") {
    for (int trial = 0; trial < 500; ++trial) {
      QuarticPoly p{coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)};
      if (std::abs(p.c4) < 1e-3) p.c4 = 1.0;
      const RealRoots rr = solve_real_quartic(p);
      const int n = rr.count();
      CHECK((n == 0 || n == 2 || n == 4));
      for (const RealRoot& r : rr.roots) {
        const double scale = std::max(1.0, std::abs(r.value));
        const double h = 1e-6 * scale;
        const double lo = evaluate(p, r.value - h);
        const double hi = evaluate(p, r.value + h);
        const bool sign_change = (lo <= 0) != (hi <= 0);
        CHECK((sign_change || scaled_residual(p, r.value) <= 1e-9));
      }
    }
  }
  SUBCASE("reconstruction from returned roots") {
    for (int trial = 0; trial < 200; ++trial) {
      std::array<double, 4> r{root(rng), root(rng), root(rng), root(rng)};
      const QuarticPoly p = oracle::from_roots(r);
      const auto got = solve_real_quartic(p).values();
      REQUIRE(got.size() == 4);
      const QuarticPoly q = oracle::from_roots({got[0], got[1], got[2], got[3]});
      const double cmax = std::max({std::abs(p.c3), std::abs(p.c2), std::abs(p.c1), std::abs(p.c0), 1.0});
      CHECK(std::abs(q.c3 - p.c3) <= 1e-7 * cmax);
      CHECK(std::abs(q.c2 - p.c2) <= 1e-7 * cmax);
      CHECK(std::abs(q.c1 - p.c1) <= 1e-7 * cmax);
      CHECK(std::abs(q.c0 - p.c0) <= 1e-7 * cmax);
    }
  }
}
