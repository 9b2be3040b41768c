#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "quadft/error.hpp"
#include "quadft/geom.hpp"

using namespace quadft;
using std::numbers::pi;

TEST_CASE("unit_vector") {
  const PlanarVector e = unit_vector({0, 0}, {3, 0});
  CHECK(e.dx == doctest::Approx(1.0));
  CHECK(e.dy == 0.0);

  const PlanarVector d = unit_vector({1, 1}, {2, 2});
  CHECK(d.dx == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(d.dy == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));

  CHECK_THROWS_AS(unit_vector({0, 0}, {0, 0}), Error);
}

TEST_CASE("angle_at") {
  CHECK(angle_at({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(angle_at({0, 0}, {1, 0}, {-1, 0}) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(angle_at({0, 0}, {1, 0}, {1, 1}) == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK_THROWS_AS(angle_at({0, 0}, {0, 0}, {1, 1}), Error);
}

TEST_CASE("segment_intersection") {
  const auto c = segment_intersection({-1, -1}, {1, 1}, {-1, 1}, {1, -1});
  REQUIRE(c);
  CHECK(std::abs(c->x) < 1e-15);
  CHECK(std::abs(c->y) < 1e-15);

  CHECK_FALSE(segment_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}));

  const auto p = segment_intersection({0, 0}, {2, 0}, {1, -1}, {1, 1});
  REQUIRE(p);
  CHECK(p->x == doctest::Approx(1.0));
  CHECK(p->y == 0.0);

  SUBCASE("collinear cases") {
    CHECK_THROWS_AS(segment_intersection({0, 0}, {2, 0}, {1, 0}, {3, 0}), Error);
    CHECK_FALSE(segment_intersection({0, 0}, {1, 0}, {2, 0}, {3, 0}));
    const auto touch = segment_intersection({0, 0}, {1, 0}, {1, 0}, {3, 0});
    REQUIRE(touch);
    CHECK(*touch == Point{1, 0});
  }
  SUBCASE("non-crossing lines") {
    CHECK_FALSE(segment_intersection({0, 0}, {1, 0}, {2, -1}, {2, 1}));
  }
  SUBCASE("zero-length segment") {
    CHECK_THROWS_AS(segment_intersection({0, 0}, {0, 0}, {2, -1}, {2, 1}), Error);
  }
}

TEST_CASE("rotate") {
  const PlanarVector a = rotate({1, 0}, pi / 2);
  CHECK(std::abs(a.dx) < 1e-15);
  CHECK(a.dy == doctest::Approx(1.0));
  CHECK(rotate({1, 0}, 0.0) == PlanarVector{1, 0});
  const PlanarVector b = rotate({0, 1}, pi);
  CHECK(std::abs(b.dx) < 1e-15);
  CHECK(b.dy == doctest::Approx(-1.0));
}

TEST_CASE("is_convex_quad") {
  CHECK(is_convex_quad({Point{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
  CHECK(is_convex_quad({Point{1, -1}, {-1, -1}, {-1, 1}, {1, 1}}));  // clockwise
  CHECK_FALSE(is_convex_quad({Point{0, 0}, {2, 0}, {1, 0.1}, {1, 2}}));
  CHECK_FALSE(is_convex_quad({Point{0, 0}, {1, 0}, {2, 0}, {1, 1}}));
  CHECK_FALSE(is_convex_quad({Point{0, 0}, {1, 1}, {1, 0}, {0, 1}}));  // bow-tie
  CHECK_THROWS_AS(is_convex_quad({Point{0, 0}, {1, 0}, {0, 0}, {1, 1}}), Error);
}

TEST_CASE("geometric invariants over random inputs") {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const Point a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
    const Point c{coord(rng), coord(rng)}, d{coord(rng), coord(rng)};

    CHECK(std::abs(norm(unit_vector(a, b)) - 1.0) <= 1e-14);
    CHECK(angle_at(a, b, c) == angle_at(a, c, b));

    const PlanarVector v{coord(rng), coord(rng)};
    const double theta = angle(rng);
    const PlanarVector back = rotate(rotate(v, theta), -theta);
    CHECK(std::abs(back.dx - v.dx) <= 1e-12);
    CHECK(std::abs(back.dy - v.dy) <= 1e-12);
    CHECK(std::abs(norm(rotate(v, theta)) - norm(v)) <= 1e-14 * norm(v));

    if (const auto x = segment_intersection(a, b, c, d)) {
      // Distance from x to each supporting line.
      const double da = std::abs(cross(b - a, *x - a)) / norm(b - a);
      const double dc = std::abs(cross(d - c, *x - c)) / norm(d - c);
      CHECK(da <= 1e-12 * std::max(1.0, norm(b - a)));
      CHECK(dc <= 1e-12 * std::max(1.0, norm(d - c)));
    }
  }
}
