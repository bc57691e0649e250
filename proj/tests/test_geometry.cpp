#include <doctest.h>

#include <numbers>
#include <random>
#include <stdexcept>

#include "dcsim/geometry.hpp"
#include "oracles.hpp"

using namespace dcsim;

TEST_CASE("convex polygon rejects degenerate input") {
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {0, 1}, {1, 0}}), std::invalid_argument);  // clockwise
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("containment agrees with the crossing-number oracle") {
  const std::vector<Vec2> rhombus{{0, 0}, {10, -17.32}, {20, 0}, {10, 17.32}};
  const ConvexPolygon poly(rhombus);
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> coord(-5.0, 25.0);
  for (int i = 0; i < 5000; ++i) {
    const Vec2 p{coord(gen), coord(gen)};
    CHECK(poly.contains(p, 0.0) == oracle::point_in_polygon(p, rhombus, 0.0));
  }
}

TEST_CASE("exit distance along axis") {
  const ConvexPolygon square({{-10, -10}, {10, -10}, {10, 10}, {-10, 10}});
  CHECK(square.exit_distance({0, 0}, {1, 0}) == doctest::Approx(10.0));
  CHECK(square.exit_distance({5, 5}, {0, -1}) == doctest::Approx(15.0));
  // on the right edge heading left: the edge itself does not stop us
  CHECK(square.exit_distance({10, 0}, {-1, 0}) == doctest::Approx(20.0));
  CHECK(square.points_inward({10, 0}, {-1, 0}));
  CHECK_FALSE(square.points_inward({10, 0}, {0, 1}));
  CHECK_FALSE(square.points_inward({10, 10}, {-1, 0}));  // corner: along the top edge
}

TEST_CASE("wrap_degrees") {
  CHECK(wrap_degrees(190.0) == doctest::Approx(-170.0));
  CHECK(wrap_degrees(-190.0) == doctest::Approx(170.0));
  CHECK(wrap_degrees(360.0) == doctest::Approx(0.0));
}
