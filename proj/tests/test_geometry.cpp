#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "dronecell/geometry.hpp"

using namespace dronecell;

TEST_CASE("distance matches the 3-4-5 triangle") {
  CHECK(distance({0, 0, 0}, {3, 4, 0}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(distance({1, 1, 1}, {1, 1, 1}) == 0.0);
}

TEST_CASE("direction_to points along the ray and keeps conventions") {
  Direction east = direction_to({0, 0, 0}, {10, 0, 0});
  CHECK(east.azimuth == doctest::Approx(0.0));
  CHECK(east.polar == doctest::Approx(kPi / 2));

  Direction north = direction_to({0, 0, 0}, {0, 5, 0});
  CHECK(north.azimuth == doctest::Approx(kPi / 2));

  Direction down = direction_to({0, 0, 100}, {0, 0, 0});
  CHECK(down.polar == doctest::Approx(kPi));
  CHECK(down.azimuth == 0.0);

  CHECK_THROWS_AS(direction_to({1, 2, 3}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("unit vector and direction round-trip") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> az(0.0, kTwoPi);
  std::uniform_real_distribution<double> pol(0.01, kPi - 0.01);
  for (int i = 0; i < 200; ++i) {
    Direction d{az(rng), pol(rng)};
    Vec3 v = to_unit_vector(d);
    CHECK(std::abs(v.x * v.x + v.y * v.y + v.z * v.z - 1.0) < 1e-12);
    Direction back = direction_from_vector(v);
    CHECK(angular_offset(d, back) < 1e-9);
  }
  CHECK_THROWS_AS(direction_from_vector({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("angular_offset is symmetric and bounded") {
  Direction a{0.3, 1.1};
  Direction b{2.9, 2.0};
  CHECK(angular_offset(a, b) == doctest::Approx(angular_offset(b, a)));
  CHECK(angular_offset(a, a) < 1e-12);
  CHECK(angular_offset(a, b) >= 0.0);
  CHECK(angular_offset(a, b) <= kPi);
  // Opposite directions are half a turn apart.
  Direction up{0.0, 0.0};
  Direction dn{0.0, kPi};
  CHECK(angular_offset(up, dn) == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("wrap_azimuth lands in [0, 2pi)") {
  CHECK(wrap_azimuth(0.0) == 0.0);
  CHECK(wrap_azimuth(kTwoPi) == doctest::Approx(0.0));
  CHECK(wrap_azimuth(-0.5) == doctest::Approx(kTwoPi - 0.5));
  CHECK(wrap_azimuth(7 * kPi) == doctest::Approx(kPi));
  for (double a : {-100.0, -3.7, 0.1, 9.99, 1234.5}) {
    double w = wrap_azimuth(a);
    CHECK(w >= 0.0);
    CHECK(w < kTwoPi);
  }
}

TEST_CASE("projection is idempotent and always lands inside") {
  FeasibleRegion region{{100.0, -50.0, 120.0}, 152.4, 19.812};
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-500.0, 500.0);
  for (int i = 0; i < 500; ++i) {
    Location3D cand{100.0 + u(rng), -50.0 + u(rng), 120.0 + u(rng)};
    Location3D p = project_feasible(cand, region);
    CHECK(region_contains(region, p));
    // Strict containment: slack checks downstream must never see a
    // negative ulp on a projected point.
    CHECK(distance(p, region.center) <= region.radius);
    CHECK(p.z >= region.min_altitude);
    Location3D q = project_feasible(p, region);
    CHECK(distance(p, q) < 1e-9);
  }
}

TEST_CASE("interior points project to themselves") {
  FeasibleRegion region{{0.0, 0.0, 100.0}, 152.4, 19.812};
  Location3D inside{10.0, -20.0, 110.0};
  Location3D p = project_feasible(inside, region);
  CHECK(distance(p, inside) == 0.0);
}

TEST_CASE("projection respects the altitude floor before the ball") {
  // Region dips below the floor; a candidate under the floor must land on
  // the cut disc, not on the sphere below it.
  FeasibleRegion region{{0.0, 0.0, 30.0}, 100.0, 25.0};
  Location3D under{0.0, 0.0, -80.0};
  Location3D p = project_feasible(under, region);
  CHECK(p.z >= 25.0);
  CHECK(region_contains(region, p));
}

TEST_CASE("nearest_feasible_point keeps the separation distance") {
  FeasibleRegion region{{0.0, 0.0, 100.0}, 152.4, 19.812};
  Location3D target{10.0, 0.0, 100.0};  // inside the ball
  Location3D p = nearest_feasible_point(target, region, 1.0);
  CHECK(region_contains(region, p));
  CHECK(distance(p, target) >= 1.0 - 1e-9);

  // A far target just projects; it is already well separated.
  Location3D far{1000.0, 0.0, 0.0};
  Location3D q = nearest_feasible_point(far, region, 1.0);
  CHECK(region_contains(region, q));
  CHECK(distance(q, far) >= 1.0);
}
