#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "dronecell/baselines.hpp"
#include "dronecell/solver.hpp"
#include "test_util.hpp"

using namespace dronecell;

TEST_CASE("penalized objective is exact on both sides of the boundary") {
  auto snap = testutil::pair_cells();
  AppRequest r = testutil::basic_request();
  Location3D at{400.0, 0.0, 100.0};
  Direction facing = direction_to(at, snap.stations[0].location);

  double obj = evaluate_objective(snap, 0, at, facing);
  auto c = evaluate_constraints(snap, 0, r, at, facing);
  REQUIRE(c.feasible);
  CHECK(penalized_objective(snap, 0, r, at, facing, 1e6) ==
        doctest::Approx(-obj).epsilon(1e-12));

  // Push sinr_min 2 dB above the achieved neighbor minimum: the penalty
  // adds exactly weight * violation^2.
  auto eval = evaluate_point(snap, 0, r, at, facing);
  AppRequest tight = r;
  tight.sinr_min_db = eval.min_neighbor_sinr_db + 2.0;
  double pen = penalized_objective(snap, 0, tight, at, facing, 1e6);
  CHECK(pen == doctest::Approx(-obj + 1e6 * 4.0).epsilon(1e-9));

  // An unreachable rate drives the slack to -infinity; the violation is
  // capped so the scalarization stays finite.
  AppRequest greedy = r;
  greedy.rate_app_bps = 1e15;
  double capped = penalized_objective(snap, 0, greedy, at, facing, 1e6);
  CHECK(std::isfinite(capped));
  CHECK(capped == doctest::Approx(-obj + 1e6 * 1e12).epsilon(1e-9));
}

TEST_CASE("initial placements stay inside the hover region") {
  auto snap = testutil::pair_cells();
  AppRequest r = testutil::basic_request();
  auto region = feasible_region(r);
  auto starts = initial_placements(snap, r);
  CHECK(starts.size() >= 2);
  for (const auto& p : starts) {
    CHECK(region_contains(region, p.location));
    CHECK(p.direction.polar >= 0.0);
    CHECK(p.direction.polar <= kPi);
  }
}

TEST_CASE("solve finds a feasible placement and dominates every baseline") {
  auto snap = testutil::pair_cells();
  AppRequest r = testutil::basic_request();
  auto res = solve(snap, r);
  CHECK(res.feasible);
  CHECK(res.relaxation_db == 0.0);
  CHECK(res.evaluation.constraints.feasible);
  CHECK(region_contains(feasible_region(r), res.placement.location));
  CHECK(res.starts_used > 0);
  CHECK(res.objective_bps > 0.0);

  for (const auto& base : evaluate_all_baselines(snap, r)) {
    if (!base.feasible) continue;
    CHECK(res.objective_bps >= base.objective_bps * (1.0 - 1e-9));
  }
}

TEST_CASE("solve is bit-deterministic for a fixed configuration") {
  auto snap = testutil::pair_cells();
  AppRequest r = testutil::basic_request();
  SolverConfig cfg;
  cfg.rng_seed = 17;
  auto a = solve(snap, r, cfg);
  auto b = solve(snap, r, cfg);
  CHECK(a.objective_bps == b.objective_bps);
  CHECK(a.placement.location.x == b.placement.location.x);
  CHECK(a.placement.location.y == b.placement.location.y);
  CHECK(a.placement.location.z == b.placement.location.z);
  CHECK(a.placement.direction.azimuth == b.placement.direction.azimuth);
  CHECK(a.placement.direction.polar == b.placement.direction.polar);
  CHECK(a.relaxation_db == b.relaxation_db);
}

TEST_CASE("an impossible neighbor floor walks down the relaxation ladder") {
  auto snap = testutil::pair_cells();
  AppRequest r = testutil::basic_request();
  // The neighbor's clear-sky SINR is about 21 dB, so a 25 dB floor can
  // never hold and the ladder must give away a few dB.
  r.sinr_min_db = 25.0;
  auto res = solve(snap, r);
  CHECK(res.relaxation_db > 0.0);
  CHECK(res.relaxation_db <= 30.0);
  CHECK(res.feasible);  // under the relaxed threshold
  // Scored against the original request the floor is still violated.
  CHECK(res.evaluation.constraints.neighbor_sinr_slack_db < 0.0);
  CHECK(res.evaluation.constraints.neighbor_sinr_slack_db + res.relaxation_db >= -1e-9);
  // The other constraints never relax.
  CHECK(res.evaluation.constraints.distance_slack_m >= 0.0);
  CHECK(res.evaluation.constraints.altitude_slack_m >= 0.0);
  CHECK(res.evaluation.constraints.uav_sinr_slack_db >= 0.0);
}

TEST_CASE("a hopeless floor beyond the ladder comes back marked infeasible") {
  auto snap = testutil::pair_cells();
  AppRequest r = testutil::basic_request();
  r.sinr_min_db = 80.0;  // 59 dB short of reachable, past the 30 dB ceiling
  auto res = solve(snap, r);
  CHECK_FALSE(res.feasible);
  CHECK(res.objective_bps > 0.0);  // still reports its best effort
}

TEST_CASE("the reported evaluation matches a fresh scoring of the placement") {
  auto snap = testutil::pair_cells();
  AppRequest r = testutil::basic_request();
  auto res = solve(snap, r);
  double again = evaluate_objective(snap, res.serving, res.placement.location,
                                    res.placement.direction);
  CHECK(res.objective_bps == doctest::Approx(again).epsilon(1e-12));
}
