#include <cmath>

#include "doctest.h"
#include "dronecell/baselines.hpp"
#include "test_util.hpp"

using namespace dronecell;

TEST_CASE("baseline names are stable identifiers") {
  CHECK(baseline_name(BaselineKind::no_control) == "no_control");
  CHECK(baseline_name(BaselineKind::orientation_only) == "orientation_only");
  CHECK(baseline_name(BaselineKind::location_only) == "location_only");
  CHECK(baseline_name(BaselineKind::location_aligned) == "location_aligned");
}

TEST_CASE("all four baselines come back in a fixed order") {
  auto snap = testutil::pair_cells();
  AppRequest r = testutil::basic_request();
  auto all = evaluate_all_baselines(snap, r);
  REQUIRE(all.size() == 4);
  CHECK(all[0].kind == BaselineKind::no_control);
  CHECK(all[1].kind == BaselineKind::orientation_only);
  CHECK(all[2].kind == BaselineKind::location_only);
  CHECK(all[3].kind == BaselineKind::location_aligned);
  for (const auto& b : all) {
    CHECK(b.objective_bps > 0.0);
    CHECK(region_contains(feasible_region(r), b.placement.location));
  }
}

TEST_CASE("hovering kinds sit at the projected poi, parked kinds near the cell") {
  auto snap = testutil::pair_cells();
  AppRequest r = testutil::basic_request();
  auto region = feasible_region(r);
  Location3D at_poi = project_feasible(r.poi, region);

  auto nc = evaluate_baseline(snap, r, BaselineKind::no_control);
  auto oo = evaluate_baseline(snap, r, BaselineKind::orientation_only);
  CHECK(distance(nc.placement.location, at_poi) < 1e-9);
  CHECK(distance(oo.placement.location, at_poi) < 1e-9);

  auto lo = evaluate_baseline(snap, r, BaselineKind::location_only);
  auto la = evaluate_baseline(snap, r, BaselineKind::location_aligned);
  CHECK(distance(lo.placement.location, la.placement.location) < 1e-9);
  // Parked placements move toward the serving site relative to hovering.
  double d_serv_poi = distance(at_poi, snap.stations[0].location);
  double d_serv_park = distance(lo.placement.location, snap.stations[0].location);
  CHECK(d_serv_park < d_serv_poi);
}

TEST_CASE("aligned kinds score their pointed placement, swept kinds a mean") {
  auto snap = testutil::pair_cells();
  AppRequest r = testutil::basic_request();

  auto oo = evaluate_baseline(snap, r, BaselineKind::orientation_only);
  double direct = evaluate_objective(snap, 0, oo.placement.location, oo.placement.direction);
  CHECK(oo.objective_bps == doctest::Approx(direct).epsilon(1e-12));

  // A sweep mean can never exceed the best single sample, so pointing at
  // the serving cell beats the undirected average at the same spot.
  auto nc = evaluate_baseline(snap, r, BaselineKind::no_control);
  CHECK(nc.objective_bps <= oo.objective_bps * (1.0 + 1e-12));

  auto la = evaluate_baseline(snap, r, BaselineKind::location_aligned);
  double parked = evaluate_objective(snap, 0, la.placement.location, la.placement.direction);
  CHECK(la.objective_bps == doctest::Approx(parked).epsilon(1e-12));
}

TEST_CASE("baseline feasibility reflects the representative placement") {
  auto snap = testutil::pair_cells();
  AppRequest r = testutil::basic_request();
  for (const auto& b : evaluate_all_baselines(snap, r)) {
    auto c = evaluate_constraints(snap, 0, r, b.placement.location, b.placement.direction);
    CHECK(b.feasible == c.feasible);
  }
}
