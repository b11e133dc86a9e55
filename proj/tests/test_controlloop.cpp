#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "dronecell/controlloop.hpp"
#include "test_util.hpp"

using namespace dronecell;

namespace {

// Two cells, short horizon: fast enough to fly inside a unit test.
Scenario quick_flight() {
  return parse_scenario(R"({
    "name": "quick", "units": "m",
    "stations": [
      {"id": "a", "location": [0, 0, 10], "bandwidth_hz": 1e6},
      {"id": "b", "location": [800, 0, 10], "bandwidth_hz": 1e7,
       "load": 4, "rx_psd_dbm_hz": -150}
    ],
    "request": {"poi": [100, 0, 0], "dis_max": 120, "rate_app_bps": 1e6,
                "min_altitude": 20, "sinr_min_db": 0},
    "loop": {"horizon_s": 12, "interval_s": 5, "speed_mps": 10},
    "events": [{"time_s": 6, "station": "b", "load": 8}]
  })");
}

}  // namespace

TEST_CASE("control responses fit one packet and round-trip") {
  ControlResponse r;
  r.t_s = 30.0;
  r.target.location = {123.456789123, -987.654321, 45.5};
  r.target.direction = {1.234567891, 2.345678912};
  r.objective_bps = 1.23456789e9;
  r.relaxation_db = 3.0;
  r.feasible = true;
  std::string text = control_response_to_json(r);
  CHECK(text.size() < 256);
  ControlResponse back = control_response_from_json(text);
  CHECK(back.t_s == r.t_s);
  CHECK(back.objective_bps == doctest::Approx(r.objective_bps).epsilon(1e-9));
  CHECK(back.target.location.x == doctest::Approx(r.target.location.x).epsilon(1e-9));
  CHECK(back.target.direction.polar == doctest::Approx(r.target.direction.polar).epsilon(1e-9));
  CHECK(back.feasible == r.feasible);
}

TEST_CASE("the flight loop samples every second and ticks on schedule") {
  Scenario s = quick_flight();
  TimelineReport rep = run_timeline(s);
  REQUIRE(rep.samples.size() == 13);  // t = 0..12 inclusive
  REQUIRE(rep.commands.size() == 3);  // solves at t = 0, 5, 10
  CHECK(rep.commands[0].t_s == 0.0);
  CHECK(rep.commands[1].t_s == 5.0);
  CHECK(rep.commands[2].t_s == 10.0);
  CHECK(rep.scenario_name == "quick");
  CHECK(rep.config_hash == config_hash(s));

  for (std::size_t i = 0; i < rep.samples.size(); ++i) {
    CHECK(rep.samples[i].t_s == static_cast<double>(i));
    CHECK(rep.samples[i].objective_bps > 0.0);
  }
  // Cruise speed bounds every between-sample move.
  for (std::size_t i = 1; i < rep.samples.size(); ++i) {
    CHECK(distance(rep.samples[i].position, rep.samples[i - 1].position) <=
          s.loop.speed_mps + 1e-9);
  }
  // Mean is over the recorded samples.
  double sum = 0.0;
  for (const auto& smp : rep.samples) sum += smp.objective_bps;
  CHECK(rep.mean_objective_bps == doctest::Approx(sum / rep.samples.size()).epsilon(1e-12));

  CHECK(rep.samples[0].event.find("solve") != std::string::npos);
  CHECK(rep.samples[6].event.find("load_change") != std::string::npos);
  CHECK(rep.samples[1].event.empty());
}

TEST_CASE("the flight loop is deterministic") {
  Scenario s = quick_flight();
  auto a = run_timeline(s);
  auto b = run_timeline(s);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].objective_bps == b.samples[i].objective_bps);
    CHECK(a.samples[i].position.x == b.samples[i].position.x);
  }
  CHECK(a.mean_objective_bps == b.mean_objective_bps);
}

TEST_CASE("staleness gap is positive and bounded on the shift scenario") {
  Scenario s = load_scenario(testutil::scenario_path("rural_shift.json"));
  StalenessReport rep = staleness_gap(s);
  CHECK(rep.change_time_s == 25.0);
  CHECK(rep.gap_percent > 0.0);
  CHECK(rep.gap_percent <= 30.0);
  CHECK(rep.fresh_objective_bps > rep.stale_objective_bps);
}

TEST_CASE("staleness analysis demands one shared change time") {
  Scenario s = quick_flight();  // single event, fine
  CHECK_NOTHROW(staleness_gap(s));
  Scenario none = quick_flight();
  none.events.clear();
  CHECK_THROWS_AS(staleness_gap(none), std::invalid_argument);
  Scenario split = quick_flight();
  LoadChange extra;
  extra.time_s = 9.0;
  extra.station = "b";
  extra.load = 1.0;
  split.events.push_back(extra);
  CHECK_THROWS_AS(staleness_gap(split), std::invalid_argument);
}
