#pragma once

#include <string>
#include <vector>

#include "dronecell/scenario.hpp"
#include "dronecell/solver.hpp"

namespace dronecell {

/// One uplink command from the ground controller to the drone. Serialized
/// form stays under 256 bytes so it fits a single control-plane packet.
struct ControlResponse {
  double t_s = 0.0;
  Placement target;
  double objective_bps = 0.0;
  double relaxation_db = 0.0;
  bool feasible = false;
};

std::string control_response_to_json(const ControlResponse& r);
ControlResponse control_response_from_json(const std::string& text);

struct TimelineSample {
  double t_s = 0.0;
  Location3D position;
  Direction direction;
  double objective_bps = 0.0;  // at the actual position under current loads
  std::string event;           // "solve", "load_change", both joined with '+', or empty
};

struct TimelineReport {
  std::string scenario_name;
  std::string config_hash;
  std::vector<TimelineSample> samples;     // one per second, t = 0..horizon
  std::vector<ControlResponse> commands;   // one per control tick
  double mean_objective_bps = 0.0;
};

/// Closed-loop flight: re-solve every loop.interval_s while t < horizon,
/// cruise toward the latest target at loop.speed_mps, record the realized
/// objective each second. Load changes apply at their timestamps between
/// ticks, so commands go stale until the next solve.
TimelineReport run_timeline(const Scenario& s, const SolverConfig& config = {});

struct StalenessReport {
  double change_time_s = 0.0;
  Placement stale;               // optimal for the pre-change network
  Placement fresh;               // re-solved after the change
  double stale_objective_bps = 0.0;  // stale placement scored on the changed network
  double fresh_objective_bps = 0.0;
  double gap_percent = 0.0;      // 100 * (fresh - stale) / fresh
};

/// Cost of not re-solving across a load shift. Requires every event in the
/// scenario to share one timestamp; both placements are scored on the
/// post-change snapshot.
StalenessReport staleness_gap(const Scenario& s, const SolverConfig& config = {});

}  // namespace dronecell
