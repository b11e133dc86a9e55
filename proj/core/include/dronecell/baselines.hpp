#pragma once

#include <string>
#include <vector>

#include "dronecell/netmodel.hpp"
#include "dronecell/solver.hpp"

namespace dronecell {

enum class BaselineKind {
  no_control,        // hover at the POI, average over an azimuth sweep
  orientation_only,  // hover at the POI, point at the serving cell
  location_only,     // park next to the serving cell, average over a sweep
  location_aligned,  // park next to the serving cell, point at it
};

std::string baseline_name(BaselineKind kind);

struct BaselineResult {
  BaselineKind kind;
  Placement placement;             // representative: serving-facing direction
  double objective_bps = 0.0;      // swept kinds report the sweep mean
  ConstraintReport constraints;    // evaluated at the representative placement
  bool feasible = false;
};

/// Number of azimuth samples in a sweep; NC spans +-90 degrees around the
/// serving azimuth, the solver candidate fans span the full circle.
inline constexpr int kSweepSamples = 19;

BaselineResult evaluate_baseline(const NetworkSnapshot& snap, const AppRequest& request,
                                 BaselineKind kind);

std::vector<BaselineResult> evaluate_all_baselines(const NetworkSnapshot& snap,
                                                   const AppRequest& request);

}  // namespace dronecell
