#include "dronecell/baselines.hpp"

#include <stdexcept>

namespace dronecell {

namespace {

/// Mean objective over an azimuth sweep, modeling a drone whose heading
/// is not controlled. The representative direction scores constraints.
double sweep_mean_objective(const NetworkSnapshot& snap, std::size_t serving,
                            const Location3D& at, const Direction& center) {
  double sum = 0.0;
  for (int k = 0; k < kSweepSamples; ++k) {
    const double t =
        static_cast<double>(k) / static_cast<double>(kSweepSamples - 1) - 0.5;
    const Direction d{wrap_azimuth(center.azimuth + kPi * t), center.polar};
    sum += evaluate_objective(snap, serving, at, d);
  }
  return sum / kSweepSamples;
}

}  // namespace

std::string baseline_name(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::no_control: return "no_control";
    case BaselineKind::orientation_only: return "orientation_only";
    case BaselineKind::location_only: return "location_only";
    case BaselineKind::location_aligned: return "location_aligned";
  }
  throw std::invalid_argument("baseline_name: bad kind");
}

BaselineResult evaluate_baseline(const NetworkSnapshot& snap, const AppRequest& request,
                                 BaselineKind kind) {
  const FeasibleRegion region = feasible_region(request);
  const Location3D p0 = project_feasible(request.poi, region);
  const std::size_t serving = select_serving_index(snap, p0);

  Location3D at = p0;
  if (kind == BaselineKind::location_only || kind == BaselineKind::location_aligned) {
    at = nearest_feasible_point(snap.stations[serving].location, region, 1.0);
  }
  const Direction facing = direction_to(at, snap.stations[serving].location);

  BaselineResult r;
  r.kind = kind;
  r.placement = {at, facing};
  if (kind == BaselineKind::no_control || kind == BaselineKind::location_only) {
    r.objective_bps = sweep_mean_objective(snap, serving, at, facing);
  } else {
    r.objective_bps = evaluate_objective(snap, serving, at, facing);
  }
  r.constraints = evaluate_constraints(snap, serving, request, at, facing);
  r.feasible = r.constraints.feasible;
  return r;
}

std::vector<BaselineResult> evaluate_all_baselines(const NetworkSnapshot& snap,
                                                   const AppRequest& request) {
  return {
      evaluate_baseline(snap, request, BaselineKind::no_control),
      evaluate_baseline(snap, request, BaselineKind::orientation_only),
      evaluate_baseline(snap, request, BaselineKind::location_only),
      evaluate_baseline(snap, request, BaselineKind::location_aligned),
  };
}

}  // namespace dronecell
