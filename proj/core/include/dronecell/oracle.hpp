#pragma once

#include <cstdint>
#include <vector>

#include "dronecell/netmodel.hpp"
#include "dronecell/solver.hpp"

namespace dronecell {

struct OracleConfig {
  int points_per_axis = 13;   // locations per spatial axis
  int azimuth_samples = 24;
  int polar_samples = 7;
  int threads = 0;            // 0 picks hardware concurrency
  double relax_step_db = 1.0;
  double relax_max_db = 30.0;
};

struct OracleResult {
  Placement placement;
  double objective_bps = 0.0;
  PointEvaluation evaluation;
  std::size_t serving = 0;
  double relaxation_db = 0.0;
  bool feasible = false;
  std::uint64_t evaluations = 0;
  double solve_time_s = 0.0;
};

/// Exhaustive grid reference: every feasible grid location crossed with
/// every direction sample, best feasible point wins. Ties fold to the
/// lowest linear grid index regardless of thread count. Grids above 1e8
/// evaluations are rejected up front.
OracleResult oracle_solve(const NetworkSnapshot& snap, const AppRequest& request,
                          const OracleConfig& config = {});

/// The spatial grid the oracle scans: points_per_axis^3 lattice over the
/// bounding box of the feasible ball above the altitude floor, projected
/// into the region and deduplicated.
std::vector<Location3D> oracle_grid_locations(const AppRequest& request,
                                              int points_per_axis);

}  // namespace dronecell
