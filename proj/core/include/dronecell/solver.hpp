#pragma once

#include <cstdint>
#include <vector>

#include "dronecell/netmodel.hpp"

namespace dronecell {

struct SolverConfig {
  int max_iterations = 400;        // Nelder-Mead iterations per start per restart
  int restarts = 2;                // penalty growth rounds after the first
  int basin_hops = 2;              // perturb-and-repolish rounds per start
  double penalty_weight = 1e9;     // initial exterior penalty weight
  double penalty_growth = 100.0;   // weight multiplier per restart
  double xtol = 1e-7;              // simplex collapse tolerance, canonical coords
  double ftol = 1e-4;              // objective spread tolerance, bps
  double relax_step_db = 1.0;      // SINR_min relaxation ladder step
  double relax_max_db = 30.0;      // ladder ceiling before giving up
  std::uint64_t rng_seed = 0;      // keys hop perturbations, not convergence
};

struct Placement {
  Location3D location;
  Direction direction;
};

struct SolveResult {
  Placement placement;
  double objective_bps = 0.0;
  PointEvaluation evaluation;
  std::size_t serving = 0;
  double relaxation_db = 0.0;      // how far SINR_min was lowered to admit a solution
  bool feasible = false;           // under the relaxed threshold actually used
  int starts_used = 0;
  double solve_time_s = 0.0;
};

/// Penalized scalarization used by the search: negative objective plus
/// weight times the squared hinge of the two SINR slacks. Violations are
/// capped at 1e6 dB so unbounded slacks stay finite. Location constraints
/// never enter; the search space is the feasible ball itself.
double penalized_objective(const NetworkSnapshot& snap, std::size_t serving,
                           const AppRequest& request, const Location3D& l,
                           const Direction& dir, double penalty_weight);

/// Deterministic multistart Nelder-Mead over (x, y, z, azimuth, polar).
/// Serving cell is fixed by strongest received power at the POI projected
/// into the feasible region. If no start satisfies the SINR constraints,
/// sinr_min is relaxed in relax_step_db increments up to relax_max_db and
/// the first ladder rung with a feasible point wins.
SolveResult solve(const NetworkSnapshot& snap, const AppRequest& request,
                  const SolverConfig& config = {});

/// Seed placements examined before refinement: boresight at the projected
/// POI, azimuth bisectors between cyclically adjacent neighbors, a uniform
/// fan padding to |stations| starts, plus one start near the serving cell.
std::vector<Placement> initial_placements(const NetworkSnapshot& snap,
                                          const AppRequest& request);

}  // namespace dronecell
