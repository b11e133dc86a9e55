#include "dronecell/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dronecell {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kViolationCap = 1e6;     // dB, keeps squared hinges finite
constexpr double kInteriorMarginDb = 0.02;  // converge strictly inside the SINR box

double hinge(double slack) { return slack < 0.0 ? std::min(-slack, kViolationCap) : 0.0; }

using Coords = std::array<double, 5>;  // x, y, z, azimuth, polar

struct Canon {
  Location3D l;
  Direction d;
};

Canon canonicalize(const Coords& x, const FeasibleRegion& region) {
  Canon c;
  c.l = project_feasible({x[0], x[1], x[2]}, region);
  c.d = direction_from_vector(to_unit_vector(x[3], x[4]));
  return c;
}

Coords to_coords(const Placement& p) {
  return {p.location.x, p.location.y, p.location.z, p.direction.azimuth, p.direction.polar};
}

/// Best real-feasibility point seen anywhere during a search, so an
/// exterior-penalty landing just outside the box never loses a feasible
/// point the simplex walked through.
struct BestFeasible {
  bool found = false;
  double objective = -kInf;
  Placement placement;

  void offer(const Placement& p, double objective_bps, bool feasible) {
    if (feasible && objective_bps > objective) {
      found = true;
      objective = objective_bps;
      placement = p;
    }
  }
};

struct SearchContext {
  const NetworkSnapshot& snap;
  std::size_t serving;
  const AppRequest& request;  // original thresholds
  FeasibleRegion region;
  double rung_db;             // current sinr_min relaxation
  double weight;
  BestFeasible* tracker = nullptr;

  /// Relaxed-threshold slacks for the pair of SINR constraints.
  std::pair<double, double> sinr_slacks(const ConstraintReport& rep) const {
    return {rep.neighbor_sinr_slack_db + rung_db, rep.uav_sinr_slack_db};
  }

  bool feasible_at_rung(const ConstraintReport& rep) const {
    auto [nb, uav] = sinr_slacks(rep);
    return nb >= 0.0 && uav >= 0.0 && rep.distance_slack_m >= 0.0 &&
           rep.altitude_slack_m >= 0.0;
  }

  double penalized(const Coords& x) const {
    const Canon c = canonicalize(x, region);
    PointEvaluation ev;
    try {
      ev = evaluate_point(snap, serving, request, c.l, c.d);
    } catch (const std::invalid_argument&) {
      return kInf;  // degenerate geometry, e.g. sitting exactly on a mast
    }
    if (tracker != nullptr) {
      tracker->offer({c.l, c.d}, ev.objective_bps, feasible_at_rung(ev.constraints));
    }
    auto [nb, uav] = sinr_slacks(ev.constraints);
    const double v1 = hinge(nb - kInteriorMarginDb);
    const double v2 = hinge(uav - kInteriorMarginDb);
    return -ev.objective_bps + weight * (v1 * v1 + v2 * v2);
  }
};

struct NmResult {
  Coords x;
  double f = kInf;
};

/// Nelder-Mead on the raw 5-vector; canonicalization inside the callback
/// makes every simplex point meaningful, so no bound handling is needed.
template <typename F>
NmResult nelder_mead(F&& f, const Coords& x0, const Coords& steps, int max_iter,
                     double xtol, double ftol, double spatial_scale) {
  constexpr int kDim = 5;
  constexpr int kVerts = kDim + 1;
  std::array<Coords, kVerts> v;
  std::array<double, kVerts> fv;
  v[0] = x0;
  for (int i = 0; i < kDim; ++i) {
    v[i + 1] = x0;
    v[i + 1][i] += steps[i];
  }
  for (int i = 0; i < kVerts; ++i) fv[i] = f(v[i]);

  std::array<int, kVerts> ord;
  auto sort_order = [&] {
    for (int i = 0; i < kVerts; ++i) ord[i] = i;
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return fv[a] < fv[b]; });
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    sort_order();
    const int best = ord[0];
    const int worst = ord[kVerts - 1];
    const int second_worst = ord[kVerts - 2];

    double size = 0.0;
    for (int i = 1; i < kVerts; ++i) {
      for (int d = 0; d < kDim; ++d) {
        const double scale = d < 3 ? spatial_scale : kPi;
        size = std::max(size, std::abs(v[ord[i]][d] - v[best][d]) / scale);
      }
    }
    const double spread = fv[worst] - fv[best];
    if (size <= xtol || spread <= ftol * (std::abs(fv[best]) + 1.0)) break;

    Coords centroid{};
    for (int i = 0; i < kVerts; ++i) {
      if (i == worst) continue;
      for (int d = 0; d < kDim; ++d) centroid[d] += v[i][d];
    }
    for (int d = 0; d < kDim; ++d) centroid[d] /= kDim;

    auto blend = [&](double t) {
      Coords r;
      for (int d = 0; d < kDim; ++d) r[d] = centroid[d] + t * (centroid[d] - v[worst][d]);
      return r;
    };

    const Coords xr = blend(1.0);
    const double fr = f(xr);
    if (fr < fv[best]) {
      const Coords xe = blend(2.0);
      const double fe = f(xe);
      if (fe < fr) {
        v[worst] = xe;
        fv[worst] = fe;
      } else {
        v[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second_worst]) {
      v[worst] = xr;
      fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    const Coords xc = blend(outside ? 0.5 : -0.5);
    const double fc = f(xc);
    if (fc < (outside ? fr : fv[worst])) {
      v[worst] = xc;
      fv[worst] = fc;
      continue;
    }
    for (int i = 0; i < kVerts; ++i) {  // shrink toward the best vertex
      if (i == best) continue;
      for (int d = 0; d < kDim; ++d) v[i][d] = v[best][d] + 0.5 * (v[i][d] - v[best][d]);
      fv[i] = f(v[i]);
    }
  }
  sort_order();
  return {v[ord[0]], fv[ord[0]]};
}

std::vector<Direction> sweep_directions(const Direction& center, double span_rad, int samples);

/// Sorted azimuths of loaded interferers as seen from a vantage point.
std::vector<double> loaded_neighbor_azimuths(const NetworkSnapshot& snap,
                                             std::size_t serving, const Location3D& at) {
  std::vector<double> az;
  for (std::size_t j = 0; j < snap.size(); ++j) {
    if (j == serving || snap.states[j].load <= 0.0) continue;
    const Location3D& b = snap.stations[j].location;
    if (b.x == at.x && b.y == at.y) continue;  // no horizontal bearing
    az.push_back(std::atan2(b.y - at.y, b.x - at.x));
  }
  std::sort(az.begin(), az.end());
  return az;
}

}  // namespace

double penalized_objective(const NetworkSnapshot& snap, std::size_t serving,
                           const AppRequest& request, const Location3D& l,
                           const Direction& dir, double penalty_weight) {
  const ConstraintReport rep = evaluate_constraints(snap, serving, request, l, dir);
  const double obj = evaluate_objective(snap, serving, l, dir);
  const double v1 = hinge(rep.neighbor_sinr_slack_db);
  const double v2 = hinge(rep.uav_sinr_slack_db);
  return -obj + penalty_weight * (v1 * v1 + v2 * v2);
}

std::vector<Placement> initial_placements(const NetworkSnapshot& snap,
                                          const AppRequest& request) {
  const FeasibleRegion region = feasible_region(request);
  const Location3D p0 = project_feasible(request.poi, region);
  const std::size_t serving = select_serving_index(snap, p0);
  const Direction bore = direction_to(p0, snap.stations[serving].location);

  std::vector<Placement> starts;
  starts.push_back({p0, bore});

  const std::vector<double> az = loaded_neighbor_azimuths(snap, serving, p0);
  for (std::size_t i = 0; i < az.size(); ++i) {
    // bisector of the cyclically adjacent pair; a lone neighbor yields the
    // direction facing away from it
    const double a = az[i];
    const double b = az[(i + 1) % az.size()];
    double gap = b - a;
    if (gap <= 0.0) gap += kTwoPi;
    starts.push_back({p0, Direction{wrap_azimuth(a + 0.5 * gap), bore.polar}});
  }
  const std::size_t target = std::max<std::size_t>(snap.size(), starts.size());
  std::size_t pad = 0;
  const std::size_t missing = target - starts.size();
  while (starts.size() < target) {
    const double a = bore.azimuth + kTwoPi * static_cast<double>(++pad) /
                                        static_cast<double>(missing + 1);
    starts.push_back({p0, Direction{wrap_azimuth(a), bore.polar}});
  }

  const Location3D perch = nearest_feasible_point(snap.stations[serving].location, region, 1.0);
  starts.push_back({perch, direction_to(perch, snap.stations[serving].location)});
  return starts;
}

namespace {

std::vector<Direction> sweep_directions(const Direction& center, double span_rad, int samples) {
  std::vector<Direction> out;
  out.reserve(static_cast<std::size_t>(samples));
  if (samples == 1) {
    out.push_back(center);
    return out;
  }
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(samples - 1) - 0.5;
    out.push_back(Direction{wrap_azimuth(center.azimuth + span_rad * t), center.polar});
  }
  return out;
}

struct Candidate {
  Placement placement;
  double objective = -kInf;
  bool feasible = false;
};

}  // namespace

SolveResult solve(const NetworkSnapshot& snap, const AppRequest& request,
                  const SolverConfig& config) {
  const auto t_begin = std::chrono::steady_clock::now();
  if (snap.stations.empty()) throw std::invalid_argument("solve: empty snapshot");
  if (snap.stations.size() != snap.states.size()) {
    throw std::invalid_argument("solve: station/state size mismatch");
  }

  const FeasibleRegion region = feasible_region(request);
  const Location3D p0 = project_feasible(request.poi, region);
  const std::size_t serving = select_serving_index(snap, p0);
  const std::vector<Placement> starts = initial_placements(snap, request);

  // Cheap direct candidates: the raw starts plus full sweeps at the two
  // anchor locations. Folding these in makes the result at least as good
  // as any fixed-placement policy built from the same anchors.
  std::vector<Placement> direct = starts;
  const Direction bore0 = direction_to(p0, snap.stations[serving].location);
  const Location3D perch = starts.back().location;
  const Direction bore_p = direction_to(perch, snap.stations[serving].location);
  for (const Direction& d : sweep_directions(bore0, kPi, 19)) direct.push_back({p0, d});
  for (const Direction& d : sweep_directions(bore_p, kPi, 19)) direct.push_back({perch, d});
  for (const Direction& d : sweep_directions(bore0, kTwoPi, 19)) direct.push_back({p0, d});
  for (const Direction& d : sweep_directions(bore_p, kTwoPi, 19)) direct.push_back({perch, d});

  const int max_rung = static_cast<int>(std::ceil(config.relax_max_db / config.relax_step_db));

  SolveResult result;
  result.serving = serving;

  const double spatial_step = std::max(0.5, 0.12 * region.radius);
  const Coords steps{spatial_step, spatial_step, 0.5 * spatial_step, 0.3, 0.2};

  for (int rung = 0; rung <= max_rung; ++rung) {
    const double rung_db = std::min(config.relax_step_db * rung, config.relax_max_db);
    BestFeasible tracker;
    SearchContext ctx{snap, serving, request, region, rung_db, config.penalty_weight,
                      &tracker};

    std::vector<Candidate> candidates;
    auto add_candidate = [&](const Placement& p) {
      PointEvaluation ev;
      try {
        ev = evaluate_point(snap, serving, request, p.location, p.direction);
      } catch (const std::invalid_argument&) {
        return;
      }
      candidates.push_back({p, ev.objective_bps, ctx.feasible_at_rung(ev.constraints)});
    };

    for (const Placement& p : direct) add_candidate(p);

    int starts_used = 0;
    for (std::size_t si = 0; si < starts.size(); ++si) {
      ++starts_used;
      ctx.weight = config.penalty_weight;
      Coords x = to_coords(starts[si]);
      NmResult best{x, kInf};
      for (int round = 0; round <= config.restarts; ++round) {
        auto fn = [&ctx](const Coords& c) { return ctx.penalized(c); };
        NmResult r = nelder_mead(fn, x, steps, config.max_iterations, config.xtol,
                                 config.ftol, region.radius);
        if (r.f < best.f) best = r;
        const Canon c = canonicalize(r.x, region);
        ConstraintReport rep;
        bool ok = false;
        try {
          rep = evaluate_constraints(snap, serving, request, c.l, c.d);
          ok = ctx.feasible_at_rung(rep);
        } catch (const std::invalid_argument&) {
        }
        if (ok) break;
        ctx.weight *= config.penalty_growth;
        x = r.x;
      }

      for (int hop = 1; hop <= config.basin_hops; ++hop) {
        Coords x_h = best.x;
        for (int d = 0; d < 5; ++d) {
          const std::uint64_t key =
              ((static_cast<std::uint64_t>(si) * 131 + static_cast<std::uint64_t>(rung)) *
                   131 +
               static_cast<std::uint64_t>(hop)) *
                  131 +
              static_cast<std::uint64_t>(d);
          const double u = detail::uniform01(config.rng_seed, key) - 0.5;
          const double mag = (d < 3 ? 0.5 * region.radius : 0.9) / hop;
          x_h[d] += u * 2.0 * mag;
        }
        auto fn = [&ctx](const Coords& c) { return ctx.penalized(c); };
        NmResult r = nelder_mead(fn, x_h, steps, config.max_iterations, config.xtol,
                                 config.ftol, region.radius);
        if (r.f < best.f) best = r;
      }

      const Canon c = canonicalize(best.x, region);
      add_candidate({c.l, c.d});
    }

    if (tracker.found) add_candidate(tracker.placement);

    // Deterministic reduction: best objective wins, earlier candidate on ties.
    long best_idx = -1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!candidates[i].feasible) continue;
      if (best_idx < 0 || candidates[i].objective > candidates[best_idx].objective) {
        best_idx = static_cast<long>(i);
      }
    }

    if (best_idx >= 0 || rung == max_rung) {
      if (best_idx < 0) {
        // Nothing feasible even fully relaxed; report the best effort.
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (best_idx < 0 || candidates[i].objective > candidates[best_idx].objective) {
            best_idx = static_cast<long>(i);
          }
        }
        result.feasible = false;
      } else {
        result.feasible = true;
      }
      const Candidate& win = candidates[static_cast<std::size_t>(best_idx)];
      result.placement = win.placement;
      result.objective_bps = win.objective;
      result.evaluation =
          evaluate_point(snap, serving, request, win.placement.location, win.placement.direction);
      result.relaxation_db = rung_db;
      result.starts_used = starts_used;
      break;
    }
  }

  result.solve_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();
  return result;
}

}  // namespace dronecell
