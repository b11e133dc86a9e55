#include "dronecell/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace dronecell {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kMaxEvaluations = 100'000'000;

struct GridBest {
  double objective = -kInf;
  std::uint64_t index = 0;
  Placement placement;
  bool valid = false;

  void offer(double obj, std::uint64_t idx, const Placement& p) {
    if (!valid || obj > objective || (obj == objective && idx < index)) {
      objective = obj;
      index = idx;
      placement = p;
      valid = true;
    }
  }

  void merge(const GridBest& other) {
    if (other.valid) offer(other.objective, other.index, other.placement);
  }
};

/// Per-thread scan state: best point whose minimal feasibility rung is
/// exactly r, plus the best point ignoring constraints entirely.
struct ScanAccum {
  std::vector<GridBest> by_rung;
  GridBest any;
};

}  // namespace

std::vector<Location3D> oracle_grid_locations(const AppRequest& request,
                                              int points_per_axis) {
  if (points_per_axis < 1) throw std::invalid_argument("oracle: points_per_axis < 1");
  const FeasibleRegion region = feasible_region(request);
  const Location3D& c = region.center;
  const double r = region.radius;
  const double z_lo = std::max(region.min_altitude, c.z - r);
  const double z_hi = c.z + r;
  if (z_hi < z_lo) throw std::invalid_argument("oracle: empty feasible region");

  auto axis = [&](double lo, double hi, int k) {
    if (points_per_axis == 1) return 0.5 * (lo + hi);
    return lo + (hi - lo) * static_cast<double>(k) /
                    static_cast<double>(points_per_axis - 1);
  };

  std::vector<Location3D> pts;
  pts.reserve(static_cast<std::size_t>(points_per_axis) * points_per_axis *
              points_per_axis);
  for (int ix = 0; ix < points_per_axis; ++ix) {
    for (int iy = 0; iy < points_per_axis; ++iy) {
      for (int iz = 0; iz < points_per_axis; ++iz) {
        const Location3D raw{axis(c.x - r, c.x + r, ix), axis(c.y - r, c.y + r, iy),
                             axis(z_lo, z_hi, iz)};
        pts.push_back(project_feasible(raw, region));
      }
    }
  }
  std::sort(pts.begin(), pts.end(), [](const Location3D& a, const Location3D& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Location3D& a, const Location3D& b) {
                          return a.x == b.x && a.y == b.y && a.z == b.z;
                        }),
            pts.end());
  return pts;
}

OracleResult oracle_solve(const NetworkSnapshot& snap, const AppRequest& request,
                          const OracleConfig& config) {
  const auto t_begin = std::chrono::steady_clock::now();
  if (snap.stations.empty()) throw std::invalid_argument("oracle: empty snapshot");
  if (config.azimuth_samples < 1 || config.polar_samples < 1) {
    throw std::invalid_argument("oracle: non-positive direction sampling");
  }

  const FeasibleRegion region = feasible_region(request);
  const Location3D p0 = project_feasible(request.poi, region);
  const std::size_t serving = select_serving_index(snap, p0);

  const std::vector<Location3D> locs = oracle_grid_locations(request, config.points_per_axis);
  const int n_az = config.azimuth_samples;
  const int n_pol = config.polar_samples;
  const std::uint64_t total = static_cast<std::uint64_t>(locs.size()) *
                              static_cast<std::uint64_t>(n_az) *
                              static_cast<std::uint64_t>(n_pol);
  if (total > kMaxEvaluations) {
    throw std::invalid_argument("oracle: grid exceeds the evaluation budget");
  }

  std::vector<Direction> dirs;
  dirs.reserve(static_cast<std::size_t>(n_az) * n_pol);
  for (int ia = 0; ia < n_az; ++ia) {
    const double azi = kTwoPi * static_cast<double>(ia) / static_cast<double>(n_az);
    for (int ip = 0; ip < n_pol; ++ip) {
      const double pol = n_pol == 1 ? 0.5 * kPi
                                    : kPi * static_cast<double>(ip) /
                                          static_cast<double>(n_pol - 1);
      dirs.push_back(Direction{wrap_azimuth(azi), pol});
    }
  }

  const int max_rung =
      static_cast<int>(std::ceil(config.relax_max_db / config.relax_step_db));

  unsigned n_threads = config.threads > 0
                           ? static_cast<unsigned>(config.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, std::max<std::size_t>(locs.size(), 1));

  std::vector<ScanAccum> accums(n_threads);
  for (ScanAccum& a : accums) a.by_rung.resize(static_cast<std::size_t>(max_rung) + 1);

  auto scan = [&](unsigned tid) {
    ScanAccum& acc = accums[tid];
    for (std::size_t li = tid; li < locs.size(); li += n_threads) {
      const Location3D& l = locs[li];
      for (std::size_t di = 0; di < dirs.size(); ++di) {
        const std::uint64_t idx = static_cast<std::uint64_t>(li) * dirs.size() + di;
        PointEvaluation ev;
        try {
          ev = evaluate_point(snap, serving, request, l, dirs[di]);
        } catch (const std::invalid_argument&) {
          continue;
        }
        const Placement p{l, dirs[di]};
        acc.any.offer(ev.objective_bps, idx, p);
        const ConstraintReport& rep = ev.constraints;
        if (rep.uav_sinr_slack_db < 0.0 || rep.distance_slack_m < 0.0 ||
            rep.altitude_slack_m < 0.0) {
          continue;  // these constraints never relax
        }
        int rung = 0;
        if (rep.neighbor_sinr_slack_db < 0.0) {
          const double need = -rep.neighbor_sinr_slack_db / config.relax_step_db;
          if (!(need <= static_cast<double>(max_rung))) continue;
          rung = static_cast<int>(std::ceil(need));
          if (rung > max_rung) continue;
        }
        acc.by_rung[static_cast<std::size_t>(rung)].offer(ev.objective_bps, idx, p);
      }
    }
  };

  if (n_threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(scan, t);
    for (std::thread& th : pool) th.join();
  }

  std::vector<GridBest> by_rung(static_cast<std::size_t>(max_rung) + 1);
  GridBest any;
  for (const ScanAccum& a : accums) {
    any.merge(a.any);
    for (std::size_t r = 0; r < by_rung.size(); ++r) by_rung[r].merge(a.by_rung[r]);
  }

  OracleResult result;
  result.serving = serving;
  result.evaluations = total;

  GridBest upto;  // best over all rungs <= r, folded incrementally
  bool found = false;
  for (int r = 0; r <= max_rung && !found; ++r) {
    upto.merge(by_rung[static_cast<std::size_t>(r)]);
    if (upto.valid) {
      result.placement = upto.placement;
      result.objective_bps = upto.objective;
      result.relaxation_db = std::min(config.relax_step_db * r, config.relax_max_db);
      result.feasible = true;
      found = true;
    }
  }
  if (!found) {
    if (!any.valid) throw std::runtime_error("oracle: no evaluable grid point");
    result.placement = any.placement;
    result.objective_bps = any.objective;
    result.relaxation_db = config.relax_max_db;
    result.feasible = false;
  }
  result.evaluation = evaluate_point(snap, serving, request, result.placement.location,
                                     result.placement.direction);
  result.solve_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();
  return result;
}

}  // namespace dronecell
