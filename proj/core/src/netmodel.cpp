#include "dronecell/netmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dronecell {

namespace {

constexpr double kInvLn2 = 1.4426950408889634074;  // 1 / ln(2)

std::uint64_t station_key(const BaseStation& bs) {
  return detail::fnv1a64(bs.id.data(), bs.id.size());
}

/// Shannon capacity of a band at a linear SINR. log1p keeps precision at
/// tiny SINR values.
double capacity_bps(double bandwidth_hz, double sinr_linear) {
  return bandwidth_hz * std::log1p(sinr_linear) * kInvLn2;
}

}  // namespace

std::size_t NetworkSnapshot::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < stations.size(); ++i) {
    if (stations[i].id == id) return i;
  }
  throw std::invalid_argument("NetworkSnapshot: unknown station id");
}

FeasibleRegion feasible_region(const AppRequest& r) {
  return FeasibleRegion{r.poi, r.dis_max_m, r.min_altitude_m};
}

std::size_t select_serving_index(const NetworkSnapshot& snap, const Location3D& at) {
  if (snap.stations.empty()) throw std::invalid_argument("select_serving: empty snapshot");
  std::size_t best = 0;
  double best_rx = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < snap.stations.size(); ++i) {
    const BaseStation& bs = snap.stations[i];
    const double d = distance(at, bs.location);
    const double rx = snap.uav_tx_power_dbm -
                      path_loss_db(d, bs.pathloss, at.z, station_key(bs));
    if (rx > best_rx || (rx == best_rx && bs.id < snap.stations[best].id)) {
      best = i;
      best_rx = rx;
    }
  }
  return best;
}

std::string select_serving_cell(const NetworkSnapshot& snap, const Location3D& at) {
  return snap.stations[select_serving_index(snap, at)].id;
}

double avg_bandwidth_share_hz(const NetworkSnapshot& snap, std::size_t serving,
                              bool uav_present) {
  const double band = snap.stations[serving].bandwidth_hz;
  const double denom = snap.states[serving].load + (uav_present ? 1.0 : 0.0);
  return denom > 0.0 ? band / denom : band;
}

double qos_to_sinr(double rate_app_bps, double share_hz) {
  if (!(share_hz > 0.0)) throw std::domain_error("qos_to_sinr: non-positive share");
  if (rate_app_bps < 0.0) throw std::domain_error("qos_to_sinr: negative rate");
  return std::exp2(rate_app_bps / share_hz) - 1.0;
}

double cell_agg_power_dbm(const CellState& state, double bandwidth_hz, double w_full) {
  if (state.agg_power_dbm) return *state.agg_power_dbm;
  if (!state.rx_psd_dbm_hz) {
    throw std::invalid_argument("cell_agg_power_dbm: neither psd nor aggregate power set");
  }
  if (!(w_full > 0.0)) throw std::domain_error("cell_agg_power_dbm: non-positive w_full");
  if (state.load <= 0.0) return -std::numeric_limits<double>::infinity();
  const double fill = std::min(state.load / w_full, 1.0);
  return *state.rx_psd_dbm_hz + 10.0 * std::log10(bandwidth_hz) + 10.0 * std::log10(fill);
}

double sinr_uav(const NetworkSnapshot& snap, std::size_t serving, const Location3D& l,
                const Direction& dir) {
  const BaseStation& bs = snap.stations[serving];
  const double p = received_power_dbm(snap.uav_tx_power_dbm, l, dir, bs.location,
                                      bs.pathloss, snap.uav_antenna, station_key(bs));
  const double share = avg_bandwidth_share_hz(snap, serving, true);
  return from_db(p - noise_power_dbm(snap.noise, share));
}

double sinr_neighbor(const NetworkSnapshot& snap, std::size_t neighbor, std::size_t serving,
                     const Location3D& l, const Direction& dir) {
  if (neighbor == serving) throw std::invalid_argument("sinr_neighbor: serving cell given");
  const BaseStation& bs = snap.stations[neighbor];
  const double agg_lin =
      from_db(cell_agg_power_dbm(snap.states[neighbor], bs.bandwidth_hz, snap.w_full));
  const double noise_lin = from_db(noise_power_dbm(snap.noise, bs.bandwidth_hz));
  const double interf_lin =
      from_db(received_power_dbm(snap.uav_tx_power_dbm, l, dir, bs.location, bs.pathloss,
                                 snap.uav_antenna, station_key(bs)));
  return agg_lin / (noise_lin + interf_lin);
}

namespace {

/// Single code path for the objective, the per-cell breakdown and the
/// slack report; request may be null when only the objective is needed.
PointEvaluation eval_impl(const NetworkSnapshot& snap, std::size_t serving,
                          const AppRequest* request, const Location3D& l,
                          const Direction& dir) {
  PointEvaluation ev;
  ev.per_station_bps.assign(snap.size(), 0.0);

  const double s_u = sinr_uav(snap, serving, l, dir);
  const double share = avg_bandwidth_share_hz(snap, serving, true);
  ev.uav_capacity_bps = capacity_bps(share, s_u);
  ev.per_station_bps[serving] = ev.uav_capacity_bps;
  ev.uav_sinr_db = detail::to_db_lenient(s_u);

  double total = ev.uav_capacity_bps;
  double min_nb_db = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < snap.size(); ++j) {
    if (j == serving) continue;
    if (snap.states[j].load <= 0.0) continue;  // empty cells carry no traffic
    const double s_j = sinr_neighbor(snap, j, serving, l, dir);
    const double cap = capacity_bps(snap.stations[j].bandwidth_hz, s_j);
    ev.per_station_bps[j] = cap;
    total += cap;
    min_nb_db = std::min(min_nb_db, detail::to_db_lenient(s_j));
  }
  ev.objective_bps = total;
  ev.min_neighbor_sinr_db = min_nb_db;

  if (request != nullptr) {
    ConstraintReport& rep = ev.constraints;
    rep.neighbor_sinr_slack_db = min_nb_db - request->sinr_min_db;
    const double t_lin = qos_to_sinr(request->rate_app_bps, share);
    if (t_lin == 0.0) {
      rep.uav_sinr_slack_db = std::numeric_limits<double>::infinity();
    } else {
      rep.uav_sinr_slack_db = ev.uav_sinr_db - detail::to_db_lenient(t_lin);
    }
    rep.distance_slack_m = request->dis_max_m - distance(l, request->poi);
    rep.altitude_slack_m = l.z - request->min_altitude_m;
    rep.feasible = rep.neighbor_sinr_slack_db >= 0.0 && rep.uav_sinr_slack_db >= 0.0 &&
                   rep.distance_slack_m >= 0.0 && rep.altitude_slack_m >= 0.0;
  }
  return ev;
}

}  // namespace

double evaluate_objective(const NetworkSnapshot& snap, std::size_t serving,
                          const Location3D& l, const Direction& dir) {
  return eval_impl(snap, serving, nullptr, l, dir).objective_bps;
}

ConstraintReport evaluate_constraints(const NetworkSnapshot& snap, std::size_t serving,
                                      const AppRequest& request, const Location3D& l,
                                      const Direction& dir) {
  return eval_impl(snap, serving, &request, l, dir).constraints;
}

PointEvaluation evaluate_point(const NetworkSnapshot& snap, std::size_t serving,
                               const AppRequest& request, const Location3D& l,
                               const Direction& dir) {
  return eval_impl(snap, serving, &request, l, dir);
}

double qos_sinr_threshold_db(const NetworkSnapshot& snap, std::size_t serving,
                             const AppRequest& request) {
  const double share = avg_bandwidth_share_hz(snap, serving, true);
  const double t_lin = qos_to_sinr(request.rate_app_bps, share);
  if (t_lin == 0.0) return -std::numeric_limits<double>::infinity();
  if (std::isinf(t_lin)) return std::numeric_limits<double>::infinity();
  return to_db(t_lin);
}

}  // namespace dronecell
