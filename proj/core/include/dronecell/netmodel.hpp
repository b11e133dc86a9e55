#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dronecell/geometry.hpp"
#include "dronecell/radio.hpp"

namespace dronecell {

struct BaseStation {
  std::string id;
  Location3D location;
  double bandwidth_hz = 0.0;
  PathLossParams pathloss;
};

/// Slow-timescale cell averages exposed over the RAN analytics interface.
/// Exactly one of rx_psd_dbm_hz / agg_power_dbm is set.
struct CellState {
  double load = 0.0;  ///< average number of attached active UEs
  std::optional<double> rx_psd_dbm_hz;  ///< uplink power-control target density
  std::optional<double> agg_power_dbm;  ///< explicit aggregate uplink power
};

/// Immutable view of the network between two control decisions.
struct NetworkSnapshot {
  std::vector<BaseStation> stations;
  std::vector<CellState> states;  ///< parallel to stations
  NoiseModel noise;
  double uav_tx_power_dbm = kMaxUeTxPowerDbm;
  AntennaPattern uav_antenna;
  /// Load level at which a cell's aggregate uplink power saturates.
  double w_full = 10.0;

  std::size_t size() const { return stations.size(); }
  /// Throws std::invalid_argument for an unknown id.
  std::size_t index_of(std::string_view id) const;
};

/// What the streaming application asks of the drone placement.
struct AppRequest {
  Location3D poi;
  double dis_max_m = 0.0;      ///< hover distance bound around the POI
  double rate_app_bps = 0.0;   ///< required video bitrate
  double min_altitude_m = 0.0;
  double sinr_min_db = 0.0;    ///< floor for the neighboring cells
};

FeasibleRegion feasible_region(const AppRequest& r);

/// Station with the strongest boresight uplink at `at` (equal antenna gain
/// across candidates, so path loss plus shadowing discriminates). Ties go
/// to the lexicographically lowest id.
std::size_t select_serving_index(const NetworkSnapshot& snap, const Location3D& at);
std::string select_serving_cell(const NetworkSnapshot& snap, const Location3D& at);

/// Average per-UE share of the serving band, B / (load + uav_present).
/// An empty denominator yields the whole band.
double avg_bandwidth_share_hz(const NetworkSnapshot& snap, std::size_t serving,
                              bool uav_present);

/// Shannon inverse: the linear SINR needed to carry rate_app over share.
double qos_to_sinr(double rate_app_bps, double share_hz);

/// Aggregate uplink power of a cell. Explicit agg_power passes through;
/// otherwise the PSD is widened to the band and scaled in the linear
/// domain by min(load / w_full, 1). Zero load yields -infinity dBm.
double cell_agg_power_dbm(const CellState& state, double bandwidth_hz, double w_full = 10.0);

/// UAV link quality over its own share; interference-free by construction
/// since ground traffic in the serving cell is scheduled apart.
double sinr_uav(const NetworkSnapshot& snap, std::size_t serving, const Location3D& l,
                const Direction& dir);

/// Neighbor cell SINR under drone interference, in the linear domain.
double sinr_neighbor(const NetworkSnapshot& snap, std::size_t neighbor, std::size_t serving,
                     const Location3D& l, const Direction& dir);

/// Constraint slacks, feasible when all are >= 0 (closed sets).
struct ConstraintReport {
  double neighbor_sinr_slack_db = 0.0;  ///< min over loaded neighbors
  double uav_sinr_slack_db = 0.0;
  double distance_slack_m = 0.0;
  double altitude_slack_m = 0.0;
  bool feasible = false;
};

/// One full evaluation of a candidate (location, direction).
struct PointEvaluation {
  double objective_bps = 0.0;
  double uav_capacity_bps = 0.0;
  /// Per-station capacity terms; the serving slot holds the UAV term.
  std::vector<double> per_station_bps;
  double uav_sinr_db = 0.0;           ///< -inf when the UAV signal is zero
  double min_neighbor_sinr_db = 0.0;  ///< +inf when no loaded neighbor exists
  ConstraintReport constraints;
};

/// Aggregate network capacity: the UAV rate over its share plus every
/// loaded neighbor's full-band capacity under the drone's interference.
double evaluate_objective(const NetworkSnapshot& snap, std::size_t serving,
                          const Location3D& l, const Direction& dir);

ConstraintReport evaluate_constraints(const NetworkSnapshot& snap, std::size_t serving,
                                      const AppRequest& request, const Location3D& l,
                                      const Direction& dir);

PointEvaluation evaluate_point(const NetworkSnapshot& snap, std::size_t serving,
                               const AppRequest& request, const Location3D& l,
                               const Direction& dir);

/// dB form of the UAV SINR requirement implied by the app rate over the
/// serving share. -inf when the rate is 0, +inf when the rate overflows
/// what any SINR could carry.
double qos_sinr_threshold_db(const NetworkSnapshot& snap, std::size_t serving,
                             const AppRequest& request);

}  // namespace dronecell
