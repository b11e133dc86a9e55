#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "dronecell/geometry.hpp"

namespace dronecell {

/// Regulatory ceiling for handset-class uplinks.
inline constexpr double kMaxUeTxPowerDbm = 23.0;

/// Piecewise exponent table entry for altitude-dependent propagation.
struct AlphaBand {
  double altitude_m = 0.0;
  double alpha = 2.0;
};

/// Log-distance air-to-ground path loss:
///   L(d) = alpha * 10 * log10(d) + beta + X_sigma
/// with d clamped to >= 1 m so beta is the 1 m intercept. The shadowing
/// term X is 0 when sigma_db is 0, otherwise a deterministic normal draw
/// keyed on (shadowing_seed, link key).
struct PathLossParams {
  double alpha = 2.2;
  double beta_db = 38.0;
  double sigma_db = 0.0;
  std::optional<std::uint64_t> shadowing_seed;
  /// Optional altitude bands, sorted ascending by altitude_m. When empty
  /// the flat `alpha` applies at every height.
  std::vector<AlphaBand> alpha_bands;
};

enum class AntennaKind { directional, omni };

/// Quadratic-rolloff pattern with a bounded backlobe:
///   G(offset) = forward_gain - min(12 * (offset/hpbw)^2, backlobe_floor)
/// An omni pattern returns forward_gain at every offset.
struct AntennaPattern {
  AntennaKind kind = AntennaKind::directional;
  double forward_gain_dbi = 6.0;
  double hpbw_rad = kPi / 2.0;
  double backlobe_floor_db = 20.0;
};

struct NoiseModel {
  double psd_dbm_hz = -174.0;
  double noise_figure_db = 0.0;
};

/// 10*log10(linear). Throws std::domain_error for linear <= 0.
double to_db(double linear);
double from_db(double db) noexcept;
double dbm_to_watts(double dbm) noexcept;
/// Throws std::domain_error for watts <= 0.
double watts_to_dbm(double watts);

namespace detail {
/// to_db with to_db(0) = -infinity; negative input still throws.
double to_db_lenient(double linear);
/// Deterministic N(0,1) draw keyed on (seed, key). Counter-based, so the
/// value is independent of evaluation order and thread scheduling.
double unit_normal(std::uint64_t seed, std::uint64_t key) noexcept;
/// Deterministic uniform draw in [0, 1) keyed on (seed, key).
double uniform01(std::uint64_t seed, std::uint64_t key) noexcept;
std::uint64_t fnv1a64(const char* data, std::size_t n) noexcept;
}  // namespace detail

/// Exponent at the given altitude: linear interpolation across the band
/// table, clamped at the ends; the flat alpha when the table is empty or
/// the altitude is NaN.
double effective_alpha(const PathLossParams& p, double altitude_m);

/// The X_sigma draw for one link, in dB. A missing seed behaves as seed 0.
double shadowing_db(const PathLossParams& p, std::uint64_t link_key);

double path_loss_db(double distance_m, const PathLossParams& p,
                    double altitude_m = std::numeric_limits<double>::quiet_NaN(),
                    std::uint64_t link_key = 0);

double antenna_gain_dbi(const AntennaPattern& pattern, double offset_rad);

/// Uplink RX power at a base station:
///   P = tx - L_pathloss(|uav - bs|) + G(offset between dir and the ray uav->bs)
/// Throws std::invalid_argument when tx exceeds kMaxUeTxPowerDbm or the
/// two endpoints coincide.
double received_power_dbm(double tx_power_dbm, const Location3D& uav, const Direction& dir,
                          const Location3D& bs, const PathLossParams& pl,
                          const AntennaPattern& ant, std::uint64_t link_key = 0);

/// psd + noise_figure + 10*log10(bandwidth). Throws for bandwidth <= 0.
double noise_power_dbm(const NoiseModel& model, double bandwidth_hz);

}  // namespace dronecell
