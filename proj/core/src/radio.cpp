#include "dronecell/radio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dronecell {

double to_db(double linear) {
  if (!(linear > 0.0)) throw std::domain_error("to_db: non-positive linear input");
  return 10.0 * std::log10(linear);
}

double from_db(double db) noexcept { return std::pow(10.0, db / 10.0); }

double dbm_to_watts(double dbm) noexcept { return from_db(dbm) * 1e-3; }

double watts_to_dbm(double watts) {
  if (!(watts > 0.0)) throw std::domain_error("watts_to_dbm: non-positive power");
  return 10.0 * std::log10(watts * 1e3);
}

namespace detail {

double to_db_lenient(double linear) {
  if (linear == 0.0) return -std::numeric_limits<double>::infinity();
  return to_db(linear);
}

namespace {
std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}
}  // namespace

double uniform01(std::uint64_t seed, std::uint64_t key) noexcept {
  const std::uint64_t bits = mix64(seed * 0x9e3779b97f4a7c15ULL + key + 1);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double unit_normal(std::uint64_t seed, std::uint64_t key) noexcept {
  const std::uint64_t a = mix64(seed * 0x9e3779b97f4a7c15ULL + key + 1);
  const std::uint64_t b = mix64(a ^ 0xbf58476d1ce4e5b9ULL);
  // Box-Muller; u1 is kept strictly positive so the log is finite.
  const double u1 = (static_cast<double>(a >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::uint64_t fnv1a64(const char* data, std::size_t n) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

double effective_alpha(const PathLossParams& p, double altitude_m) {
  if (p.alpha_bands.empty() || std::isnan(altitude_m)) return p.alpha;
  const auto& bands = p.alpha_bands;
  if (altitude_m <= bands.front().altitude_m) return bands.front().alpha;
  if (altitude_m >= bands.back().altitude_m) return bands.back().alpha;
  for (std::size_t i = 1; i < bands.size(); ++i) {
    if (altitude_m <= bands[i].altitude_m) {
      const double span = bands[i].altitude_m - bands[i - 1].altitude_m;
      const double t = span > 0.0 ? (altitude_m - bands[i - 1].altitude_m) / span : 1.0;
      return bands[i - 1].alpha + t * (bands[i].alpha - bands[i - 1].alpha);
    }
  }
  return bands.back().alpha;
}

double shadowing_db(const PathLossParams& p, std::uint64_t link_key) {
  if (p.sigma_db == 0.0) return 0.0;
  const std::uint64_t seed = p.shadowing_seed.value_or(0);
  return p.sigma_db * detail::unit_normal(seed, link_key);
}

double path_loss_db(double distance_m, const PathLossParams& p, double altitude_m,
                    std::uint64_t link_key) {
  const double d = std::max(distance_m, 1.0);
  const double alpha = effective_alpha(p, altitude_m);
  return alpha * 10.0 * std::log10(d) + p.beta_db + shadowing_db(p, link_key);
}

double antenna_gain_dbi(const AntennaPattern& pattern, double offset_rad) {
  if (pattern.kind == AntennaKind::omni) return pattern.forward_gain_dbi;
  const double ratio = offset_rad / pattern.hpbw_rad;
  const double rolloff = std::min(12.0 * ratio * ratio, pattern.backlobe_floor_db);
  return pattern.forward_gain_dbi - rolloff;
}

double received_power_dbm(double tx_power_dbm, const Location3D& uav, const Direction& dir,
                          const Location3D& bs, const PathLossParams& pl,
                          const AntennaPattern& ant, std::uint64_t link_key) {
  if (tx_power_dbm > kMaxUeTxPowerDbm) {
    throw std::invalid_argument("received_power_dbm: tx power exceeds the UE power class");
  }
  const double d = distance(uav, bs);
  if (d == 0.0) throw std::invalid_argument("received_power_dbm: coincident endpoints");
  const double offset = angular_offset(dir, direction_to(uav, bs));
  return tx_power_dbm - path_loss_db(d, pl, uav.z, link_key) + antenna_gain_dbi(ant, offset);
}

double noise_power_dbm(const NoiseModel& model, double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0)) throw std::domain_error("noise_power_dbm: non-positive bandwidth");
  return model.psd_dbm_hz + model.noise_figure_db + 10.0 * std::log10(bandwidth_hz);
}

}  // namespace dronecell
