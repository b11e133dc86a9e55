#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "dronecell/netmodel.hpp"

namespace dronecell {

/// Scenario file problem: unknown key, missing field, bad value. The
/// message names the offending key. Maps to the validation exit code.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadChange {
  double time_s = 0.0;
  std::string station;
  double load = 0.0;  // absolute new load, not a delta
};

struct LoopConfig {
  double horizon_s = 60.0;
  double interval_s = 10.0;  // control tick spacing; first tick at t = 0
  double speed_mps = 20.0;   // cruise speed toward the latest target
};

struct Scenario {
  std::string name;
  NetworkSnapshot network;  // canonical, meters
  AppRequest request;
  LoopConfig loop;
  std::vector<LoadChange> events;
};

/// Parse and validate scenario JSON. Files declare "units": "m" or "ft";
/// every distance-like field is converted to meters on load. Unknown keys
/// are rejected, missing optional fields take model defaults.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical serialization: meters, fixed key order, 9 significant digits.
/// Two scenarios with equal canonical text behave identically.
std::string scenario_to_json(const Scenario& s);

/// FNV-1a of the canonical JSON, as 16 hex digits.
std::string config_hash(const Scenario& s);

/// Snapshot with every event at time <= t applied.
NetworkSnapshot snapshot_at(const Scenario& s, double time_s);
void apply_event(NetworkSnapshot& snap, const LoadChange& change);

/// Ground POIs for sweep comparisons: uniform over the convex hull of the
/// station layout (bounding box when the hull is degenerate), z = 0.
/// Counter-based sampling, stable under count changes.
std::vector<Location3D> sample_pois(const Scenario& s, int count, std::uint64_t seed);

}  // namespace dronecell
