#pragma once

#include <string>

#include "dronecell/netmodel.hpp"

namespace testutil {

// Single clear cell at the origin. UAV 100 m east facing it gives a 63 dB
// link over the whole 1 MHz band.
inline dronecell::NetworkSnapshot single_cell() {
  dronecell::NetworkSnapshot snap;
  dronecell::BaseStation bs;
  bs.id = "cell0";
  bs.location = {0.0, 0.0, 0.0};
  bs.bandwidth_hz = 1e6;
  bs.pathloss.alpha = 2.0;
  bs.pathloss.beta_db = 40.0;
  bs.pathloss.sigma_db = 0.0;
  snap.stations.push_back(bs);
  snap.states.push_back({0.0, std::nullopt, std::nullopt});
  snap.w_full = 10.0;
  return snap;
}

// Serving cell plus one half-loaded neighbor 1 km east. Every number in
// the frozen expectations below comes from this fixture.
inline dronecell::NetworkSnapshot pair_cells() {
  dronecell::NetworkSnapshot snap;
  dronecell::BaseStation s0;
  s0.id = "s0";
  s0.location = {0.0, 0.0, 0.0};
  s0.bandwidth_hz = 1e6;
  s0.pathloss.alpha = 2.0;
  s0.pathloss.beta_db = 40.0;
  dronecell::BaseStation s1 = s0;
  s1.id = "s1";
  s1.location = {1000.0, 0.0, 30.0};
  s1.bandwidth_hz = 1e7;
  snap.stations = {s0, s1};
  snap.states.push_back({0.0, std::nullopt, std::nullopt});
  snap.states.push_back({5.0, -150.0, std::nullopt});
  snap.w_full = 10.0;
  return snap;
}

inline dronecell::AppRequest basic_request() {
  dronecell::AppRequest r;
  r.poi = {400.0, 0.0, 0.0};
  r.dis_max_m = 152.4;
  r.rate_app_bps = 5e6;
  r.min_altitude_m = 19.812;
  r.sinr_min_db = 0.0;
  return r;
}

inline std::string scenario_path(const char* name) {
  return std::string(DRONECELL_SCENARIO_DIR "/") + name;
}

}  // namespace testutil
