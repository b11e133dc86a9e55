#include "dronecell/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "detail/format.hpp"
#include "json.hpp"

namespace dronecell {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& ctx, const std::string& what) {
  throw ScenarioError(ctx.empty() ? what : ctx + ": " + what);
}

void check_keys(const json& obj, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& key = it.key();
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }) == allowed.end()) {
      fail(ctx, "unknown key \"" + key + "\"");
    }
  }
}

const json& require(const json& obj, const std::string& ctx, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ctx, std::string("missing required key \"") + key + "\"");
  return *it;
}

double as_num(const json& v, const std::string& ctx, const char* key) {
  if (!v.is_number()) fail(ctx, std::string("key \"") + key + "\" must be a number");
  return v.get<double>();
}

double req_num(const json& obj, const std::string& ctx, const char* key) {
  return as_num(require(obj, ctx, key), ctx, key);
}

double opt_num(const json& obj, const std::string& ctx, const char* key, double fallback) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : as_num(*it, ctx, key);
}

std::string req_str(const json& obj, const std::string& ctx, const char* key) {
  const json& v = require(obj, ctx, key);
  if (!v.is_string()) fail(ctx, std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Location3D req_loc(const json& obj, const std::string& ctx, const char* key, double scale) {
  const json& v = require(obj, ctx, key);
  if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
      !v[2].is_number()) {
    fail(ctx, std::string("key \"") + key + "\" must be an array of 3 numbers");
  }
  return Location3D{v[0].get<double>() * scale, v[1].get<double>() * scale,
                    v[2].get<double>() * scale};
}

PathLossParams parse_pathloss(const json& obj, const std::string& ctx, double scale) {
  check_keys(obj, ctx,
             {"alpha", "beta_db", "sigma_db", "shadowing_seed", "alpha_bands"});
  PathLossParams p;
  p.alpha = opt_num(obj, ctx, "alpha", p.alpha);
  p.beta_db = opt_num(obj, ctx, "beta_db", p.beta_db);
  p.sigma_db = opt_num(obj, ctx, "sigma_db", p.sigma_db);
  if (p.sigma_db < 0.0) fail(ctx, "key \"sigma_db\" must be non-negative");
  if (auto it = obj.find("shadowing_seed"); it != obj.end()) {
    if (!it->is_number_unsigned()) {
      fail(ctx, "key \"shadowing_seed\" must be a non-negative integer");
    }
    p.shadowing_seed = it->get<std::uint64_t>();
  }
  if (auto it = obj.find("alpha_bands"); it != obj.end()) {
    if (!it->is_array() || it->empty()) {
      fail(ctx, "key \"alpha_bands\" must be a non-empty array");
    }
    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string bctx = ctx + ".alpha_bands[" + std::to_string(i) + "]";
      const json& b = (*it)[i];
      if (!b.is_object()) fail(bctx, "must be an object");
      check_keys(b, bctx, {"altitude", "alpha"});
      AlphaBand band;
      band.altitude_m = req_num(b, bctx, "altitude") * scale;
      band.alpha = req_num(b, bctx, "alpha");
      if (band.altitude_m <= prev) fail(bctx, "altitudes must be strictly increasing");
      prev = band.altitude_m;
      p.alpha_bands.push_back(band);
    }
  }
  return p;
}

AntennaPattern parse_antenna(const json& obj, const std::string& ctx) {
  check_keys(obj, ctx, {"kind", "forward_gain_dbi", "hpbw_rad", "backlobe_floor_db"});
  AntennaPattern a;
  if (auto it = obj.find("kind"); it != obj.end()) {
    if (!it->is_string()) fail(ctx, "key \"kind\" must be a string");
    const std::string k = it->get<std::string>();
    if (k == "directional") {
      a.kind = AntennaKind::directional;
    } else if (k == "omni") {
      a.kind = AntennaKind::omni;
    } else {
      fail(ctx, "key \"kind\" must be \"directional\" or \"omni\"");
    }
  }
  a.forward_gain_dbi = opt_num(obj, ctx, "forward_gain_dbi", a.forward_gain_dbi);
  a.hpbw_rad = opt_num(obj, ctx, "hpbw_rad", a.hpbw_rad);
  a.backlobe_floor_db = opt_num(obj, ctx, "backlobe_floor_db", a.backlobe_floor_db);
  if (a.kind == AntennaKind::directional && !(a.hpbw_rad > 0.0)) {
    fail(ctx, "key \"hpbw_rad\" must be positive");
  }
  if (a.backlobe_floor_db < 0.0) fail(ctx, "key \"backlobe_floor_db\" must be non-negative");
  return a;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ScenarioError("scenario: top level must be an object");
  check_keys(root, "scenario",
             {"name", "units", "noise", "uav", "w_full", "stations", "request", "loop",
              "events"});

  Scenario s;
  s.name = req_str(root, "scenario", "name");

  double scale = 1.0;
  if (auto it = root.find("units"); it != root.end()) {
    if (!it->is_string()) fail("scenario", "key \"units\" must be a string");
    const std::string u = it->get<std::string>();
    if (u == "m") {
      scale = 1.0;
    } else if (u == "ft") {
      scale = kMetersPerFoot;
    } else {
      fail("scenario", "key \"units\" must be \"m\" or \"ft\"");
    }
  }

  if (auto it = root.find("noise"); it != root.end()) {
    if (!it->is_object()) fail("noise", "must be an object");
    check_keys(*it, "noise", {"psd_dbm_hz", "noise_figure_db"});
    s.network.noise.psd_dbm_hz = opt_num(*it, "noise", "psd_dbm_hz", -174.0);
    s.network.noise.noise_figure_db = opt_num(*it, "noise", "noise_figure_db", 0.0);
    if (s.network.noise.noise_figure_db < 0.0) {
      fail("noise", "key \"noise_figure_db\" must be non-negative");
    }
  }

  if (auto it = root.find("uav"); it != root.end()) {
    if (!it->is_object()) fail("uav", "must be an object");
    check_keys(*it, "uav", {"tx_power_dbm", "antenna"});
    s.network.uav_tx_power_dbm =
        opt_num(*it, "uav", "tx_power_dbm", s.network.uav_tx_power_dbm);
    if (s.network.uav_tx_power_dbm > kMaxUeTxPowerDbm) {
      fail("uav", "key \"tx_power_dbm\" exceeds the 23 dBm device limit");
    }
    if (auto ant = it->find("antenna"); ant != it->end()) {
      if (!ant->is_object()) fail("uav.antenna", "must be an object");
      s.network.uav_antenna = parse_antenna(*ant, "uav.antenna");
    }
  }

  s.network.w_full = opt_num(root, "scenario", "w_full", s.network.w_full);
  if (!(s.network.w_full > 0.0)) fail("scenario", "key \"w_full\" must be positive");

  const json& stations = require(root, "scenario", "stations");
  if (!stations.is_array() || stations.empty()) {
    fail("scenario", "key \"stations\" must be a non-empty array");
  }
  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < stations.size(); ++i) {
    const std::string ctx = "stations[" + std::to_string(i) + "]";
    const json& st = stations[i];
    if (!st.is_object()) fail(ctx, "must be an object");
    check_keys(st, ctx,
               {"id", "location", "bandwidth_hz", "pathloss", "load", "rx_psd_dbm_hz",
                "agg_power_dbm"});
    BaseStation bs;
    bs.id = req_str(st, ctx, "id");
    if (bs.id.empty()) fail(ctx, "key \"id\" must be non-empty");
    if (!seen_ids.insert(bs.id).second) fail(ctx, "duplicate station id \"" + bs.id + "\"");
    bs.location = req_loc(st, ctx, "location", scale);
    bs.bandwidth_hz = req_num(st, ctx, "bandwidth_hz");
    if (!(bs.bandwidth_hz > 0.0)) fail(ctx, "key \"bandwidth_hz\" must be positive");
    if (auto it = st.find("pathloss"); it != st.end()) {
      if (!it->is_object()) fail(ctx + ".pathloss", "must be an object");
      bs.pathloss = parse_pathloss(*it, ctx + ".pathloss", scale);
    }

    CellState cs;
    cs.load = opt_num(st, ctx, "load", 0.0);
    if (cs.load < 0.0) fail(ctx, "key \"load\" must be non-negative");
    if (auto it = st.find("rx_psd_dbm_hz"); it != st.end()) {
      cs.rx_psd_dbm_hz = as_num(*it, ctx, "rx_psd_dbm_hz");
    }
    if (auto it = st.find("agg_power_dbm"); it != st.end()) {
      cs.agg_power_dbm = as_num(*it, ctx, "agg_power_dbm");
    }
    if (cs.load > 0.0 && !cs.rx_psd_dbm_hz && !cs.agg_power_dbm) {
      fail(ctx, "a loaded station needs \"rx_psd_dbm_hz\" or \"agg_power_dbm\"");
    }
    s.network.stations.push_back(std::move(bs));
    s.network.states.push_back(cs);
  }

  const json& req = require(root, "scenario", "request");
  if (!req.is_object()) fail("request", "must be an object");
  check_keys(req, "request",
             {"poi", "dis_max", "rate_app_bps", "min_altitude", "sinr_min_db"});
  s.request.poi = req_loc(req, "request", "poi", scale);
  s.request.dis_max_m = req_num(req, "request", "dis_max") * scale;
  if (!(s.request.dis_max_m > 0.0)) fail("request", "key \"dis_max\" must be positive");
  s.request.rate_app_bps = req_num(req, "request", "rate_app_bps");
  if (s.request.rate_app_bps < 0.0) {
    fail("request", "key \"rate_app_bps\" must be non-negative");
  }
  s.request.min_altitude_m = opt_num(req, "request", "min_altitude", 0.0) * scale;
  if (s.request.min_altitude_m < 0.0) {
    fail("request", "key \"min_altitude\" must be non-negative");
  }
  s.request.sinr_min_db = opt_num(req, "request", "sinr_min_db", 25.0);
  if (s.request.min_altitude_m > s.request.poi.z + s.request.dis_max_m) {
    fail("request", "altitude floor puts the whole flight ball out of reach");
  }

  if (auto it = root.find("loop"); it != root.end()) {
    if (!it->is_object()) fail("loop", "must be an object");
    check_keys(*it, "loop", {"horizon_s", "interval_s", "speed_mps"});
    s.loop.horizon_s = opt_num(*it, "loop", "horizon_s", s.loop.horizon_s);
    s.loop.interval_s = opt_num(*it, "loop", "interval_s", s.loop.interval_s);
    s.loop.speed_mps = opt_num(*it, "loop", "speed_mps", s.loop.speed_mps);
    if (!(s.loop.horizon_s >= 0.0)) fail("loop", "key \"horizon_s\" must be non-negative");
    if (!(s.loop.interval_s > 0.0)) fail("loop", "key \"interval_s\" must be positive");
    if (!(s.loop.speed_mps >= 0.0)) fail("loop", "key \"speed_mps\" must be non-negative");
  }

  if (auto it = root.find("events"); it != root.end()) {
    if (!it->is_array()) fail("events", "must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string ctx = "events[" + std::to_string(i) + "]";
      const json& ev = (*it)[i];
      if (!ev.is_object()) fail(ctx, "must be an object");
      check_keys(ev, ctx, {"time_s", "station", "load"});
      LoadChange ch;
      ch.time_s = req_num(ev, ctx, "time_s");
      if (ch.time_s < 0.0) fail(ctx, "key \"time_s\" must be non-negative");
      ch.station = req_str(ev, ctx, "station");
      if (!seen_ids.count(ch.station)) {
        fail(ctx, "unknown station \"" + ch.station + "\"");
      }
      ch.load = req_num(ev, ctx, "load");
      if (ch.load < 0.0) fail(ctx, "key \"load\" must be non-negative");
      // A station that gains traffic mid-run still needs a power model.
      const std::size_t si = s.network.index_of(ch.station);
      if (ch.load > 0.0 && !s.network.states[si].rx_psd_dbm_hz &&
          !s.network.states[si].agg_power_dbm) {
        fail(ctx, "station \"" + ch.station + "\" has no power model for a nonzero load");
      }
      s.events.push_back(std::move(ch));
    }
    std::stable_sort(s.events.begin(), s.events.end(),
                     [](const LoadChange& a, const LoadChange& b) {
                       return a.time_s < b.time_s;
                     });
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open scenario file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& s) {
  using detail::sig9_round;
  ordered_json root;
  root["name"] = s.name;
  root["units"] = "m";
  root["noise"] = {{"psd_dbm_hz", sig9_round(s.network.noise.psd_dbm_hz)},
                   {"noise_figure_db", sig9_round(s.network.noise.noise_figure_db)}};
  const AntennaPattern& a = s.network.uav_antenna;
  root["uav"] = {
      {"tx_power_dbm", sig9_round(s.network.uav_tx_power_dbm)},
      {"antenna",
       {{"kind", a.kind == AntennaKind::omni ? "omni" : "directional"},
        {"forward_gain_dbi", sig9_round(a.forward_gain_dbi)},
        {"hpbw_rad", sig9_round(a.hpbw_rad)},
        {"backlobe_floor_db", sig9_round(a.backlobe_floor_db)}}}};
  root["w_full"] = sig9_round(s.network.w_full);

  root["stations"] = ordered_json::array();
  for (std::size_t i = 0; i < s.network.size(); ++i) {
    const BaseStation& bs = s.network.stations[i];
    const CellState& cs = s.network.states[i];
    ordered_json st;
    st["id"] = bs.id;
    st["location"] = {sig9_round(bs.location.x), sig9_round(bs.location.y),
                      sig9_round(bs.location.z)};
    st["bandwidth_hz"] = sig9_round(bs.bandwidth_hz);
    ordered_json pl;
    pl["alpha"] = sig9_round(bs.pathloss.alpha);
    pl["beta_db"] = sig9_round(bs.pathloss.beta_db);
    pl["sigma_db"] = sig9_round(bs.pathloss.sigma_db);
    if (bs.pathloss.shadowing_seed) pl["shadowing_seed"] = *bs.pathloss.shadowing_seed;
    if (!bs.pathloss.alpha_bands.empty()) {
      pl["alpha_bands"] = ordered_json::array();
      for (const AlphaBand& b : bs.pathloss.alpha_bands) {
        pl["alpha_bands"].push_back(
            {{"altitude", sig9_round(b.altitude_m)}, {"alpha", sig9_round(b.alpha)}});
      }
    }
    st["pathloss"] = std::move(pl);
    st["load"] = sig9_round(cs.load);
    if (cs.rx_psd_dbm_hz) st["rx_psd_dbm_hz"] = sig9_round(*cs.rx_psd_dbm_hz);
    if (cs.agg_power_dbm) st["agg_power_dbm"] = sig9_round(*cs.agg_power_dbm);
    root["stations"].push_back(std::move(st));
  }

  root["request"] = {{"poi",
                      {sig9_round(s.request.poi.x), sig9_round(s.request.poi.y),
                       sig9_round(s.request.poi.z)}},
                     {"dis_max", sig9_round(s.request.dis_max_m)},
                     {"rate_app_bps", sig9_round(s.request.rate_app_bps)},
                     {"min_altitude", sig9_round(s.request.min_altitude_m)},
                     {"sinr_min_db", sig9_round(s.request.sinr_min_db)}};
  root["loop"] = {{"horizon_s", sig9_round(s.loop.horizon_s)},
                  {"interval_s", sig9_round(s.loop.interval_s)},
                  {"speed_mps", sig9_round(s.loop.speed_mps)}};
  root["events"] = ordered_json::array();
  for (const LoadChange& ev : s.events) {
    root["events"].push_back({{"time_s", sig9_round(ev.time_s)},
                              {"station", ev.station},
                              {"load", sig9_round(ev.load)}});
  }
  return root.dump(2) + "\n";
}

std::string config_hash(const Scenario& s) {
  const std::string text = scenario_to_json(s);
  const std::uint64_t h = detail::fnv1a64(text.data(), text.size());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void apply_event(NetworkSnapshot& snap, const LoadChange& change) {
  snap.states[snap.index_of(change.station)].load = change.load;
}

NetworkSnapshot snapshot_at(const Scenario& s, double time_s) {
  NetworkSnapshot snap = s.network;
  for (const LoadChange& ev : s.events) {
    if (ev.time_s <= time_s) apply_event(snap, ev);
  }
  return snap;
}

namespace {

/// Monotone chain hull of the station footprint, counterclockwise.
std::vector<std::pair<double, double>> hull_of(const NetworkSnapshot& snap) {
  std::vector<std::pair<double, double>> pts;
  for (const BaseStation& bs : snap.stations) pts.emplace_back(bs.location.x, bs.location.y);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const std::pair<double, double>& o, const std::pair<double, double>& a,
                  const std::pair<double, double>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

bool inside_hull(const std::vector<std::pair<double, double>>& hull, double x, double y) {
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    const double c = (b.first - a.first) * (y - a.second) -
                     (b.second - a.second) * (x - a.first);
    if (c < 0.0) return false;
  }
  return true;
}

}  // namespace

std::vector<Location3D> sample_pois(const Scenario& s, int count, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("sample_pois: negative count");
  const std::vector<std::pair<double, double>> hull = hull_of(s.network);

  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = hi_x;
  for (const BaseStation& bs : s.network.stations) {
    lo_x = std::min(lo_x, bs.location.x);
    hi_x = std::max(hi_x, bs.location.x);
    lo_y = std::min(lo_y, bs.location.y);
    hi_y = std::max(hi_y, bs.location.y);
  }
  const bool hull_usable = hull.size() >= 3;
  if (!hull_usable) {
    // Degenerate footprint: widen the box so POIs still spread around it.
    const double pad = std::max(100.0, 0.25 * std::hypot(hi_x - lo_x, hi_y - lo_y));
    lo_x -= pad;
    hi_x += pad;
    lo_y -= pad;
    hi_y += pad;
  }

  std::vector<Location3D> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    double x = 0.5 * (lo_x + hi_x);
    double y = 0.5 * (lo_y + hi_y);
    for (int attempt = 0; attempt < 64; ++attempt) {
      const std::uint64_t key =
          (static_cast<std::uint64_t>(k) * 997 + static_cast<std::uint64_t>(attempt)) * 2;
      x = lo_x + (hi_x - lo_x) * detail::uniform01(seed, key);
      y = lo_y + (hi_y - lo_y) * detail::uniform01(seed, key + 1);
      if (!hull_usable || inside_hull(hull, x, y)) break;
    }
    out.push_back(Location3D{x, y, 0.0});
  }
  return out;
}

}  // namespace dronecell
