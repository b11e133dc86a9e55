#include "dronecell/controlloop.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/format.hpp"
#include "json.hpp"

namespace dronecell {

namespace {

using nlohmann::ordered_json;

Location3D step_toward(const Location3D& from, const Location3D& to, double max_step) {
  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  const double dz = to.z - from.z;
  const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (dist <= max_step || dist == 0.0) return to;
  const double s = max_step / dist;
  return Location3D{from.x + dx * s, from.y + dy * s, from.z + dz * s};
}

}  // namespace

std::string control_response_to_json(const ControlResponse& r) {
  using detail::sig9_round;
  ordered_json j;
  j["t_s"] = sig9_round(r.t_s);
  j["location"] = {sig9_round(r.target.location.x), sig9_round(r.target.location.y),
                   sig9_round(r.target.location.z)};
  j["azimuth_rad"] = sig9_round(r.target.direction.azimuth);
  j["polar_rad"] = sig9_round(r.target.direction.polar);
  j["objective_bps"] = sig9_round(r.objective_bps);
  j["relaxation_db"] = sig9_round(r.relaxation_db);
  j["feasible"] = r.feasible;
  std::string text = j.dump();
  if (text.size() >= 256) {
    throw std::runtime_error("control response exceeds the 256 byte packet budget");
  }
  return text;
}

ControlResponse control_response_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  ControlResponse r;
  r.t_s = j.at("t_s").get<double>();
  const auto& loc = j.at("location");
  r.target.location = {loc.at(0).get<double>(), loc.at(1).get<double>(),
                       loc.at(2).get<double>()};
  r.target.direction.azimuth = j.at("azimuth_rad").get<double>();
  r.target.direction.polar = j.at("polar_rad").get<double>();
  r.objective_bps = j.at("objective_bps").get<double>();
  r.relaxation_db = j.at("relaxation_db").get<double>();
  r.feasible = j.at("feasible").get<bool>();
  return r;
}

TimelineReport run_timeline(const Scenario& s, const SolverConfig& config) {
  TimelineReport report;
  report.scenario_name = s.name;
  report.config_hash = config_hash(s);

  NetworkSnapshot snap = s.network;
  const FeasibleRegion region = feasible_region(s.request);
  Location3D pos = project_feasible(s.request.poi, region);
  Location3D target = pos;
  Direction dir{};
  bool have_command = false;
  std::size_t serving = 0;

  std::size_t next_event = 0;
  double next_tick = 0.0;
  const int horizon = static_cast<int>(std::floor(s.loop.horizon_s));

  double sum = 0.0;
  for (int t = 0; t <= horizon; ++t) {
    std::string what;
    while (next_event < s.events.size() && s.events[next_event].time_s <= t) {
      apply_event(snap, s.events[next_event]);
      ++next_event;
      what = "load_change";
    }
    while (next_tick <= t && next_tick < s.loop.horizon_s) {
      const SolveResult r = solve(snap, s.request, config);
      target = r.placement.location;
      dir = r.placement.direction;
      serving = r.serving;
      have_command = true;
      report.commands.push_back({static_cast<double>(t), r.placement, r.objective_bps,
                                 r.relaxation_db, r.feasible});
      what += what.empty() ? "solve" : "+solve";
      next_tick += s.loop.interval_s;
    }
    if (!have_command) {
      serving = select_serving_index(snap, pos);
      dir = direction_to(pos, snap.stations[serving].location);
    }

    TimelineSample sample;
    sample.t_s = t;
    sample.position = pos;
    sample.direction = dir;
    sample.objective_bps = evaluate_objective(snap, serving, pos, dir);
    sample.event = what;
    sum += sample.objective_bps;
    report.samples.push_back(std::move(sample));

    pos = step_toward(pos, target, s.loop.speed_mps);
  }
  report.mean_objective_bps =
      report.samples.empty() ? 0.0 : sum / static_cast<double>(report.samples.size());
  return report;
}

StalenessReport staleness_gap(const Scenario& s, const SolverConfig& config) {
  if (s.events.empty()) {
    throw std::invalid_argument("staleness_gap: scenario has no load events");
  }
  const double t_c = s.events.front().time_s;
  for (const LoadChange& ev : s.events) {
    if (ev.time_s != t_c) {
      throw std::invalid_argument("staleness_gap: load events span multiple instants");
    }
  }

  NetworkSnapshot pre = s.network;
  const NetworkSnapshot post = snapshot_at(s, t_c);

  const SolveResult stale = solve(pre, s.request, config);
  const SolveResult fresh = solve(post, s.request, config);

  StalenessReport r;
  r.change_time_s = t_c;
  r.stale = stale.placement;
  r.fresh = fresh.placement;
  r.fresh_objective_bps = fresh.objective_bps;
  r.stale_objective_bps = evaluate_objective(post, fresh.serving, stale.placement.location,
                                             stale.placement.direction);
  r.gap_percent = r.fresh_objective_bps == 0.0
                      ? 0.0
                      : 100.0 * (r.fresh_objective_bps - r.stale_objective_bps) /
                            r.fresh_objective_bps;
  return r;
}

}  // namespace dronecell
