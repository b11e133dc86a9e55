#include "dronecell/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "detail/format.hpp"
#include "json.hpp"

namespace dronecell {

namespace {

using nlohmann::ordered_json;
using detail::sig9;
using detail::sig9_round;

double sat(double v) { return sig9_round(saturate_slack(v)); }

ordered_json placement_json(const Placement& p) {
  ordered_json j;
  j["location"] = {sig9_round(p.location.x), sig9_round(p.location.y),
                   sig9_round(p.location.z)};
  j["azimuth_rad"] = sig9_round(p.direction.azimuth);
  j["polar_rad"] = sig9_round(p.direction.polar);
  return j;
}

ordered_json slacks_json(const ConstraintReport& c) {
  ordered_json j;
  j["neighbor_sinr_db"] = sat(c.neighbor_sinr_slack_db);
  j["uav_sinr_db"] = sat(c.uav_sinr_slack_db);
  j["distance_m"] = sat(c.distance_slack_m);
  j["altitude_m"] = sat(c.altitude_slack_m);
  return j;
}

void solution_fields(ordered_json& j, const Scenario& s, const Placement& placement,
                     const PointEvaluation& ev, std::size_t serving, double relaxation_db,
                     bool feasible) {
  j["scenario"] = s.name;
  j["config_hash"] = config_hash(s);
  j["serving"] = s.network.stations[serving].id;
  j["placement"] = placement_json(placement);
  j["objective_bps"] = sig9_round(ev.objective_bps);
  j["uav_capacity_bps"] = sig9_round(ev.uav_capacity_bps);
  j["uav_sinr_db"] = sat(ev.uav_sinr_db);
  j["min_neighbor_sinr_db"] = sat(ev.min_neighbor_sinr_db);
  j["slacks"] = slacks_json(ev.constraints);
  j["relaxation_db"] = sig9_round(relaxation_db);
  j["feasible"] = feasible;
}

void solution_csv_row(std::ostream& out, const Scenario& s, const Placement& placement,
                      const PointEvaluation& ev, std::size_t serving, double relaxation_db,
                      bool feasible) {
  const ConstraintReport& c = ev.constraints;
  out << s.name << ',' << config_hash(s) << ',' << s.network.stations[serving].id << ','
      << sig9(placement.location.x) << ',' << sig9(placement.location.y) << ','
      << sig9(placement.location.z) << ',' << sig9(placement.direction.azimuth) << ','
      << sig9(placement.direction.polar) << ',' << sig9(ev.objective_bps) << ','
      << sig9(ev.uav_capacity_bps) << ',' << sig9(sat(ev.uav_sinr_db)) << ','
      << sig9(sat(ev.min_neighbor_sinr_db)) << ',' << sig9(sat(c.neighbor_sinr_slack_db))
      << ',' << sig9(sat(c.uav_sinr_slack_db)) << ',' << sig9(sat(c.distance_slack_m))
      << ',' << sig9(sat(c.altitude_slack_m)) << ',' << sig9(relaxation_db) << ','
      << (feasible ? 1 : 0);
}

constexpr const char* kSolutionCsvHeader =
    "scenario,config_hash,serving,x_m,y_m,z_m,azimuth_rad,polar_rad,objective_bps,"
    "uav_capacity_bps,uav_sinr_db,min_neighbor_sinr_db,neighbor_sinr_slack_db,"
    "uav_sinr_slack_db,distance_slack_m,altitude_slack_m,relaxation_db,feasible";

}  // namespace

std::string format_sig9(double v) { return sig9(v); }

double saturate_slack(double v) {
  if (v > 1e9) return 1e9;
  if (v < -1e9) return -1e9;
  return v;
}

CompareReport run_compare(const Scenario& s, int poi_count, std::uint64_t seed,
                          const SolverConfig& config) {
  CompareReport report;
  report.scenario_name = s.name;
  report.config_hash = config_hash(s);
  report.seed = seed;

  const std::vector<Location3D> pois = sample_pois(s, poi_count, seed);
  double gain_sum = 0.0;
  int gain_rows = 0;
  for (const Location3D& poi : pois) {
    AppRequest request = s.request;
    request.poi = poi;

    CompareRow row;
    row.poi = poi;
    SolverConfig cfg = config;
    cfg.rng_seed = seed;
    row.opt = solve(s.network, request, cfg);
    row.baselines = evaluate_all_baselines(s.network, request);

    double best_base = -std::numeric_limits<double>::infinity();
    for (const BaselineResult& b : row.baselines) {
      if (b.feasible && b.objective_bps > best_base) {
        best_base = b.objective_bps;
        row.has_feasible_baseline = true;
      }
    }
    if (row.has_feasible_baseline && best_base > 0.0) {
      row.gain_percent = 100.0 * (row.opt.objective_bps - best_base) / best_base;
      gain_sum += row.gain_percent;
      ++gain_rows;
    }
    report.rows.push_back(std::move(row));
  }
  report.mean_gain_percent = gain_rows > 0 ? gain_sum / gain_rows : 0.0;
  return report;
}

std::string solve_report_json(const Scenario& s, const SolveResult& r) {
  ordered_json j;
  solution_fields(j, s, r.placement, r.evaluation, r.serving, r.relaxation_db, r.feasible);
  j["starts_used"] = r.starts_used;
  return j.dump(2) + "\n";
}

std::string solve_report_csv(const Scenario& s, const SolveResult& r) {
  std::ostringstream out;
  out << kSolutionCsvHeader << ",starts_used\n";
  solution_csv_row(out, s, r.placement, r.evaluation, r.serving, r.relaxation_db,
                   r.feasible);
  out << ',' << r.starts_used << '\n';
  return out.str();
}

std::string oracle_report_json(const Scenario& s, const OracleResult& r) {
  ordered_json j;
  solution_fields(j, s, r.placement, r.evaluation, r.serving, r.relaxation_db, r.feasible);
  j["evaluations"] = r.evaluations;
  return j.dump(2) + "\n";
}

std::string oracle_report_csv(const Scenario& s, const OracleResult& r) {
  std::ostringstream out;
  out << kSolutionCsvHeader << ",evaluations\n";
  solution_csv_row(out, s, r.placement, r.evaluation, r.serving, r.relaxation_db,
                   r.feasible);
  out << ',' << r.evaluations << '\n';
  return out.str();
}

std::string compare_report_json(const CompareReport& r) {
  ordered_json j;
  j["scenario"] = r.scenario_name;
  j["config_hash"] = r.config_hash;
  j["seed"] = r.seed;
  j["mean_gain_percent"] = sig9_round(r.mean_gain_percent);
  j["rows"] = ordered_json::array();
  for (const CompareRow& row : r.rows) {
    ordered_json jr;
    jr["poi"] = {sig9_round(row.poi.x), sig9_round(row.poi.y), sig9_round(row.poi.z)};
    ordered_json opt;
    opt["placement"] = placement_json(row.opt.placement);
    opt["objective_bps"] = sig9_round(row.opt.objective_bps);
    opt["relaxation_db"] = sig9_round(row.opt.relaxation_db);
    opt["feasible"] = row.opt.feasible;
    opt["slacks"] = slacks_json(row.opt.evaluation.constraints);
    jr["opt"] = std::move(opt);
    jr["baselines"] = ordered_json::array();
    for (const BaselineResult& b : row.baselines) {
      ordered_json jb;
      jb["name"] = baseline_name(b.kind);
      jb["placement"] = placement_json(b.placement);
      jb["objective_bps"] = sig9_round(b.objective_bps);
      jb["feasible"] = b.feasible;
      jr["baselines"].push_back(std::move(jb));
    }
    jr["has_feasible_baseline"] = row.has_feasible_baseline;
    jr["gain_percent"] = sig9_round(row.gain_percent);
    j["rows"].push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

std::string compare_report_csv(const CompareReport& r) {
  std::ostringstream out;
  out << "poi_x_m,poi_y_m,poi_z_m,opt_objective_bps,opt_feasible,opt_relaxation_db";
  for (const BaselineKind kind :
       {BaselineKind::no_control, BaselineKind::orientation_only,
        BaselineKind::location_only, BaselineKind::location_aligned}) {
    const std::string name = baseline_name(kind);
    out << ',' << name << "_objective_bps," << name << "_feasible";
  }
  out << ",gain_percent\n";
  for (const CompareRow& row : r.rows) {
    out << sig9(row.poi.x) << ',' << sig9(row.poi.y) << ',' << sig9(row.poi.z) << ','
        << sig9(row.opt.objective_bps) << ',' << (row.opt.feasible ? 1 : 0) << ','
        << sig9(row.opt.relaxation_db);
    for (const BaselineResult& b : row.baselines) {
      out << ',' << sig9(b.objective_bps) << ',' << (b.feasible ? 1 : 0);
    }
    out << ',' << sig9(row.gain_percent) << '\n';
  }
  return out.str();
}

std::string timeline_report_json(const TimelineReport& r) {
  ordered_json j;
  j["scenario"] = r.scenario_name;
  j["config_hash"] = r.config_hash;
  j["mean_objective_bps"] = sig9_round(r.mean_objective_bps);
  j["commands"] = ordered_json::array();
  for (const ControlResponse& c : r.commands) {
    j["commands"].push_back(ordered_json::parse(control_response_to_json(c)));
  }
  j["samples"] = ordered_json::array();
  for (const TimelineSample& sm : r.samples) {
    ordered_json js;
    js["t_s"] = sig9_round(sm.t_s);
    js["position"] = {sig9_round(sm.position.x), sig9_round(sm.position.y),
                      sig9_round(sm.position.z)};
    js["azimuth_rad"] = sig9_round(sm.direction.azimuth);
    js["polar_rad"] = sig9_round(sm.direction.polar);
    js["objective_bps"] = sig9_round(sm.objective_bps);
    js["event"] = sm.event;
    j["samples"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

std::string timeline_report_csv(const TimelineReport& r) {
  std::ostringstream out;
  out << "t_s,x_m,y_m,z_m,objective_bps,event\n";
  for (const TimelineSample& sm : r.samples) {
    out << sig9(sm.t_s) << ',' << sig9(sm.position.x) << ',' << sig9(sm.position.y) << ','
        << sig9(sm.position.z) << ',' << sig9(sm.objective_bps) << ',' << sm.event << '\n';
  }
  return out.str();
}

}  // namespace dronecell
