#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dronecell/baselines.hpp"
#include "dronecell/controlloop.hpp"
#include "dronecell/oracle.hpp"
#include "dronecell/scenario.hpp"
#include "dronecell/solver.hpp"

namespace dronecell {

/// All numbers in reports pass through this: 9 significant digits,
/// shortest form. Re-parsing and re-formatting is a fixed point, which is
/// what makes emitted files byte-stable.
std::string format_sig9(double v);

/// Slacks can be infinite; files carry +-1e9 instead so every consumer
/// can parse them as plain numbers.
double saturate_slack(double v);

struct CompareRow {
  Location3D poi;
  SolveResult opt;
  std::vector<BaselineResult> baselines;
  bool has_feasible_baseline = false;
  double gain_percent = 0.0;  // over the best feasible baseline, else 0
};

struct CompareReport {
  std::string scenario_name;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::vector<CompareRow> rows;
  double mean_gain_percent = 0.0;  // rows with a feasible baseline only
};

CompareReport run_compare(const Scenario& s, int poi_count, std::uint64_t seed,
                          const SolverConfig& config = {});

std::string solve_report_json(const Scenario& s, const SolveResult& r);
std::string solve_report_csv(const Scenario& s, const SolveResult& r);
std::string oracle_report_json(const Scenario& s, const OracleResult& r);
std::string oracle_report_csv(const Scenario& s, const OracleResult& r);
std::string compare_report_json(const CompareReport& r);
std::string compare_report_csv(const CompareReport& r);
std::string timeline_report_json(const TimelineReport& r);
std::string timeline_report_csv(const TimelineReport& r);

}  // namespace dronecell
