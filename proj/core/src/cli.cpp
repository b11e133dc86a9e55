#include "dronecell/cli.hpp"

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dronecell/controlloop.hpp"
#include "dronecell/oracle.hpp"
#include "dronecell/report.hpp"
#include "dronecell/scenario.hpp"
#include "dronecell/solver.hpp"

namespace dronecell {

namespace {

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
  if (!out) throw std::runtime_error("failed writing output file: " + out_path);
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  CLI::App app{"drone relay placement and pointing for cellular uplink"};
  app.name("dronecell");
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  int pois = 20;
  OracleConfig oracle_cfg;

  auto add_common = [&](CLI::App* cmd, bool with_seed) {
    cmd->add_option("--scenario", scenario_path, "scenario JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    if (with_seed) cmd->add_option("--seed", seed, "search seed");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "place and point the drone once");
  add_common(solve_cmd, true);

  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "fly the closed control loop over the horizon");
  add_common(simulate_cmd, true);

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "sweep POIs and score against fixed policies");
  add_common(compare_cmd, true);
  compare_cmd->add_option("--pois", pois, "POI sample count")
      ->check(CLI::PositiveNumber);

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive grid reference for the same problem");
  add_common(oracle_cmd, false);
  oracle_cmd->add_option("--seed", seed, "accepted for uniformity; the grid is fixed");
  oracle_cmd->add_option("--points", oracle_cfg.points_per_axis, "grid points per axis")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--azimuths", oracle_cfg.azimuth_samples, "azimuth samples")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--polars", oracle_cfg.polar_samples, "polar samples")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--threads", oracle_cfg.threads,
                         "worker threads (0 = all cores)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("dronecell");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    const Scenario s = load_scenario(scenario_path);
    std::string text;
    if (solve_cmd->parsed()) {
      SolverConfig cfg;
      cfg.rng_seed = seed;
      const SolveResult r = solve(snapshot_at(s, 0.0), s.request, cfg);
      text = format == "csv" ? solve_report_csv(s, r) : solve_report_json(s, r);
    } else if (simulate_cmd->parsed()) {
      SolverConfig cfg;
      cfg.rng_seed = seed;
      const TimelineReport r = run_timeline(s, cfg);
      text = format == "csv" ? timeline_report_csv(r) : timeline_report_json(r);
    } else if (compare_cmd->parsed()) {
      const CompareReport r = run_compare(s, pois, seed, SolverConfig{});
      text = format == "csv" ? compare_report_csv(r) : compare_report_json(r);
    } else if (oracle_cmd->parsed()) {
      const OracleResult r = oracle_solve(snapshot_at(s, 0.0), s.request, oracle_cfg);
      text = format == "csv" ? oracle_report_csv(s, r) : oracle_report_json(s, r);
    }
    write_output(text, out_path);
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace dronecell
