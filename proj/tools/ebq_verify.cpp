// Scenario runner: loads a JSON scenario, executes the requested checks
// and emits a deterministic JSON report plus a console summary.
//
// Exit codes: 0 all checks pass (or are hypothesis-gated), 1 at least
// one check failed, 2 configuration error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ebq/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"extended Brauer quotient verification harness"};

  std::string config_path;
  std::vector<std::string> check_overrides;
  std::string out_path;
  std::int64_t seed_override = -1;
  bool list_presets = false;
  bool verbose = false;

  app.add_option("--config", config_path, "scenario config (JSON)");
  app.add_option("--check", check_overrides,
                 "check name, repeatable; overrides the config's list");
  app.add_option("--seed", seed_override, "seed override");
  app.add_option("--out", out_path, "report output path override");
  app.add_flag("--list-presets", list_presets, "print the group catalog");
  app.add_flag("--verbose", verbose, "print the JSON report to stdout");

  CLI11_PARSE(app, argc, argv);

  if (list_presets) {
    for (const auto& p : ebq::catalog())
      std::cout << p.name << "  degree " << p.degree << "  order " << p.order
                << "  (" << p.description << ")\n";
    return 0;
  }

  try {
    if (config_path.empty()) {
      std::cerr << "error: --config is required (or --list-presets)\n";
      return 2;
    }
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config file " << config_path << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    ebq::ScenarioConfig cfg = ebq::load_config(buf.str());
    if (!check_overrides.empty()) {
      for (const auto& c : check_overrides)
        if (!ebq::known_checks().count(c))
          throw ebq::ConfigError("unknown check '" + c + "'");
      cfg.checks = check_overrides;
    }
    if (seed_override >= 0)
      cfg.seed = static_cast<std::uint64_t>(seed_override);
    if (!out_path.empty())
      cfg.output = out_path;

    ebq::RunReport report = ebq::run_scenario(cfg);
    std::cout << report.summary();
    std::string json_text = report.to_json().dump(2) + "\n";
    if (verbose)
      std::cout << json_text;
    if (!cfg.output.empty()) {
      std::ofstream out(cfg.output);
      if (!out) {
        std::cerr << "error: cannot write report to " << cfg.output << "\n";
        return 2;
      }
      out << json_text;
    }
    return report.exit_code();
  } catch (const ebq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
