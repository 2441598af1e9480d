#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scenario.hpp"

using evanescent::cli::ConfigError;
using evanescent::cli::ScenarioConfig;

int main(int argc, char** argv) {
  CLI::App app{"evanescent: point-source evanescent waves, scenario runner and figure data"};

  std::string config_path;
  // flag name -> config key; applied after the config file so flags win
  const std::vector<std::pair<std::string, std::string>> flags{
      {"--mode", "mode"},       {"--omega0", "omega0"},   {"--x", "x"},
      {"--t-range", "t_range"}, {"--band", "band"},       {"--window", "window"},
      {"--c", "c"},             {"--figure", "figure"},   {"--out", "out"},
      {"--format", "format"},   {"--tol", "tol"},         {"--precision", "precision"},
      {"--omega-range", "omega_range"}, {"--threads", "threads"}};
  std::vector<std::string> values(flags.size());
  bool strict = false;

  app.add_option("--config", config_path, "key=value or JSON scenario file");
  for (std::size_t i = 0; i < flags.size(); ++i) app.add_option(flags[i].first, values[i]);
  app.add_flag("--strict", strict, "exit 3 if any point failed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    ScenarioConfig cfg;
    if (!config_path.empty()) evanescent::cli::load_config(config_path, cfg);
    for (std::size_t i = 0; i < flags.size(); ++i)
      if (app.count(flags[i].first) > 0)
        evanescent::cli::apply_setting(cfg, flags[i].second, values[i], flags[i].first);
    // a bare --figure implies figure mode
    if (app.count("--figure") > 0 && app.count("--mode") == 0)
      cfg.mode = evanescent::cli::Mode::figure;
    if (strict) cfg.strict = true;

    const auto report = evanescent::cli::run_scenario(cfg);
    for (const auto& f : report.files) std::printf("%s\n", f.c_str());
    if (report.failures > 0) std::fprintf(stderr, "%zu point(s) failed, see the errors file\n", report.failures);
    return evanescent::cli::exit_code(report, cfg.strict);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
