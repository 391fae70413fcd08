#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lognash/errors.hpp"
#include "lognash/report.hpp"

namespace {

using namespace lognash;

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> steps;
  std::optional<std::string> method;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "config file (JSON)")->required();
  cmd->add_option("--out", opts.out_path, "output path (stdout when omitted, JSON only)");
  cmd->add_option("--format", opts.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", opts.seed, "override config and simulation seeds");
  cmd->add_option("--steps", opts.steps, "override simulation step count");
  cmd->add_option("--method", opts.method, "override solve method")
      ->check(CLI::IsMember({"closed", "potential", "nbs", "all"}));
}

cli::RunConfig load(const CommonOptions& opts) {
  cli::RunConfig config = cli::load_config(opts.config_path);
  if (opts.seed.has_value()) {
    config.seed = *opts.seed;
    if (config.sim.has_value()) config.sim->seed = *opts.seed;
  }
  if (opts.steps.has_value()) {
    if (!config.sim.has_value()) config.sim = cli::SimConfig{};
    config.sim->steps = *opts.steps;
  }
  if (opts.method.has_value()) {
    if (*opts.method == "closed") config.method = cli::Method::closed;
    if (*opts.method == "potential") config.method = cli::Method::potential;
    if (*opts.method == "nbs") config.method = cli::Method::nbs;
    if (*opts.method == "all") config.method = cli::Method::all;
  }
  return config;
}

// LOGNASH_OUT_DIR redirects relative output paths.
std::string resolve_out(const std::string& path) {
  if (path.empty()) return path;
  const char* dir = std::getenv("LOGNASH_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  if (path.front() == '/') return path;
  std::string base(dir);
  if (base.back() != '/') base += '/';
  return base + path;
}

cli::ReportFormat parse_format(const std::string& name) {
  return name == "csv" ? cli::ReportFormat::csv : cli::ReportFormat::json;
}

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> values;
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      values.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw ValidationError("sweep-values", "'" + token + "' is not a number");
    }
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lognash: equilibrium income distribution by three routes"};
  app.require_subcommand(1);

  CommonOptions solve_opts, simulate_opts, verify_opts, sweep_opts;
  std::string sweep_param;
  std::string sweep_values;

  CLI::App* solve = app.add_subcommand("solve", "solve the equilibrium");
  add_common(solve, solve_opts);
  CLI::App* simulate = app.add_subcommand("simulate", "run the agent simulator");
  add_common(simulate, simulate_opts);
  CLI::App* verify = app.add_subcommand("verify", "run the identity battery");
  add_common(verify, verify_opts);
  CLI::App* sweep = app.add_subcommand("sweep", "re-solve across parameter values");
  add_common(sweep, sweep_opts);
  sweep->add_option("--sweep-param", sweep_param, "parameter to sweep")->required();
  sweep->add_option("--sweep-values", sweep_values, "comma-separated values")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const cli::RunReport report = cli::cmd_solve(load(solve_opts));
      cli::write_report(report, parse_format(solve_opts.format), resolve_out(solve_opts.out_path));
      return 0;
    }
    if (simulate->parsed()) {
      const cli::RunReport report = cli::cmd_simulate(load(simulate_opts));
      cli::write_report(report, parse_format(simulate_opts.format),
                        resolve_out(simulate_opts.out_path));
      return 0;
    }
    if (verify->parsed()) {
      const cli::RunReport report = cli::cmd_verify(load(verify_opts));
      cli::write_report(report, parse_format(verify_opts.format),
                        resolve_out(verify_opts.out_path));
      return report.verify->all_passed ? 0 : 1;
    }
    if (sweep->parsed()) {
      const cli::SweepSpec spec{sweep_param, parse_values(sweep_values)};
      const std::vector<cli::RunReport> reports = cli::cmd_sweep(load(sweep_opts), spec);
      cli::write_sweep(reports, parse_format(sweep_opts.format), resolve_out(sweep_opts.out_path));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
