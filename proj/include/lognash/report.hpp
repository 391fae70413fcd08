#ifndef LOGNASH_REPORT_HPP
#define LOGNASH_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lognash/closed_form.hpp"
#include "lognash/config.hpp"
#include "lognash/dynamics.hpp"
#include "lognash/fairness.hpp"
#include "lognash/nbs.hpp"
#include "lognash/potential.hpp"

namespace lognash::cli {

inline constexpr const char* kArtifactName = "lognash";
inline constexpr const char* kArtifactVersion = "0.1.0";

struct VerifyCheck {
  std::string name;
  double tolerance = 0.0;
  double observed = 0.0;
  bool pass = false;
};

struct VerifySummary {
  std::vector<VerifyCheck> checks;
  bool all_passed = false;
};

struct SimSummary {
  dynamics::SimulationTrace trace;
  std::uint64_t n_agents = 0;
  std::vector<double> empirical_fractions;
  double tv_to_closed_form = 0.0;
};

/// One run's complete output. Every number in the JSON view is reproducible
/// from the echoed config alone; wall-clock duration is the only exception.
struct RunReport {
  std::string command;
  RunConfig config;
  std::optional<closed_form::EquilibriumReport> closed;
  std::optional<potential::MaximizeResult> potential_result;
  std::optional<nbs::NbsSolution> nbs_solution;
  std::optional<std::string> nbs_error;
  std::optional<fairness::EquivalenceReport> equivalence;
  std::optional<SimSummary> simulation;
  std::optional<VerifySummary> verify;
  std::optional<std::string> sweep_param;  // set on sweep points
  std::optional<double> sweep_value;
  std::optional<std::string> error;  // failure marker for sweep points
  double duration_seconds = 0.0;
};

/// Runs the method(s) selected in the config.
RunReport cmd_solve(const RunConfig& config);

/// Runs the agent simulator (sim defaults apply when the config has no sim
/// section) and appends the empirical-vs-theory total-variation distance.
/// The population must be a whole number of agents.
RunReport cmd_simulate(const RunConfig& config);

/// Runs the full identity battery on the config: route agreement, equal
/// utility, the Lambert-W/KKT certificates, aggregate identities, the
/// lognormal shape, entropy/product checks, and the convexity witness.
/// The process exit status is 0 iff every check passes.
RunReport cmd_verify(const RunConfig& config);

struct SweepSpec {
  std::string param;  // one of alpha, beta, gamma, n_total
  std::vector<double> values;
};

/// Re-solves per sweep value; per-point failures are marked and skipped, not
/// fatal.
std::vector<RunReport> cmd_sweep(const RunConfig& config, const SweepSpec& sweep);

enum class ReportFormat { json, csv };

nlohmann::ordered_json report_to_json(const RunReport& report);

/// Writes the report. JSON lands at `path` verbatim; CSV emits one tidy
/// table per artifact next to the stem: <stem>_occupancy.csv and
/// <stem>_trace.csv. An empty path writes JSON to stdout.
void write_report(const RunReport& report, ReportFormat format, const std::string& path);

/// Writes a sweep: JSON array of reports, or a long-format CSV table with
/// one row per sweep point.
void write_sweep(const std::vector<RunReport>& reports, ReportFormat format,
                 const std::string& path);

}  // namespace lognash::cli

#endif  // LOGNASH_REPORT_HPP
