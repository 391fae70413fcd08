#ifndef LOGNASH_CONFIG_HPP
#define LOGNASH_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lognash/dynamics.hpp"
#include "lognash/model.hpp"

namespace lognash::cli {

enum class Method { closed, potential, nbs, all };

struct GridRange {
  double min_salary = 1.0;
  double max_salary = 1.0;
  std::size_t n = 32;  // default resolution when only endpoints are given
};

struct SimConfig {
  dynamics::Protocol protocol = dynamics::Protocol::logit;
  double temperature = 1.0;
  std::uint64_t steps = 100000;
  std::uint64_t burn_in = 10000;
  std::uint64_t snapshot_every = 100;
  std::uint64_t seed = 12345;
};

/// Named tolerances, materialized with their defaults so every emitted
/// report is self-describing.
struct Tolerances {
  double fixed_point = 1e-10;    // solver fixed-point sup-norm
  double cross_method = 1e-7;    // route-agreement sup-norm
  double sim_tv = 0.05;          // simulation total-variation distance
  double equal_utility = 1e-10;  // max h - min h at equilibrium
  double kkt = 1e-10;            // scalar KKT / Lambert-W residuals
  double identity = 1e-9;        // aggregate identities (H* = N h*, sum N = N)
  double payroll = 1e-12;        // M vs independently summed payroll
  double entropy_gap = 1e-10;    // entropy vs phi_w/gamma
  double shape = 1e-8;           // lognormal regression coefficients
};

struct RunConfig {
  ModelParams params;
  std::optional<std::vector<double>> explicit_levels;
  std::optional<GridRange> grid_range;
  double n_total = 1.0;
  Method method = Method::all;
  std::optional<SimConfig> sim;
  Tolerances tolerances;
  std::uint64_t seed = 12345;

  SalaryGrid build_grid() const;
};

/// Parses and fully validates a JSON config document. Exactly one of
/// grid.levels / grid.{min,max[,n]} must be present; unknown keys anywhere
/// are rejected. Throws ParseError for malformed JSON and ValidationError
/// (naming the field) for schema violations.
RunConfig parse_config(const std::string& text);

/// parse_config over the contents of a file. Throws IoError when unreadable.
RunConfig load_config(const std::string& path);

/// Fully materialized echo of a config, defaults included; parsing the dump
/// of this object reproduces the config exactly.
nlohmann::ordered_json config_to_json(const RunConfig& config);

std::string method_name(Method method);
std::string protocol_name(dynamics::Protocol protocol);

}  // namespace lognash::cli

#endif  // LOGNASH_CONFIG_HPP
