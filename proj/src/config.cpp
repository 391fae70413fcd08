#include "lognash/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lognash/errors.hpp"

namespace lognash::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& item : object.items()) {
    if (!allowed.contains(item.key())) {
      throw ValidationError(where.empty() ? item.key() : where + "." + item.key(),
                            "unknown key");
    }
  }
}

double require_number(const json& object, const std::string& key, const std::string& where) {
  if (!object.contains(key)) throw ValidationError(where, "missing required field");
  const json& v = object.at(key);
  if (!v.is_number()) throw ValidationError(where, "must be a number");
  return v.get<double>();
}

std::uint64_t require_uint(const json& object, const std::string& key, const std::string& where,
                           std::uint64_t fallback, std::uint64_t minimum) {
  if (!object.contains(key)) return fallback;
  const json& v = object.at(key);
  if (!v.is_number_unsigned()) throw ValidationError(where, "must be a non-negative integer");
  const auto value = v.get<std::uint64_t>();
  if (value < minimum) {
    throw ValidationError(where, "must be at least " + std::to_string(minimum));
  }
  return value;
}

Method parse_method(const std::string& name) {
  if (name == "closed") return Method::closed;
  if (name == "potential") return Method::potential;
  if (name == "nbs") return Method::nbs;
  if (name == "all") return Method::all;
  throw ValidationError("method", "unknown method '" + name + "'");
}

dynamics::Protocol parse_protocol(const std::string& name) {
  if (name == "best_response") return dynamics::Protocol::best_response;
  if (name == "logit") return dynamics::Protocol::logit;
  throw ValidationError("sim.protocol", "unknown protocol '" + name + "'");
}

void parse_grid(const json& doc, RunConfig& config) {
  if (!doc.contains("grid")) throw ValidationError("grid", "missing required field");
  const json& grid = doc.at("grid");
  if (!grid.is_object()) throw ValidationError("grid", "must be an object");

  const bool has_levels = grid.contains("levels");
  const bool has_range = grid.contains("min") || grid.contains("max") || grid.contains("n");
  if (has_levels && has_range) {
    throw ValidationError("grid", "give either an explicit level list or a min/max range, not both");
  }
  if (!has_levels && !has_range) {
    throw ValidationError("grid", "needs either 'levels' or 'min'/'max'");
  }

  if (has_levels) {
    reject_unknown_keys(grid, {"levels"}, "grid");
    const json& levels = grid.at("levels");
    if (!levels.is_array() || levels.empty()) {
      throw ValidationError("grid.levels", "must be a non-empty array of numbers");
    }
    std::vector<double> values;
    values.reserve(levels.size());
    for (const json& v : levels) {
      if (!v.is_number()) throw ValidationError("grid.levels", "must contain only numbers");
      values.push_back(v.get<double>());
    }
    config.explicit_levels = std::move(values);
  } else {
    reject_unknown_keys(grid, {"min", "max", "n"}, "grid");
    GridRange range;
    range.min_salary = require_number(grid, "min", "grid.min");
    range.max_salary = require_number(grid, "max", "grid.max");
    range.n = static_cast<std::size_t>(require_uint(grid, "n", "grid.n", 32, 1));
    config.grid_range = range;
  }

  try {
    (void)config.build_grid();
  } catch (const InvalidGrid& e) {
    throw ValidationError("grid", e.what());
  }
}

void parse_sim(const json& doc, RunConfig& config) {
  if (!doc.contains("sim")) return;
  const json& sim = doc.at("sim");
  if (!sim.is_object()) throw ValidationError("sim", "must be an object");
  reject_unknown_keys(sim, {"protocol", "temperature", "steps", "burn_in", "snapshot_every", "seed"},
                      "sim");
  SimConfig out;
  if (sim.contains("protocol")) {
    if (!sim.at("protocol").is_string()) throw ValidationError("sim.protocol", "must be a string");
    out.protocol = parse_protocol(sim.at("protocol").get<std::string>());
  }
  if (sim.contains("temperature")) {
    out.temperature = require_number(sim, "temperature", "sim.temperature");
    if (!(out.temperature > 0.0)) throw ValidationError("sim.temperature", "must be positive");
  }
  out.steps = require_uint(sim, "steps", "sim.steps", out.steps, 1);
  out.burn_in = require_uint(sim, "burn_in", "sim.burn_in", out.burn_in, 0);
  out.snapshot_every = require_uint(sim, "snapshot_every", "sim.snapshot_every", out.snapshot_every, 1);
  out.seed = require_uint(sim, "seed", "sim.seed", out.seed, 0);
  config.sim = out;
}

void parse_tolerances(const json& doc, RunConfig& config) {
  if (!doc.contains("tolerances")) return;
  const json& tols = doc.at("tolerances");
  if (!tols.is_object()) throw ValidationError("tolerances", "must be an object");
  reject_unknown_keys(tols,
                      {"fixed_point", "cross_method", "sim_tv", "equal_utility", "kkt",
                       "identity", "payroll", "entropy_gap", "shape"},
                      "tolerances");
  auto read = [&](const char* key, double& slot) {
    if (!tols.contains(key)) return;
    slot = require_number(tols, key, std::string("tolerances.") + key);
    if (!(slot > 0.0)) {
      throw ValidationError(std::string("tolerances.") + key, "must be positive");
    }
  };
  read("fixed_point", config.tolerances.fixed_point);
  read("cross_method", config.tolerances.cross_method);
  read("sim_tv", config.tolerances.sim_tv);
  read("equal_utility", config.tolerances.equal_utility);
  read("kkt", config.tolerances.kkt);
  read("identity", config.tolerances.identity);
  read("payroll", config.tolerances.payroll);
  read("entropy_gap", config.tolerances.entropy_gap);
  read("shape", config.tolerances.shape);
}

}  // namespace

SalaryGrid RunConfig::build_grid() const {
  if (explicit_levels.has_value()) return SalaryGrid(*explicit_levels);
  if (grid_range.has_value()) {
    return build_salary_grid(grid_range->min_salary, grid_range->max_salary, grid_range->n);
  }
  throw InvalidGrid("config carries no grid");
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("config document must be a JSON object");

  reject_unknown_keys(
      doc, {"alpha", "beta", "gamma", "grid", "n_total", "method", "sim", "tolerances", "seed"},
      "");

  RunConfig config;
  config.params.alpha = require_number(doc, "alpha", "alpha");
  config.params.beta = require_number(doc, "beta", "beta");
  config.params.gamma = require_number(doc, "gamma", "gamma");
  try {
    validate_params(config.params);
  } catch (const InvalidParameter& e) {
    throw ValidationError(e.parameter, e.what());
  }

  parse_grid(doc, config);

  config.n_total = require_number(doc, "n_total", "n_total");
  if (!(config.n_total > 0.0) || !std::isfinite(config.n_total)) {
    throw ValidationError("n_total", "must be positive and finite");
  }

  if (doc.contains("method")) {
    if (!doc.at("method").is_string()) throw ValidationError("method", "must be a string");
    config.method = parse_method(doc.at("method").get<std::string>());
  }

  config.seed = require_uint(doc, "seed", "seed", config.seed, 0);
  parse_sim(doc, config);
  parse_tolerances(doc, config);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string method_name(Method method) {
  switch (method) {
    case Method::closed: return "closed";
    case Method::potential: return "potential";
    case Method::nbs: return "nbs";
    case Method::all: return "all";
  }
  return "all";
}

std::string protocol_name(dynamics::Protocol protocol) {
  return protocol == dynamics::Protocol::best_response ? "best_response" : "logit";
}

ordered_json config_to_json(const RunConfig& config) {
  ordered_json doc;
  doc["alpha"] = config.params.alpha;
  doc["beta"] = config.params.beta;
  doc["gamma"] = config.params.gamma;
  if (config.explicit_levels.has_value()) {
    doc["grid"] = {{"levels", *config.explicit_levels}};
  } else {
    doc["grid"] = {{"min", config.grid_range->min_salary},
                   {"max", config.grid_range->max_salary},
                   {"n", config.grid_range->n}};
  }
  doc["n_total"] = config.n_total;
  doc["method"] = method_name(config.method);
  doc["seed"] = config.seed;
  if (config.sim.has_value()) {
    doc["sim"] = {{"protocol", protocol_name(config.sim->protocol)},
                  {"temperature", config.sim->temperature},
                  {"steps", config.sim->steps},
                  {"burn_in", config.sim->burn_in},
                  {"snapshot_every", config.sim->snapshot_every},
                  {"seed", config.sim->seed}};
  }
  const Tolerances& t = config.tolerances;
  doc["tolerances"] = {{"fixed_point", t.fixed_point},
                       {"cross_method", t.cross_method},
                       {"sim_tv", t.sim_tv},
                       {"equal_utility", t.equal_utility},
                       {"kkt", t.kkt},
                       {"identity", t.identity},
                       {"payroll", t.payroll},
                       {"entropy_gap", t.entropy_gap},
                       {"shape", t.shape}};
  return doc;
}

}  // namespace lognash::cli
