#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "lognash/errors.hpp"
#include "lognash/lambert_w.hpp"
#include "lognash/report.hpp"

namespace lognash::cli {

using nlohmann::ordered_json;

namespace {

constexpr double kNotComputable = -1.0;  // observed value when a prerequisite failed

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<double> counts_from_fractions(const std::vector<double>& fractions, double n_total) {
  std::vector<double> counts(fractions.size());
  for (std::size_t i = 0; i < fractions.size(); ++i) counts[i] = fractions[i] * n_total;
  return counts;
}

std::vector<double> utilities_at(const Occupancy& occupancy, const SalaryGrid& grid,
                                 const ModelParams& params) {
  std::vector<double> h(occupancy.size());
  for (std::size_t i = 0; i < occupancy.size(); ++i) {
    h[i] = effective_utility(grid.level(i), occupancy.count(i), params);
  }
  return h;
}

void run_selected_methods(RunReport& report, const SalaryGrid& grid, const RunConfig& config) {
  const Method method = config.method;
  if (method == Method::closed || method == Method::all) {
    report.closed = closed_form::report(grid, config.params, config.n_total);
  }
  if (method == Method::potential || method == Method::all) {
    report.potential_result = potential::maximize_potential(
        grid, config.params, config.n_total, config.tolerances.fixed_point, 200);
    if (!report.potential_result->converged) {
      throw NotConverged("potential maximizer hit its iteration cap",
                         report.potential_result->fractions);
    }
  }
  if (method == Method::nbs || method == Method::all) {
    try {
      report.nbs_solution = nbs::solve(grid, config.params, config.n_total);
      if (report.closed.has_value()) report.closed->mu = report.nbs_solution->mu;
    } catch (const NonpositiveUtility& e) {
      if (method == Method::nbs) throw;
      report.nbs_error = e.what();
    }
  }
  if (method == Method::all) {
    report.equivalence =
        fairness::compare_methods(grid, config.params, config.n_total,
                                  config.tolerances.cross_method);
  }
}

// Least-squares fit of y against (1, ln S, (ln S)^2), computed on centered
// logs for conditioning and mapped back to raw coefficients.
struct QuadraticFit {
  double intercept = 0.0;
  double linear = 0.0;
  double quadratic = 0.0;
};

QuadraticFit fit_log_quadratic(std::span<const double> log_levels, std::span<const double> y) {
  const std::size_t n = log_levels.size();
  long double mean = 0.0L;
  for (double v : log_levels) mean += v;
  mean /= static_cast<long double>(n);

  long double s2 = 0, s3 = 0, s4 = 0, sy = 0, sty = 0, st2y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double t = log_levels[i] - mean;
    const long double t2 = t * t;
    s2 += t2;
    s3 += t2 * t;
    s4 += t2 * t2;
    sy += y[i];
    sty += t * y[i];
    st2y += t2 * y[i];
  }

  // Normal equations for y = c0 + c1 t + c2 t^2 (sum t = 0 by centering):
  //   [ n   0   s2 ] [c0]   [sy  ]
  //   [ 0   s2  s3 ] [c1] = [sty ]
  //   [ s2  s3  s4 ] [c2]   [st2y]
  long double a11 = static_cast<long double>(n), a13 = s2;
  long double a22 = s2, a23 = s3;
  long double a31 = s2, a32 = s3, a33 = s4;
  long double b1 = sy, b2 = sty, b3 = st2y;

  // Eliminate c0 from row 3.
  const long double f31 = a31 / a11;
  a32 -= 0.0L;  // row1 has no c1 term
  a33 -= f31 * a13;
  b3 -= f31 * b1;
  // Eliminate c1 from row 3.
  const long double f32 = a32 / a22;
  a33 -= f32 * a23;
  b3 -= f32 * b2;

  const long double c2 = b3 / a33;
  const long double c1 = (b2 - a23 * c2) / a22;
  const long double c0 = (b1 - a13 * c2) / a11;

  QuadraticFit fit;
  fit.quadratic = static_cast<double>(c2);
  fit.linear = static_cast<double>(c1 - 2.0L * c2 * mean);
  fit.intercept = static_cast<double>(c0 - c1 * mean + c2 * mean * mean);
  return fit;
}

// Fraction vector from the lognormal density form, evaluated in log space
// with the multiplier lambda supplied by the caller.
std::vector<double> lognormal_density_fractions(const SalaryGrid& grid, const ModelParams& params,
                                                double n_total, double lambda) {
  const double vertex = (params.alpha + params.gamma) / (2.0 * params.beta);
  const double quarter_term =
      (params.alpha + params.gamma) * (params.alpha + params.gamma) /
      (4.0 * params.beta * params.gamma);
  // D = N exp(lambda/gamma - (alpha+gamma)^2/(4 beta gamma)), evaluated in
  // log space so the completed square never overflows.
  const double log_d = std::log(n_total) + lambda / params.gamma - quarter_term;
  std::vector<double> x(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ls = grid.log_level(i);
    const double dev = ls - vertex;
    x[i] = std::exp(-ls - dev * dev / (params.gamma / params.beta) - log_d);
  }
  return x;
}

}  // namespace

RunReport cmd_solve(const RunConfig& config) {
  Stopwatch watch;
  RunReport report;
  report.command = "solve";
  report.config = config;
  const SalaryGrid grid = config.build_grid();
  run_selected_methods(report, grid, config);
  report.duration_seconds = watch.seconds();
  return report;
}

RunReport cmd_simulate(const RunConfig& config) {
  Stopwatch watch;
  RunReport report;
  report.command = "simulate";
  report.config = config;
  if (!report.config.sim.has_value()) report.config.sim = SimConfig{};
  const SimConfig& sim = *report.config.sim;

  const double rounded = std::round(config.n_total);
  if (std::abs(config.n_total - rounded) > 1e-9 || rounded < 1.0) {
    throw ValidationError("n_total", "the simulator needs a whole number of agents");
  }
  if (sim.burn_in >= sim.steps) {
    throw ValidationError("sim.burn_in",
                          "burn-in (" + std::to_string(sim.burn_in) +
                              ") must lie below the step count (" + std::to_string(sim.steps) +
                              ") or no snapshot survives the time average");
  }
  const auto n_agents = static_cast<std::size_t>(rounded);

  const SalaryGrid grid = config.build_grid();
  report.closed = closed_form::report(grid, config.params, config.n_total);

  dynamics::SimState state =
      dynamics::init_population(grid, n_agents, dynamics::Placement::uniform, sim.seed);
  SimSummary summary;
  summary.trace = dynamics::run(state, grid, config.params, sim.protocol, sim.temperature,
                                sim.steps, sim.snapshot_every);
  summary.n_agents = n_agents;
  summary.empirical_fractions = dynamics::empirical_distribution(summary.trace, sim.burn_in);
  summary.tv_to_closed_form = fairness::total_variation(
      summary.empirical_fractions, report.closed->occupancy.fractions());
  report.simulation = std::move(summary);
  report.duration_seconds = watch.seconds();
  return report;
}

RunReport cmd_verify(const RunConfig& config) {
  Stopwatch watch;
  RunReport report;
  report.command = "verify";
  report.config = config;
  const SalaryGrid grid = config.build_grid();
  const ModelParams& params = config.params;
  const Tolerances& tol = config.tolerances;
  const double n_total = config.n_total;

  VerifySummary verify;
  auto add_check = [&verify](const std::string& name, double tolerance, double observed,
                             bool pass) {
    verify.checks.push_back(VerifyCheck{name, tolerance, observed, pass});
  };

  report.closed = closed_form::report(grid, params, n_total);
  const closed_form::EquilibriumReport& closed = *report.closed;
  const std::vector<double> closed_fractions = closed.occupancy.fractions();
  const std::vector<double> closed_utilities = utilities_at(closed.occupancy, grid, params);

  report.potential_result =
      potential::maximize_potential(grid, params, n_total, tol.fixed_point, 200);

  try {
    report.nbs_solution = nbs::solve(grid, params, n_total);
    report.closed->mu = report.nbs_solution->mu;
  } catch (const NonpositiveUtility& e) {
    report.nbs_error = e.what();
  }

  // Route agreement.
  if (report.nbs_solution.has_value()) {
    const double gap =
        fairness::sup_gap(closed_fractions, report.nbs_solution->occupancy.fractions());
    add_check("nbs_ne_identity", tol.cross_method, gap, gap <= tol.cross_method);
  } else {
    add_check("nbs_ne_identity", tol.cross_method, kNotComputable, false);
  }
  {
    const double gap = fairness::sup_gap(closed_fractions, report.potential_result->fractions);
    add_check("potential_agreement", tol.cross_method, gap,
              report.potential_result->converged && gap <= tol.cross_method);
  }

  // Equal effective utility and the equilibrium-utility formula.
  {
    const auto [lo, hi] =
        std::minmax_element(closed_utilities.begin(), closed_utilities.end());
    const double spread = *hi - *lo;
    add_check("equal_effective_utility", tol.equal_utility, spread, spread <= tol.equal_utility);

    double worst = 0.0;
    for (double h : closed_utilities) {
      worst = std::max(worst, std::abs(h - closed.h_star));
    }
    worst /= std::max(1.0, std::abs(closed.h_star));
    add_check("equilibrium_utility_formula", tol.kkt, worst, worst <= tol.kkt);
  }

  add_check("lambda_equals_h_star", tol.kkt, std::abs(closed.lambda - closed.h_star),
            closed.lambda == closed.h_star);

  // The lognormal density form with lambda = h* must reproduce the fractions.
  {
    const std::vector<double> density =
        lognormal_density_fractions(grid, params, n_total, closed.lambda);
    double worst = 0.0;
    for (std::size_t i = 0; i < density.size(); ++i) {
      worst = std::max(worst, std::abs(density[i] - closed_fractions[i]) / closed_fractions[i]);
    }
    add_check("lognormal_density", tol.kkt, worst, worst <= tol.kkt);
  }

  if (grid.size() >= 3) {
    std::vector<double> log_fractions(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) log_fractions[i] = std::log(closed_fractions[i]);
    const QuadraticFit fit = fit_log_quadratic(grid.log_levels(), log_fractions);
    const double vertex_mu = params.gamma * (fit.linear + 1.0) / (2.0 * params.beta);
    const double worst = std::max({std::abs(fit.linear - params.alpha / params.gamma),
                                   std::abs(fit.quadratic + params.beta / params.gamma),
                                   std::abs(vertex_mu - closed.lognormal_mu)});
    add_check("lognormal_shape", tol.shape, worst, worst <= tol.shape);
  }

  // Aggregate identities.
  {
    long double independent_h = 0.0L;
    long double independent_m = 0.0L;
    for (std::size_t i = grid.size(); i-- > 0;) {
      independent_h += static_cast<long double>(closed.occupancy.count(i)) * closed_utilities[i];
      independent_m +=
          static_cast<long double>(closed.occupancy.count(i)) * grid.level(i);
    }
    const double h_gap =
        std::abs(closed.h_total - static_cast<double>(independent_h)) / std::abs(closed.h_total);
    add_check("total_utility_identity", tol.identity, h_gap, h_gap <= tol.identity);
    const double m_gap =
        std::abs(closed.m_total - static_cast<double>(independent_m)) / std::abs(closed.m_total);
    add_check("payroll_identity", tol.payroll, m_gap, m_gap <= tol.payroll);
  }

  // KKT and Lambert-W certificates of the bargaining route.
  if (report.nbs_solution.has_value()) {
    const nbs::NbsSolution& solution = *report.nbs_solution;
    const double roundtrip =
        std::abs(nbs::h_from_mu(solution.mu, params) - solution.h_star) / solution.h_star;
    add_check("lambert_roundtrip", tol.kkt, roundtrip, roundtrip <= tol.kkt);

    const std::vector<double> h = utilities_at(solution.occupancy, grid, params);
    double residual = 0.0;
    for (double hi : h) {
      residual = std::max(residual, std::abs(std::log(hi) - params.gamma / hi - solution.mu));
    }
    add_check("kkt_residual", tol.kkt, residual, residual <= tol.kkt);
    add_check("kkt_multiplier_positive", 0.0, solution.mu, solution.mu > 0.0);

    double count_sum = 0.0;
    for (std::size_t i = 0; i < solution.occupancy.size(); ++i) {
      count_sum += solution.occupancy.count(i);
    }
    const double binding_gap = std::abs(count_sum - n_total) / n_total;
    add_check("population_binding", tol.identity, binding_gap,
              solution.binding && binding_gap <= tol.identity);

    // Local maximality: epsilon mass transfers must strictly lower the
    // log Nash product. Donor levels must afford the full transfer.
    if (grid.size() >= 2) {
      const double base_lnp = solution.log_nash_product;
      const double eps = 1e-4 * n_total;
      std::vector<std::size_t> donors;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (solution.occupancy.count(i) > 2.0 * eps) donors.push_back(i);
      }
      std::mt19937_64 rng(config.seed);
      std::uniform_int_distribution<std::size_t> pick_donor(0, donors.size() - 1);
      std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
      double min_decrease = std::numeric_limits<double>::max();
      for (std::size_t trial = 0; trial < 16; ++trial) {
        const std::size_t from = donors[pick_donor(rng)];
        std::size_t to = pick(rng);
        if (from == to) to = (to + 1) % grid.size();
        std::vector<double> counts(solution.occupancy.counts().begin(),
                                   solution.occupancy.counts().end());
        counts[from] -= eps;
        counts[to] += eps;
        double decrease = std::numeric_limits<double>::infinity();
        try {
          const Occupancy perturbed(std::move(counts), n_total);
          decrease = base_lnp - nbs::log_nash_product(
                                    perturbed, utilities_at(perturbed, grid, params));
        } catch (const NonpositiveUtility&) {
          // Perturbation pushed a utility to the threat point: the Nash
          // product collapsed, which is a decrease.
        }
        min_decrease = std::min(min_decrease, decrease);
      }
      // A collapsed product is an unbounded decrease; keep the report finite.
      const double observed = std::isfinite(min_decrease) ? min_decrease : 1e300;
      add_check("nash_product_local_max", 0.0, observed, min_decrease > 0.0);
    }
  } else {
    add_check("lambert_roundtrip", tol.kkt, kNotComputable, false);
    add_check("kkt_residual", tol.kkt, kNotComputable, false);
  }

  // Entropy, product form, AM-GM.
  {
    const fairness::EntropyDecomposition decomposition =
        fairness::entropy_decomposition(grid, params, n_total);
    add_check("entropy_equals_phi_w", tol.entropy_gap, decomposition.gap,
              decomposition.gap <= tol.entropy_gap);
  }
  {
    std::mt19937_64 rng(config.seed + 1);
    double worst = 0.0;
    const std::size_t n_points = 1000;
    const std::size_t dim = std::max<std::size_t>(2, grid.size());
    for (std::size_t i = 0; i < n_points; ++i) {
      const std::vector<double> p = fairness::random_simplex_point(dim, rng);
      const fairness::DistributionMetrics m = fairness::metrics(p);
      worst = std::max(worst,
                       std::abs(m.weighted_product - std::exp(-m.entropy)) / m.weighted_product);
    }
    add_check("entropy_product_identity", 1e-12, worst, worst <= 1e-12);
  }
  {
    const std::size_t violations =
        fairness::amgm_property_check(std::max<std::size_t>(2, grid.size()), 10000,
                                      config.seed + 2);
    add_check("amgm_violations", 0.0, static_cast<double>(violations), violations == 0);
  }

  if (std::floor(n_total) >= static_cast<double>(grid.size())) {
    const nbs::ConvexityWitnessReport witness =
        nbs::convexity_witness(grid, params, n_total, 10000, config.seed + 3);
    add_check("convexity_violations", 0.0, static_cast<double>(witness.violations),
              witness.violations == 0);
  }

  if (report.nbs_solution.has_value()) {
    const nbs::AxiomProbeReport probes = nbs::axiom_probes(grid, params, n_total);
    const double worst =
        std::max({probes.symmetry_gap, probes.permutation_gap, probes.shift_occupancy_gap,
                  probes.shift_h_star_error});
    add_check("axiom_probes", 1e-10, worst, probes.pass);
  }

  verify.all_passed =
      std::all_of(verify.checks.begin(), verify.checks.end(),
                  [](const VerifyCheck& check) { return check.pass; });
  report.verify = std::move(verify);
  report.duration_seconds = watch.seconds();
  return report;
}

std::vector<RunReport> cmd_sweep(const RunConfig& config, const SweepSpec& sweep) {
  if (sweep.param != "alpha" && sweep.param != "beta" && sweep.param != "gamma" &&
      sweep.param != "n_total") {
    throw ValidationError("sweep-param",
                          "must be one of alpha, beta, gamma, n_total; got '" + sweep.param + "'");
  }
  if (sweep.values.empty()) {
    throw ValidationError("sweep-values", "needs at least one value");
  }

  std::vector<RunReport> reports;
  reports.reserve(sweep.values.size());
  for (double value : sweep.values) {
    RunConfig point = config;
    if (sweep.param == "alpha") point.params.alpha = value;
    if (sweep.param == "beta") point.params.beta = value;
    if (sweep.param == "gamma") point.params.gamma = value;
    if (sweep.param == "n_total") point.n_total = value;

    RunReport report;
    try {
      validate_params(point.params);
      if (!(point.n_total > 0.0)) {
        throw ValidationError("n_total", "must be positive");
      }
      report = cmd_solve(point);
    } catch (const Error& e) {
      report.command = "solve";
      report.config = point;
      report.error = e.what();
    }
    report.sweep_param = sweep.param;
    report.sweep_value = value;
    reports.push_back(std::move(report));
  }
  return reports;
}

namespace {

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

ordered_json occupancy_to_json(const Occupancy& occupancy) {
  const std::vector<double> counts(occupancy.counts().begin(), occupancy.counts().end());
  return ordered_json{{"total", occupancy.total()},
                      {"counts", counts},
                      {"fractions", occupancy.fractions()}};
}

ordered_json equilibrium_to_json(const closed_form::EquilibriumReport& rep) {
  ordered_json doc;
  doc["h_star"] = rep.h_star;
  doc["z"] = rep.z;
  doc["lambda"] = rep.lambda;
  doc["mu"] = rep.mu.has_value() ? ordered_json(*rep.mu) : ordered_json(nullptr);
  doc["m_total"] = rep.m_total;
  doc["h_total"] = rep.h_total;
  doc["lognormal_mu"] = rep.lognormal_mu;
  doc["lognormal_sigma_sq"] = rep.lognormal_sigma_sq;
  doc["occupancy"] = occupancy_to_json(rep.occupancy);
  return doc;
}

ordered_json optional_gap(const std::optional<double>& value) {
  return value.has_value() ? ordered_json(*value) : ordered_json(nullptr);
}

}  // namespace

ordered_json report_to_json(const RunReport& report) {
  ordered_json doc;
  doc["artifact"] = {{"name", kArtifactName}, {"version", kArtifactVersion}};
  doc["command"] = report.command;
  if (report.sweep_param.has_value()) {
    doc["sweep_param"] = *report.sweep_param;
    doc["sweep_value"] = *report.sweep_value;
  }
  doc["config"] = config_to_json(report.config);
  if (report.error.has_value()) {
    doc["error"] = *report.error;
  }

  ordered_json results;
  if (report.closed.has_value()) {
    results["closed_form"] = equilibrium_to_json(*report.closed);
  }
  if (report.potential_result.has_value()) {
    const potential::MaximizeResult& r = *report.potential_result;
    results["potential"] = {{"fractions", r.fractions},
                            {"converged", r.converged},
                            {"iterations", r.iterations},
                            {"phi_trace", r.phi_trace}};
  }
  if (report.nbs_solution.has_value()) {
    const nbs::NbsSolution& s = *report.nbs_solution;
    results["nbs"] = {{"h_star", s.h_star},
                      {"mu", s.mu},
                      {"log_nash_product", s.log_nash_product},
                      {"binding", s.binding},
                      {"occupancy", occupancy_to_json(s.occupancy)}};
  }
  if (report.nbs_error.has_value()) {
    results["nbs_error"] = *report.nbs_error;
  }
  if (report.equivalence.has_value()) {
    const fairness::EquivalenceReport& eq = *report.equivalence;
    ordered_json j;
    j["gap_closed_potential"] = optional_gap(eq.gap_closed_potential);
    j["gap_closed_nbs"] = optional_gap(eq.gap_closed_nbs);
    j["gap_potential_nbs"] = optional_gap(eq.gap_potential_nbs);
    j["spread_closed"] = optional_gap(eq.spread_closed);
    j["spread_potential"] = optional_gap(eq.spread_potential);
    j["spread_nbs"] = optional_gap(eq.spread_nbs);
    if (eq.nbs_error.has_value()) j["nbs_error"] = *eq.nbs_error;
    j["fraction_tolerance"] = eq.fraction_tolerance;
    j["spread_tolerance"] = eq.spread_tolerance;
    j["pass"] = eq.pass;
    results["equivalence"] = std::move(j);
  }
  if (report.simulation.has_value()) {
    const SimSummary& sim = *report.simulation;
    const dynamics::Snapshot& last = sim.trace.snapshots.back();
    results["simulation"] = {{"protocol", protocol_name(sim.trace.protocol)},
                             {"seed", sim.trace.seed},
                             {"n_agents", sim.n_agents},
                             {"snapshots_recorded", sim.trace.snapshots.size()},
                             {"final_step", last.step},
                             {"final_counts", last.counts},
                             {"final_utility_spread", sim.trace.utility_spread.back()},
                             {"empirical_fractions", sim.empirical_fractions},
                             {"tv_to_closed_form", sim.tv_to_closed_form},
                             {"ascent_checks", sim.trace.ascent_checks},
                             {"ascent_violations", sim.trace.ascent_violations}};
  }
  if (report.verify.has_value()) {
    ordered_json checks = ordered_json::array();
    for (const VerifyCheck& check : report.verify->checks) {
      checks.push_back({{"name", check.name},
                        {"tolerance", check.tolerance},
                        {"observed", check.observed},
                        {"pass", check.pass}});
    }
    results["verify"] = {{"all_passed", report.verify->all_passed},
                         {"checks", std::move(checks)}};
  }
  doc["results"] = std::move(results);
  doc["duration_seconds"] = report.duration_seconds;
  return doc;
}

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string csv_stem(const std::string& path) {
  if (path.size() > 4 && path.ends_with(".csv")) return path.substr(0, path.size() - 4);
  return path;
}

std::string occupancy_csv(const RunReport& report) {
  std::string text = "level_index,salary,log_salary,count,fraction,effective_utility\n";
  const Occupancy* occupancy = nullptr;
  std::optional<Occupancy> from_potential;
  if (report.closed.has_value()) {
    occupancy = &report.closed->occupancy;
  } else if (report.nbs_solution.has_value()) {
    occupancy = &report.nbs_solution->occupancy;
  } else if (report.potential_result.has_value()) {
    from_potential.emplace(
        counts_from_fractions(report.potential_result->fractions, report.config.n_total),
        report.config.n_total);
    occupancy = &*from_potential;
  }
  if (occupancy == nullptr) return text;

  const SalaryGrid grid = report.config.build_grid();
  for (std::size_t i = 0; i < occupancy->size(); ++i) {
    const double count = occupancy->count(i);
    const double h = count > 0.0
                         ? effective_utility(grid.level(i), count, report.config.params)
                         : 0.0;
    text += std::to_string(i) + ',' + format_double(grid.level(i)) + ',' +
            format_double(grid.log_level(i)) + ',' + format_double(count) + ',' +
            format_double(count / occupancy->total()) + ',' + format_double(h) + '\n';
  }
  return text;
}

std::string trace_csv(const RunReport& report) {
  std::string text = "step,level_index,count\n";
  if (!report.simulation.has_value()) return text;
  for (const dynamics::Snapshot& snap : report.simulation->trace.snapshots) {
    for (std::size_t i = 0; i < snap.counts.size(); ++i) {
      text += std::to_string(snap.step) + ',' + std::to_string(i) + ',' +
              std::to_string(snap.counts[i]) + '\n';
    }
  }
  return text;
}

}  // namespace

void write_report(const RunReport& report, ReportFormat format, const std::string& path) {
  if (format == ReportFormat::json) {
    const std::string text = report_to_json(report).dump(2) + "\n";
    if (path.empty()) {
      std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
      write_text(path, text);
    }
    return;
  }
  if (path.empty()) throw IoError("csv output needs an explicit --out path");
  const std::string stem = csv_stem(path);
  write_text(stem + "_occupancy.csv", occupancy_csv(report));
  write_text(stem + "_trace.csv", trace_csv(report));
}

void write_sweep(const std::vector<RunReport>& reports, ReportFormat format,
                 const std::string& path) {
  if (format == ReportFormat::json) {
    ordered_json doc;
    doc["artifact"] = {{"name", kArtifactName}, {"version", kArtifactVersion}};
    doc["command"] = "sweep";
    ordered_json points = ordered_json::array();
    for (const RunReport& report : reports) points.push_back(report_to_json(report));
    doc["reports"] = std::move(points);
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
      std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
      write_text(path, text);
    }
    return;
  }

  if (path.empty()) throw IoError("csv output needs an explicit --out path");
  std::string text =
      "sweep_param,sweep_value,status,h_star,z,m_total,h_total,entropy,lognormal_mu,"
      "lognormal_sigma_sq\n";
  for (const RunReport& report : reports) {
    text += report.sweep_param.value_or("") + ',' +
            format_double(report.sweep_value.value_or(0.0)) + ',';
    if (report.error.has_value() || !report.closed.has_value()) {
      text += "error,,,,,,,\n";
      continue;
    }
    const closed_form::EquilibriumReport& closed = *report.closed;
    const double entropy = fairness::metrics(closed.occupancy.fractions()).entropy;
    text += "ok," + format_double(closed.h_star) + ',' + format_double(closed.z) + ',' +
            format_double(closed.m_total) + ',' + format_double(closed.h_total) + ',' +
            format_double(entropy) + ',' + format_double(closed.lognormal_mu) + ',' +
            format_double(closed.lognormal_sigma_sq) + '\n';
  }
  write_text(csv_stem(path) + ".csv", text);
}

}  // namespace lognash::cli
