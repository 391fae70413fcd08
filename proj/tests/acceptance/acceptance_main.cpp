// Acceptance suite: runs every contract criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero on any failure.
//
// Usage:
//   lognash_acceptance --cli <path-to-lognash-binary>
//                      --example-config <path-to-configs/example.json>
//                      --work-dir <scratch directory>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "lognash/closed_form.hpp"
#include "lognash/dynamics.hpp"
#include "lognash/errors.hpp"
#include "lognash/fairness.hpp"
#include "lognash/lambert_w.hpp"
#include "lognash/model.hpp"
#include "lognash/nbs.hpp"
#include "lognash/potential.hpp"

using namespace lognash;

namespace {

struct Outcome {
  std::string id;
  bool pass = false;
  std::string detail;
};

std::vector<Outcome> g_outcomes;

void record(const std::string& id, bool pass, const std::string& detail) {
  g_outcomes.push_back(Outcome{id, pass, detail});
  std::printf("[%s] %-28s %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string eng(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3g", v);
  return buffer;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct TestConfig {
  SalaryGrid grid;
  ModelParams params;
  double n_total;
};

// Configs drawn per the contract: n levels in [3, 64], coefficients in
// (0.1, 5), population placed so that h* > 0 with the KKT multiplier
// positive (h* above the root of ln h = gamma/h).
std::vector<TestConfig> make_configs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(0.1, 5.0);
  std::uniform_real_distribution<double> log_min(-1.0, 1.0);
  std::uniform_real_distribution<double> width(1.0, 5.0);
  std::uniform_int_distribution<std::size_t> levels(3, 64);
  std::uniform_real_distribution<double> margin(0.25, 2.5);

  std::vector<TestConfig> configs;
  configs.reserve(count);
  while (configs.size() < count) {
    const ModelParams params{coef(rng), coef(rng), coef(rng)};
    const double lo = log_min(rng);
    SalaryGrid grid = build_salary_grid(std::exp(lo), std::exp(lo + width(rng)), levels(rng));
    const double h_critical = params.gamma / lambert_w0(params.gamma).value;
    const double h_target = h_critical + margin(rng);
    const double n_total =
        closed_form::partition_function(grid, params) * std::exp(-h_target / params.gamma);
    configs.push_back(TestConfig{std::move(grid), params, n_total});
  }
  return configs;
}

std::vector<double> random_interior(std::size_t n, std::mt19937_64& rng, double floor_value) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(n);
  while (true) {
    double sum = 0.0;
    for (double& v : x) {
      v = -std::log(unit(rng));
      sum += v;
    }
    bool ok = true;
    for (double& v : x) {
      v /= sum;
      if (v < floor_value) ok = false;
    }
    if (ok) return x;
  }
}

// Quadratic least squares of y on (1, ln S, (ln S)^2), centered for
// conditioning. Independent of the library's fitting code.
struct Quadratic {
  double linear = 0.0;
  double quadratic = 0.0;
};

Quadratic fit_quadratic(std::span<const double> t_raw, std::span<const double> y) {
  const std::size_t n = t_raw.size();
  long double mean = 0.0L;
  for (double v : t_raw) mean += v;
  mean /= static_cast<long double>(n);

  long double s2 = 0, s3 = 0, s4 = 0, sy = 0, sty = 0, st2y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double t = t_raw[i] - mean;
    s2 += t * t;
    s3 += t * t * t;
    s4 += t * t * t * t;
    sy += y[i];
    sty += t * y[i];
    st2y += t * t * y[i];
  }
  const long double nn = static_cast<long double>(n);
  // Solve the centered normal equations by elimination.
  long double a33 = s4 - (s2 / nn) * s2;
  long double b3 = st2y - (s2 / nn) * sy;
  const long double f32 = s3 / s2;
  a33 -= f32 * s3;
  b3 -= f32 * sty;
  const long double c2 = b3 / a33;
  const long double c1 = (sty - s3 * c2) / s2;
  return Quadratic{static_cast<double>(c1 - 2.0L * c2 * mean), static_cast<double>(c2)};
}

void criterion_1_nbs_ne(const std::vector<TestConfig>& configs) {
  Stopwatch watch;
  double worst = 0.0;
  for (const TestConfig& c : configs) {
    const nbs::NbsSolution solution = nbs::solve(c.grid, c.params, c.n_total);
    const Occupancy reference = closed_form::equilibrium_occupancy(c.grid, c.params, c.n_total);
    worst = std::max(worst,
                     fairness::sup_gap(solution.occupancy.fractions(), reference.fractions()));
  }
  const double secs = watch.seconds();
  record("01 nbs-ne-identity", worst <= 1e-9 && secs < 5.0,
         "max sup gap " + eng(worst) + " (limit 1e-9) over " + std::to_string(configs.size()) +
             " configs in " + eng(secs) + " s (limit 5)");
}

void criterion_2_potential_route(const std::vector<TestConfig>& configs) {
  std::mt19937_64 rng(20240802);
  double worst = 0.0;
  bool all_converged = true;
  for (const TestConfig& c : configs) {
    const std::vector<double> reference =
        closed_form::equilibrium_occupancy(c.grid, c.params, c.n_total).fractions();
    for (int start = 0; start < 3; ++start) {
      const potential::MaximizeResult r =
          potential::maximize_potential(c.grid, c.params, c.n_total, 1e-12, 200,
                                        random_interior(c.grid.size(), rng, 1e-9));
      all_converged = all_converged && r.converged;
      worst = std::max(worst, fairness::sup_gap(r.fractions, reference));
    }
  }
  record("02 potential-agreement", all_converged && worst <= 1e-8,
         "max sup gap " + eng(worst) + " (limit 1e-8), 3 starts per config" +
             (all_converged ? "" : ", NON-CONVERGED RUNS"));
}

void criterion_3_equal_utility(const std::vector<TestConfig>& configs) {
  double worst_spread = 0.0;
  double worst_formula = 0.0;
  for (const TestConfig& c : configs) {
    // Occupancies from all three routes; each must equalize utilities.
    std::vector<std::vector<double>> occupancies;
    {
      const Occupancy occ = closed_form::equilibrium_occupancy(c.grid, c.params, c.n_total);
      occupancies.push_back(std::vector<double>(occ.counts().begin(), occ.counts().end()));
    }
    {
      const nbs::NbsSolution s = nbs::solve(c.grid, c.params, c.n_total);
      occupancies.push_back(
          std::vector<double>(s.occupancy.counts().begin(), s.occupancy.counts().end()));
    }
    {
      const potential::MaximizeResult r =
          potential::maximize_potential(c.grid, c.params, c.n_total, 1e-12, 200);
      std::vector<double> counts(r.fractions.size());
      for (std::size_t i = 0; i < counts.size(); ++i) counts[i] = r.fractions[i] * c.n_total;
      occupancies.push_back(std::move(counts));
    }

    // Independent direct-sum partition function for the formula check.
    double z_direct = 0.0;
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
      z_direct += std::exp(base_utility(c.grid.level(i), c.params) / c.params.gamma);
    }
    const double h_formula =
        c.params.gamma * (std::log(z_direct) - std::log(c.n_total));

    for (const std::vector<double>& counts : occupancies) {
      double lo = 1e300, hi = -1e300;
      for (std::size_t i = 0; i < c.grid.size(); ++i) {
        const double h = effective_utility(c.grid.level(i), counts[i], c.params);
        lo = std::min(lo, h);
        hi = std::max(hi, h);
        worst_formula = std::max(
            worst_formula, std::abs(h - h_formula) / std::max(1.0, std::abs(h_formula)));
      }
      worst_spread = std::max(worst_spread, hi - lo);
    }
  }
  record("03 equal-effective-utility", worst_spread <= 1e-10 && worst_formula <= 1e-10,
         "max spread " + eng(worst_spread) +
             " (limit 1e-10, all 3 routes), max |h - (g lnZ - g lnN)|/|h*| " +
             eng(worst_formula) + " (limit 1e-10)");
}

void criterion_4_lognormal_shape(const std::vector<TestConfig>& configs) {
  double worst_coef = 0.0;
  double worst_vertex = 0.0;
  for (const TestConfig& c : configs) {
    const std::vector<double> fractions =
        closed_form::equilibrium_occupancy(c.grid, c.params, c.n_total).fractions();
    std::vector<double> log_fractions(fractions.size());
    for (std::size_t i = 0; i < fractions.size(); ++i) {
      log_fractions[i] = std::log(fractions[i]);
    }
    const Quadratic fit = fit_quadratic(c.grid.log_levels(), log_fractions);
    worst_coef = std::max({worst_coef, std::abs(fit.linear - c.params.alpha / c.params.gamma),
                           std::abs(fit.quadratic + c.params.beta / c.params.gamma)});
    // Vertex of the density form including the 1/S factor: the fitted
    // linear coefficient b1 satisfies b1 = 2 m beta/gamma - 1.
    const double vertex = c.params.gamma * (fit.linear + 1.0) / (2.0 * c.params.beta);
    const double reported = (c.params.alpha + c.params.gamma) / (2.0 * c.params.beta);
    worst_vertex = std::max(worst_vertex, std::abs(vertex - reported));
  }
  record("04 lognormal-shape", worst_coef <= 1e-8 && worst_vertex <= 1e-8,
         "max coefficient error " + eng(worst_coef) + ", max vertex error " + eng(worst_vertex) +
             " (limits 1e-8)");
}

void criterion_5_lambert_route(const std::vector<TestConfig>& configs) {
  double worst_roundtrip = 0.0;
  for (const TestConfig& c : configs) {
    const nbs::NbsSolution solution = nbs::solve(c.grid, c.params, c.n_total);
    const double back = nbs::h_from_mu(solution.mu, c.params);
    worst_roundtrip =
        std::max(worst_roundtrip, std::abs(back - solution.h_star) / solution.h_star);
  }

  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> small(-std::exp(-1.0), 2.0);
  std::uniform_real_distribution<double> log_large(std::log(2.0), std::log(1e6));
  double worst_residual = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double x = (i % 2 == 0) ? small(rng) : std::exp(log_large(rng));
    worst_residual =
        std::max(worst_residual, lambert_w0(x).residual / std::max(1.0, std::abs(x)));
  }
  record("05 lambert-w-route", worst_roundtrip <= 1e-10 && worst_residual <= 1e-12,
         "max h_from_mu round-trip " + eng(worst_roundtrip) +
             " (limit 1e-10), max W residual " + eng(worst_residual) +
             " (limit 1e-12, 1e5 points)");
}

void criterion_6_kkt(const std::vector<TestConfig>& configs) {
  std::mt19937_64 rng(60606);
  double worst_residual = 0.0;
  double worst_binding = 0.0;
  double min_mu = 1e300;
  double min_decrease = 1e300;
  for (const TestConfig& c : configs) {
    const nbs::NbsSolution solution = nbs::solve(c.grid, c.params, c.n_total);
    min_mu = std::min(min_mu, solution.mu);

    double count_sum = 0.0;
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
      const double h = effective_utility(c.grid.level(i), solution.occupancy.count(i), c.params);
      worst_residual = std::max(
          worst_residual, std::abs(std::log(h) - c.params.gamma / h - solution.mu));
      count_sum += solution.occupancy.count(i);
    }
    worst_binding = std::max(worst_binding, std::abs(count_sum - c.n_total) / c.n_total);

    // Long-double evaluation of sum N_i ln h_i on both sides keeps the
    // strict-decrease sign out of accumulation noise; the decrease itself
    // is O(eps^2) and can sit far below |g| in double.
    const double eps = 1e-4 * c.n_total;
    auto log_nash = [&](std::span<const double> counts) -> long double {
      long double acc = 0.0L;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        const double h = effective_utility(c.grid.level(i), counts[i], c.params);
        if (h <= 0.0) return -std::numeric_limits<long double>::infinity();
        acc += static_cast<long double>(counts[i]) *
               static_cast<long double>(std::log(h));
      }
      return acc;
    };
    const std::vector<double> base_counts(solution.occupancy.counts().begin(),
                                          solution.occupancy.counts().end());
    const long double base_lnp = log_nash(base_counts);
    std::vector<std::size_t> donors;
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
      if (solution.occupancy.count(i) > 2.0 * eps) donors.push_back(i);
    }
    std::uniform_int_distribution<std::size_t> pick_donor(0, donors.size() - 1);
    std::uniform_int_distribution<std::size_t> pick(0, c.grid.size() - 1);
    for (int trial = 0; trial < 4; ++trial) {
      const std::size_t from = donors[pick_donor(rng)];
      std::size_t to = pick(rng);
      if (from == to) to = (to + 1) % c.grid.size();
      std::vector<double> counts = base_counts;
      counts[from] -= eps;
      counts[to] += eps;
      const long double perturbed = log_nash(counts);
      if (std::isinf(static_cast<double>(perturbed))) continue;  // collapsed
      min_decrease = std::min(min_decrease, static_cast<double>(base_lnp - perturbed));
    }
  }
  record("06 kkt-certificate",
         worst_residual <= 1e-10 && min_mu > 0.0 && worst_binding <= 1e-9 && min_decrease > 0.0,
         "max |ln h - g/h - mu| " + eng(worst_residual) + " (limit 1e-10), min mu " +
             eng(min_mu) + ", max |sum N - N|/N " + eng(worst_binding) +
             " (limit 1e-9), min transfer decrease " + eng(min_decrease));
}

void criterion_7_entropy_chain(const std::vector<TestConfig>& configs) {
  double worst_gap = 0.0;
  for (const TestConfig& c : configs) {
    worst_gap =
        std::max(worst_gap, fairness::entropy_decomposition(c.grid, c.params, c.n_total).gap);
  }

  std::mt19937_64 rng(70707);
  std::uniform_int_distribution<std::size_t> dims(2, 100);
  double worst_product = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const fairness::DistributionMetrics m =
        fairness::metrics(fairness::random_simplex_point(dims(rng), rng));
    worst_product = std::max(
        worst_product, std::abs(m.weighted_product - std::exp(-m.entropy)) / m.weighted_product);
  }

  std::size_t violations = 0;
  for (std::size_t n : {std::size_t{2}, std::size_t{10}, std::size_t{100}}) {
    violations += fairness::amgm_property_check(n, 10000, 700 + n);
  }
  record("07 entropy-potential-product",
         worst_gap <= 1e-10 && worst_product <= 1e-12 && violations == 0,
         "max |entropy - phi_w/g| " + eng(worst_gap) + " (limit 1e-10), max product gap " +
             eng(worst_product) + " (limit 1e-12), AM-GM violations " +
             std::to_string(violations));
}

void criterion_8_convexity() {
  std::mt19937_64 rng(80808);
  std::uniform_real_distribution<double> coef(0.1, 5.0);
  std::uniform_int_distribution<std::size_t> levels(2, 16);
  std::size_t violations = 0;
  std::size_t samples = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const ModelParams params{coef(rng), coef(rng), coef(rng)};
    const std::size_t n = levels(rng);
    const SalaryGrid grid = build_salary_grid(1.0, 200.0, n);
    std::uniform_real_distribution<double> pop(static_cast<double>(n),
                                               static_cast<double>(n) + 500.0);
    const nbs::ConvexityWitnessReport report =
        nbs::convexity_witness(grid, params, pop(rng), 10000, 800 + trial);
    violations += report.violations;
    samples += report.samples;
  }
  record("08 utility-set-convexity", violations == 0,
         std::to_string(violations) + " violations over " + std::to_string(samples) +
             " sampled pairs on 10 configs");
}

void criterion_9_gradient_concavity() {
  std::mt19937_64 rng(90909);
  std::uniform_real_distribution<double> coef(0.1, 5.0);
  std::uniform_int_distribution<std::size_t> levels(2, 8);
  double worst_grad = 0.0;
  double worst_hess = 0.0;
  for (int point = 0; point < 100; ++point) {
    const ModelParams p{coef(rng), coef(rng), coef(rng)};
    const std::size_t n = levels(rng);
    const SalaryGrid grid = build_salary_grid(1.0, std::exp(3.0), n);
    const double n_total = 20.0;
    const std::vector<double> x = random_interior(n, rng, 0.05);
    const std::vector<double> g = potential::potential_gradient(x, grid, p, n_total);

    // Gradient: central differences along simplex directions e_i - e_j,
    // where the constant Stirling offset cancels.
    {
      const double h = 1e-6;
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      const std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      if (i == j) j = (j + 1) % n;
      std::vector<double> plus = x, minus = x;
      plus[i] += h;
      plus[j] -= h;
      minus[i] -= h;
      minus[j] += h;
      const double fd =
          (potential::potential_value(plus, grid, p, n_total, potential::Mode::stirling).total -
           potential::potential_value(minus, grid, p, n_total, potential::Mode::stirling).total) /
          (2.0 * h);
      worst_grad = std::max(worst_grad, std::abs(fd - (g[i] - g[j])));
    }

    // Hessian diagonal: coordinate second differences of the raw Stirling
    // form against -gamma/x_i.
    {
      const double h = 5e-4;
      const std::vector<double> diag = potential::concavity_diagnostic(x, p);
      const double base = potential::stirling_terms(x, grid, p).total;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> plus = x, minus = x;
        plus[i] += h;
        minus[i] -= h;
        const double fd = (potential::stirling_terms(plus, grid, p).total - 2.0 * base +
                           potential::stirling_terms(minus, grid, p).total) /
                          (h * h);
        worst_hess = std::max(worst_hess, std::abs(fd - diag[i]) / std::abs(diag[i]));
      }
    }
  }
  record("09 gradient-concavity", worst_grad <= 1e-6 && worst_hess <= 1e-4,
         "max gradient FD error " + eng(worst_grad) + " (limit 1e-6), max Hessian FD error " +
             eng(worst_hess) + " rel (limit 1e-4), 100 points");
}

void criterion_10_simulation() {
  Stopwatch watch;
  const SalaryGrid grid = build_salary_grid(1.0, std::exp(6.0), 10);
  const ModelParams p{2.0, 0.5, 1.0};
  const std::vector<double> theory =
      closed_form::equilibrium_occupancy(grid, p, 1000.0).fractions();

  int seeds_ok = 0;
  double worst_tv = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    dynamics::SimState state =
        dynamics::init_population(grid, 1000, dynamics::Placement::uniform, seed);
    const dynamics::SimulationTrace trace =
        dynamics::run(state, grid, p, dynamics::Protocol::logit, 1.0, 1000000, 100);
    const double tv =
        fairness::total_variation(dynamics::empirical_distribution(trace, 100000), theory);
    worst_tv = std::max(worst_tv, tv);
    if (tv <= 0.05) ++seeds_ok;
  }

  std::uint64_t ascent_checks = 0;
  std::uint64_t ascent_violations = 0;
  for (std::uint64_t seed = 100; seed < 105; ++seed) {
    dynamics::SimState state = dynamics::init_population(
        grid, 1000, seed % 2 == 0 ? dynamics::Placement::all_at_lowest
                                  : dynamics::Placement::uniform,
        seed);
    const dynamics::SimulationTrace trace = dynamics::run(
        state, grid, p, dynamics::Protocol::best_response, 1.0, 30000, 30000, true);
    ascent_checks += trace.ascent_checks;
    ascent_violations += trace.ascent_violations;
  }
  const double secs = watch.seconds();
  record("10 simulation-convergence",
         seeds_ok >= 18 && ascent_violations == 0 && secs < 60.0,
         std::to_string(seeds_ok) + "/20 seeds with TV <= 0.05 (worst " + eng(worst_tv) +
             "), ascent violations " + std::to_string(ascent_violations) + "/" +
             std::to_string(ascent_checks) + ", " + eng(secs) + " s (limit 60)");
}

void criterion_11_aggregates(const std::vector<TestConfig>& configs) {
  double worst_h = 0.0;
  double worst_m = 0.0;
  for (const TestConfig& c : configs) {
    const closed_form::EquilibriumReport report =
        closed_form::report(c.grid, c.params, c.n_total);
    long double h_sum = 0.0L;
    long double m_sum = 0.0L;
    for (std::size_t i = c.grid.size(); i-- > 0;) {
      h_sum += static_cast<long double>(report.occupancy.count(i)) *
               effective_utility(c.grid.level(i), report.occupancy.count(i), c.params);
      m_sum += static_cast<long double>(report.occupancy.count(i)) * c.grid.level(i);
    }
    worst_h = std::max(worst_h, std::abs(report.h_total - static_cast<double>(h_sum)) /
                                    std::abs(report.h_total));
    worst_m = std::max(worst_m, std::abs(report.m_total - static_cast<double>(m_sum)) /
                                    std::abs(report.m_total));
  }
  record("11 aggregate-identities", worst_h <= 1e-9 && worst_m <= 1e-12,
         "max H* gap " + eng(worst_h) + " (limit 1e-9), max payroll gap " + eng(worst_m) +
             " (limit 1e-12)");
}

void criterion_12_cli(const std::string& cli, const std::string& example_config,
                      const std::string& work_dir) {
  const std::string report_path = work_dir + "/acceptance_verify_report.json";
  const std::string command =
      "'" + cli + "' verify --config '" + example_config + "' --out '" + report_path + "'";
  const int status = std::system(command.c_str());
  const bool exit_ok = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;

  bool roundtrip_ok = false;
  bool checks_ok = false;
  std::string note;
  try {
    std::ifstream in(report_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const nlohmann::json original = nlohmann::json::parse(buffer.str());
    const nlohmann::json reparsed = nlohmann::json::parse(original.dump());
    roundtrip_ok = reparsed == original && reparsed.dump() == original.dump();
    checks_ok = original.at("results").at("verify").at("all_passed").get<bool>();
  } catch (const std::exception& e) {
    note = std::string("; report error: ") + e.what();
  }
  record("12 cli-verify-roundtrip", exit_ok && roundtrip_ok && checks_ok,
         std::string("exit ") + (exit_ok ? "0" : "nonzero") + ", round-trip " +
             (roundtrip_ok ? "bit-exact" : "MISMATCH") + ", checks " +
             (checks_ok ? "all passed" : "FAILED") + note);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::string example_config;
  std::string work_dir = ".";
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") cli = argv[i + 1];
    if (flag == "--example-config") example_config = argv[i + 1];
    if (flag == "--work-dir") work_dir = argv[i + 1];
  }

  const std::vector<TestConfig> configs = make_configs(100, 20240801);

  criterion_1_nbs_ne(configs);
  criterion_2_potential_route(configs);
  criterion_3_equal_utility(configs);
  criterion_4_lognormal_shape(configs);
  criterion_5_lambert_route(configs);
  criterion_6_kkt(configs);
  criterion_7_entropy_chain(configs);
  criterion_8_convexity();
  criterion_9_gradient_concavity();
  criterion_10_simulation();
  criterion_11_aggregates(configs);
  if (!cli.empty() && !example_config.empty()) {
    criterion_12_cli(cli, example_config, work_dir);
  } else {
    record("12 cli-verify-roundtrip", false, "missing --cli/--example-config arguments");
  }

  std::size_t failures = 0;
  for (const Outcome& o : g_outcomes) failures += o.pass ? 0 : 1;
  std::printf("%zu/%zu criteria passed\n", g_outcomes.size() - failures, g_outcomes.size());
  return failures == 0 ? 0 : 1;
}
