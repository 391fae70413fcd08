#include "lognash/fairness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lognash/closed_form.hpp"
#include "lognash/errors.hpp"
#include "lognash/nbs.hpp"
#include "lognash/potential.hpp"

namespace lognash::fairness {

DistributionMetrics metrics(std::span<const double> p) {
  if (p.empty()) throw DomainError("probability vector is empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0) || !std::isfinite(p[i])) {
      throw DomainError("probability " + std::to_string(i) + " must be non-negative");
    }
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DomainError("probabilities sum to " + std::to_string(sum) + ", not 1");
  }

  double entropy = 0.0;
  double product = 1.0;
  for (double v : p) {
    if (v > 0.0) {
      entropy -= v * std::log(v);
      product *= std::pow(v, v);
    }
    // v == 0 contributes 0 to the entropy and a factor 1 to the product.
  }
  const double log_n = std::log(static_cast<double>(p.size()));
  return DistributionMetrics{entropy, product, std::max(0.0, log_n - entropy)};
}

std::vector<double> random_simplex_point(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& v : p) {
    v = expo(rng);
    sum += v;
  }
  for (double& v : p) v /= sum;
  return p;
}

std::size_t amgm_property_check(std::size_t n, std::size_t samples, std::uint64_t seed) {
  if (n < 2) throw DomainError("AM-GM check needs at least two outcomes");
  if (samples < 1) throw DomainError("need at least one sample");
  std::mt19937_64 rng(seed);
  const double bound = 1.0 / static_cast<double>(n);
  std::size_t violations = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::vector<double> p = random_simplex_point(n, rng);
    const double wp = metrics(p).weighted_product;
    if (wp < bound * (1.0 - 1e-12)) ++violations;
  }
  return violations;
}

namespace {

double utility_spread(const Occupancy& occupancy, const SalaryGrid& grid,
                      const ModelParams& params) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < occupancy.size(); ++i) {
    const double h = effective_utility(grid.level(i), occupancy.count(i), params);
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  return hi - lo;
}

}  // namespace

EquivalenceReport compare_methods(const SalaryGrid& grid, const ModelParams& params,
                                  double n_total, double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");

  EquivalenceReport report;
  report.fraction_tolerance = tolerance;
  report.spread_tolerance = 1e-10;

  const closed_form::EquilibriumReport closed = closed_form::report(grid, params, n_total);
  const std::vector<double> closed_fractions = closed.occupancy.fractions();
  report.spread_closed = utility_spread(closed.occupancy, grid, params);

  const potential::MaximizeResult maximized =
      potential::maximize_potential(grid, params, n_total, 1e-12, 200);
  if (!maximized.converged) {
    throw NotConverged("potential maximizer did not converge", maximized.fractions);
  }
  report.gap_closed_potential = sup_gap(closed_fractions, maximized.fractions);
  {
    std::vector<double> counts(maximized.fractions.size());
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] = maximized.fractions[i] * n_total;
    report.spread_potential = utility_spread(Occupancy(std::move(counts), n_total), grid, params);
  }

  try {
    const nbs::NbsSolution solution = nbs::solve(grid, params, n_total);
    const std::vector<double> nbs_fractions = solution.occupancy.fractions();
    report.gap_closed_nbs = sup_gap(closed_fractions, nbs_fractions);
    report.gap_potential_nbs = sup_gap(maximized.fractions, nbs_fractions);
    report.spread_nbs = utility_spread(solution.occupancy, grid, params);
  } catch (const NonpositiveUtility& e) {
    report.nbs_error = e.what();
  }

  bool pass = !report.nbs_error.has_value();
  auto check_gap = [&](const std::optional<double>& gap, double tol) {
    if (gap.has_value() && !(*gap <= tol)) pass = false;
  };
  check_gap(report.gap_closed_potential, report.fraction_tolerance);
  check_gap(report.gap_closed_nbs, report.fraction_tolerance);
  check_gap(report.gap_potential_nbs, report.fraction_tolerance);
  check_gap(report.spread_closed, report.spread_tolerance);
  check_gap(report.spread_potential, report.spread_tolerance);
  check_gap(report.spread_nbs, report.spread_tolerance);
  report.pass = pass;
  return report;
}

EntropyDecomposition entropy_decomposition(const SalaryGrid& grid, const ModelParams& params,
                                           double n_total) {
  const Occupancy occupancy = closed_form::equilibrium_occupancy(grid, params, n_total);
  const std::vector<double> x = occupancy.fractions();
  const double entropy = metrics(x).entropy;
  const double phi_w =
      potential::potential_value(x, grid, params, n_total, potential::Mode::stirling).phi_w;
  const double scaled = phi_w / params.gamma;
  return EntropyDecomposition{entropy, scaled, std::abs(entropy - scaled)};
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw DomainError("vectors differ in length");
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
  return 0.5 * acc;
}

double sup_gap(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw DomainError("vectors differ in length");
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc = std::max(acc, std::abs(p[i] - q[i]));
  return acc;
}

}  // namespace lognash::fairness
