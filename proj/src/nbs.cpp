#include "lognash/nbs.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "lognash/closed_form.hpp"
#include "lognash/errors.hpp"
#include "lognash/lambert_w.hpp"

namespace lognash::nbs {

double log_nash_product(const Occupancy& occupancy, std::span<const double> utilities) {
  if (occupancy.size() != utilities.size()) {
    throw DomainError("occupancy and utility vectors differ in length");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    if (!(utilities[i] > 0.0)) {
      throw NonpositiveUtility("utility at level " + std::to_string(i) + " is " +
                                   std::to_string(utilities[i]) +
                                   "; the Nash product needs h_i > 0",
                               static_cast<int>(i));
    }
    acc += occupancy.count(i) * std::log(utilities[i]);
  }
  return acc;
}

double h_from_mu(double mu, const ModelParams& params) {
  validate_params(params);
  const double arg = params.gamma * std::exp(-mu);
  if (!std::isfinite(arg)) {
    throw OverflowError("h_from_mu: gamma*exp(-mu) overflows for mu = " + std::to_string(mu));
  }
  return params.gamma / lambert_w0(arg).value;
}

NbsSolution solve(const SalaryGrid& grid, const ModelParams& params, double n_total) {
  validate_params(params);
  if (!(n_total > 0.0) || !std::isfinite(n_total)) {
    throw DomainError("population must be positive and finite");
  }

  const std::vector<double> h0 = base_utilities(grid, params);
  std::vector<double> exponents(h0.size());
  for (std::size_t i = 0; i < h0.size(); ++i) exponents[i] = h0[i] / params.gamma;
  const double log_z = closed_form::log_sum_exp(exponents);
  const double h_star = params.gamma * (log_z - std::log(n_total));

  if (!(h_star > 0.0)) {
    throw NonpositiveUtility(
        "equilibrium utility h* = " + std::to_string(h_star) +
            " does not dominate the zero threat point; raise salaries or gamma, or lower N",
        -1);
  }
  const double mu = std::log(h_star) - params.gamma / h_star;

  // Occupancy from the equal-utility condition h0_i - gamma ln N_i = h*.
  // Normalization is not imposed; sum N_i = N emerges from the value of h*.
  std::vector<double> counts(h0.size());
  for (std::size_t i = 0; i < h0.size(); ++i) {
    counts[i] = std::exp((h0[i] - h_star) / params.gamma);
  }
  Occupancy occupancy(std::move(counts), n_total);

  std::vector<double> utilities(h0.size());
  for (std::size_t i = 0; i < h0.size(); ++i) {
    utilities[i] = effective_utility(grid.level(i), occupancy.count(i), params);
  }
  const double lnp = log_nash_product(occupancy, utilities);

  return NbsSolution{
      .occupancy = std::move(occupancy),
      .h_star = h_star,
      .mu = mu,
      .log_nash_product = lnp,
      .binding = true,
  };
}

namespace {

// Random occupancy with every level at least 1 and total at most budget.
std::vector<double> draw_occupancy(std::size_t n, double budget, std::mt19937_64& rng) {
  const auto cap = static_cast<long long>(std::floor(budget));
  std::uniform_int_distribution<long long> total_dist(static_cast<long long>(n), cap);
  const long long target = total_dist(rng);
  const long long extra_budget = target - static_cast<long long>(n);

  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(n);
  double weight_sum = 0.0;
  for (double& w : weights) {
    w = expo(rng);
    weight_sum += w;
  }

  std::vector<double> counts(n);
  for (std::size_t i = 0; i < n; ++i) {
    counts[i] = 1.0 + std::floor(weights[i] / weight_sum * static_cast<double>(extra_budget));
  }
  return counts;
}

}  // namespace

ConvexityWitnessReport convexity_witness(const SalaryGrid& grid, const ModelParams& params,
                                         double n_total, std::size_t samples,
                                         std::uint64_t seed) {
  validate_params(params);
  if (samples < 1) throw DomainError("need at least one sample");
  const std::size_t n = grid.size();
  if (std::floor(n_total) < static_cast<double>(n)) {
    throw DomainError("population " + std::to_string(n_total) + " cannot place one agent on each of " +
                      std::to_string(n) + " levels");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  ConvexityWitnessReport report;
  report.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::vector<double> first = draw_occupancy(n, n_total, rng);
    const std::vector<double> second = draw_occupancy(n, n_total, rng);
    const double t = unit(rng);
    double combined = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      combined += std::exp(t * std::log(first[i]) + (1.0 - t) * std::log(second[i]));
    }
    report.max_combined_total = std::max(report.max_combined_total, combined);
    // 1e-12 relative slack: the log/exp round trip can land an ulp above an
    // exactly saturated total.
    if (combined > n_total * (1.0 + 1e-12)) ++report.violations;
  }
  return report;
}

AxiomProbeReport axiom_probes(const SalaryGrid& grid, const ModelParams& params,
                              double n_total) {
  const NbsSolution base = solve(grid, params, n_total);
  const std::vector<double> h0 = base_utilities(grid, params);
  const std::size_t n = h0.size();

  std::vector<double> exponents(n);
  for (std::size_t i = 0; i < n; ++i) exponents[i] = h0[i] / params.gamma;
  const std::vector<double> fractions = closed_form::softmax(exponents);

  AxiomProbeReport report;

  // Symmetry: append a duplicate of the first salary level; the two copies
  // must receive identical fractions.
  {
    std::vector<double> dup(exponents.begin(), exponents.end());
    dup.push_back(exponents.front());
    const std::vector<double> f = closed_form::softmax(dup);
    report.symmetry_gap = std::abs(f.front() - f.back());
  }

  // Relabeling: solving the reversed level list and un-reversing must
  // reproduce the original fractions.
  {
    std::vector<double> reversed(exponents.rbegin(), exponents.rend());
    std::vector<double> f = closed_form::softmax(reversed);
    std::reverse(f.begin(), f.end());
    double gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) gap = std::max(gap, std::abs(f[i] - fractions[i]));
    report.permutation_gap = gap;
  }

  // Scale invariance of the argmax: h0 + c moves h* by c and nothing else.
  {
    const double c = 1.0;
    std::vector<double> shifted(n);
    for (std::size_t i = 0; i < n; ++i) shifted[i] = (h0[i] + c) / params.gamma;
    const std::vector<double> f = closed_form::softmax(shifted);
    double gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) gap = std::max(gap, std::abs(f[i] - fractions[i]));
    report.shift_occupancy_gap = gap;

    const double shifted_h_star =
        params.gamma * (closed_form::log_sum_exp(shifted) - std::log(n_total));
    report.shift_h_star_error = std::abs((shifted_h_star - base.h_star) - c);
  }

  report.pass = report.symmetry_gap <= 1e-12 && report.permutation_gap <= 1e-12 &&
                report.shift_occupancy_gap <= 1e-10 && report.shift_h_star_error <= 1e-10;
  return report;
}

}  // namespace lognash::nbs
