#include "lognash/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lognash/errors.hpp"

namespace lognash::closed_form {

double log_sum_exp(std::span<const double> exponents) {
  const double m = *std::max_element(exponents.begin(), exponents.end());
  double acc = 0.0;
  for (double e : exponents) acc += std::exp(e - m);
  return m + std::log(acc);
}

std::vector<double> softmax(std::span<const double> exponents) {
  const double m = *std::max_element(exponents.begin(), exponents.end());
  std::vector<double> p(exponents.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::exp(exponents[i] - m);
    acc += p[i];
  }
  for (double& v : p) v /= acc;
  return p;
}

namespace {

std::vector<double> scaled_base_utilities(const SalaryGrid& grid, const ModelParams& params) {
  std::vector<double> e = base_utilities(grid, params);
  for (double& v : e) v /= params.gamma;
  return e;
}

}  // namespace

double partition_function(const SalaryGrid& grid, const ModelParams& params) {
  const std::vector<double> exponents = scaled_base_utilities(grid, params);
  const double log_z = log_sum_exp(exponents);
  const double z = std::exp(log_z);
  if (!std::isfinite(z)) {
    throw OverflowError("partition function overflows: ln Z = " + std::to_string(log_z));
  }
  return z;
}

Occupancy equilibrium_occupancy(const SalaryGrid& grid, const ModelParams& params,
                                double n_total) {
  if (!(n_total > 0.0) || !std::isfinite(n_total)) {
    throw DomainError("population must be positive and finite");
  }
  const std::vector<double> exponents = scaled_base_utilities(grid, params);
  std::vector<double> counts = softmax(exponents);
  for (double& c : counts) c *= n_total;
  return Occupancy(std::move(counts), n_total);
}

double equilibrium_utility(double z, double n_total, const ModelParams& params) {
  if (!(z > 0.0)) throw DomainError("partition function must be positive");
  if (!(n_total > 0.0)) throw DomainError("population must be positive");
  return params.gamma * (std::log(z) - std::log(n_total));
}

EquilibriumReport report(const SalaryGrid& grid, const ModelParams& params, double n_total) {
  validate_params(params);
  const double z = partition_function(grid, params);
  Occupancy occupancy = equilibrium_occupancy(grid, params, n_total);

  double m_total = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    m_total += occupancy.count(i) * grid.level(i);
  }

  const double h_star = equilibrium_utility(z, n_total, params);
  EquilibriumReport rep{
      .occupancy = std::move(occupancy),
      .h_star = h_star,
      .z = z,
      .lambda = h_star,
      .mu = std::nullopt,
      .m_total = m_total,
      .h_total = n_total * h_star,
      .lognormal_mu = (params.alpha + params.gamma) / (2.0 * params.beta),
      .lognormal_sigma_sq = params.gamma / (2.0 * params.beta),
  };
  return rep;
}

}  // namespace lognash::closed_form
