#ifndef LOGNASH_CLOSED_FORM_HPP
#define LOGNASH_CLOSED_FORM_HPP

#include <optional>
#include <span>
#include <vector>

#include "lognash/model.hpp"

namespace lognash::closed_form {

/// Everything the closed-form route knows about an equilibrium.
struct EquilibriumReport {
  Occupancy occupancy;          // N*_i
  double h_star = 0.0;          // common effective utility, gamma*(ln Z - ln N)
  double z = 0.0;               // partition function
  double lambda = 0.0;          // simplex Lagrange multiplier; equals h_star
  std::optional<double> mu;     // KKT multiplier, filled by the NBS route
  double m_total = 0.0;         // implied payroll sum N*_i S_i
  double h_total = 0.0;         // total utility H* = N h*
  double lognormal_mu = 0.0;    // (alpha+gamma)/(2 beta)
  double lognormal_sigma_sq = 0.0;  // gamma/(2 beta)
};

/// log(sum(exp(e_i))) with max-shift normalization.
double log_sum_exp(std::span<const double> exponents);

/// Max-shifted softmax; strictly positive entries summing to 1.
std::vector<double> softmax(std::span<const double> exponents);

/// Partition function Z = sum_i exp(h0_i / gamma). Throws OverflowError if
/// the result is not representable even though each term is.
double partition_function(const SalaryGrid& grid, const ModelParams& params);

/// Equilibrium occupancy N*_i = n_total * exp(h0_i/gamma) / Z.
Occupancy equilibrium_occupancy(const SalaryGrid& grid, const ModelParams& params,
                                double n_total);

/// Equilibrium effective utility h* = gamma*(ln z - ln n_total).
double equilibrium_utility(double z, double n_total, const ModelParams& params);

/// Full equilibrium report. The lognormal shape parameters come from matching
/// the equilibrium density x(S) ~ (1/S) exp(-(ln S - m)^2 / (gamma/beta)) to a
/// standard lognormal, whose exponent denominator is 2 sigma^2; hence
/// m = (alpha+gamma)/(2 beta) and sigma^2 = gamma/(2 beta).
EquilibriumReport report(const SalaryGrid& grid, const ModelParams& params, double n_total);

}  // namespace lognash::closed_form

#endif  // LOGNASH_CLOSED_FORM_HPP
