#ifndef LOGNASH_POTENTIAL_HPP
#define LOGNASH_POTENTIAL_HPP

#include <optional>
#include <span>
#include <vector>

#include "lognash/model.hpp"

namespace lognash::potential {

enum class Mode { stirling, exact_factorial };

/// Potential split into its salary, effort, and fairness terms. The additive
/// constant of the potential is fixed to zero, so total is exactly the sum of
/// the three terms.
struct PotentialValue {
  double total = 0.0;
  double phi_u = 0.0;  // alpha * sum x_i ln S_i
  double phi_v = 0.0;  // -beta * sum x_i (ln S_i)^2
  double phi_w = 0.0;  // fairness term; -gamma * sum x_i ln x_i in stirling mode
  Mode mode = Mode::stirling;
};

/// Stirling-form potential evaluated on an arbitrary positive vector, with no
/// simplex constraint. This is the raw formula behind potential_value and is
/// what coordinate-wise finite-difference probes must evaluate, since those
/// perturbations leave the simplex.
PotentialValue stirling_terms(std::span<const double> x, const SalaryGrid& grid,
                              const ModelParams& params);

/// Potential at a point of the population simplex (sum x_i = 1 within 1e-9,
/// x_i >= 0; DomainError otherwise). In exact_factorial mode every N*x_i must
/// be within 1e-9 of an integer (NotIntegral otherwise) and the fairness term
/// is (gamma/N) * [ln G(N+1) - sum ln G(N x_i + 1)] with G the Gamma function.
///
/// With the two-term Stirling form ln k! ~ k ln k - k, the exact fairness
/// term reduces to -gamma * sum x_i ln x_i with no leftover constant: the
/// linear terms cancel through sum x_i = 1. The gap that remains against the
/// true factorials is the higher-order Stirling remainder and vanishes as N
/// grows.
PotentialValue potential_value(std::span<const double> x, const SalaryGrid& grid,
                               const ModelParams& params, double n_total, Mode mode);

/// Gradient of the potential at an interior simplex point, reported in the
/// convention where entry i equals effective_utility(S_i, N*x_i) exactly.
/// The raw Stirling form's coordinate derivative is h0_i - gamma ln x_i -
/// gamma; the x-independent offset gamma*(ln N - 1) is absorbed here so that
/// the utility-is-the-gradient statement holds literally.
/// DomainError at the simplex boundary (any x_i = 0).
std::vector<double> potential_gradient(std::span<const double> x, const SalaryGrid& grid,
                                       const ModelParams& params, double n_total);

/// Diagonal of the potential's Hessian: -gamma / x_i per level, all strictly
/// negative on the interior. DomainError at the boundary.
std::vector<double> concavity_diagnostic(std::span<const double> x,
                                         const ModelParams& params);

struct MaximizeResult {
  std::vector<double> fractions;  // x*, sums to 1
  bool converged = false;         // sup-norm fixed-point tolerance met
  int iterations = 0;             // mirror steps taken
  std::vector<double> phi_trace;  // stirling potential at each iterate, start included
};

/// Maximizes the potential over the simplex by entropic mirror ascent,
/// x <- normalize(x * exp(h(x)/gamma)), which algebraically collapses to the
/// softmax fixed point x <- normalize(exp(h0/gamma)). Stops when successive
/// iterates differ by at most tol in sup-norm. Starts from the uniform
/// distribution unless an interior start is given.
MaximizeResult maximize_potential(const SalaryGrid& grid, const ModelParams& params,
                                  double n_total, double tol, int max_iters,
                                  std::optional<std::vector<double>> start = std::nullopt);

}  // namespace lognash::potential

#endif  // LOGNASH_POTENTIAL_HPP
