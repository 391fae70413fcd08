#include "lognash/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lognash/closed_form.hpp"
#include "lognash/errors.hpp"

namespace lognash::potential {

namespace {

void check_level_count(std::size_t got, std::size_t want) {
  if (got != want) {
    throw DomainError("fraction vector has " + std::to_string(got) + " entries, grid has " +
                      std::to_string(want));
  }
}

void check_simplex(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0) || !std::isfinite(x[i])) {
      throw DomainError("fraction " + std::to_string(i) + " must be non-negative");
    }
    sum += x[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DomainError("fractions sum to " + std::to_string(sum) + ", not 1");
  }
}

void check_interior(std::span<const double> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) {
      throw DomainError("interior point required; fraction " + std::to_string(i) + " is zero");
    }
  }
}

}  // namespace

PotentialValue stirling_terms(std::span<const double> x, const SalaryGrid& grid,
                              const ModelParams& params) {
  check_level_count(x.size(), grid.size());
  double phi_u = 0.0, phi_v = 0.0, phi_w = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ls = grid.log_level(i);
    phi_u += x[i] * ls;
    phi_v += x[i] * ls * ls;
    if (x[i] > 0.0) phi_w += x[i] * std::log(x[i]);  // 0 ln 0 == 0
  }
  phi_u *= params.alpha;
  phi_v *= -params.beta;
  phi_w *= -params.gamma;
  return PotentialValue{phi_u + phi_v + phi_w, phi_u, phi_v, phi_w, Mode::stirling};
}

PotentialValue potential_value(std::span<const double> x, const SalaryGrid& grid,
                               const ModelParams& params, double n_total, Mode mode) {
  check_level_count(x.size(), grid.size());
  check_simplex(x);
  if (mode == Mode::stirling) {
    return stirling_terms(x, grid, params);
  }

  PotentialValue value = stirling_terms(x, grid, params);
  double occupied_lgamma = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double count = n_total * x[i];
    const double nearest = std::round(count);
    if (std::abs(count - nearest) > 1e-9) {
      throw NotIntegral("level " + std::to_string(i) + " occupancy " + std::to_string(count) +
                        " is not an integer");
    }
    occupied_lgamma += std::lgamma(nearest + 1.0);
  }
  value.phi_w = params.gamma / n_total * (std::lgamma(n_total + 1.0) - occupied_lgamma);
  value.total = value.phi_u + value.phi_v + value.phi_w;
  value.mode = Mode::exact_factorial;
  return value;
}

std::vector<double> potential_gradient(std::span<const double> x, const SalaryGrid& grid,
                                       const ModelParams& params, double n_total) {
  check_level_count(x.size(), grid.size());
  check_simplex(x);
  check_interior(x);
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    grad[i] = effective_utility(grid.level(i), n_total * x[i], params);
  }
  return grad;
}

std::vector<double> concavity_diagnostic(std::span<const double> x,
                                         const ModelParams& params) {
  check_interior(x);
  std::vector<double> diag(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diag[i] = -params.gamma / x[i];
  return diag;
}

MaximizeResult maximize_potential(const SalaryGrid& grid, const ModelParams& params,
                                  double n_total, double tol, int max_iters,
                                  std::optional<std::vector<double>> start) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (max_iters < 1) throw DomainError("need at least one iteration");
  if (!(n_total > 0.0)) throw DomainError("population must be positive");

  const std::size_t n = grid.size();
  std::vector<double> x;
  if (start.has_value()) {
    check_level_count(start->size(), n);
    check_simplex(*start);
    check_interior(*start);
    x = std::move(*start);
  } else {
    x.assign(n, 1.0 / static_cast<double>(n));
  }

  const std::vector<double> h0 = base_utilities(grid, params);
  MaximizeResult result;
  result.phi_trace.push_back(stirling_terms(x, grid, params).total);

  std::vector<double> exponents(n);
  for (int iter = 1; iter <= max_iters; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      const double h_i = h0[i] - params.gamma * std::log(n_total * x[i]);
      exponents[i] = std::log(x[i]) + h_i / params.gamma;
    }
    std::vector<double> next = closed_form::softmax(exponents);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(next[i] - x[i]));
    x = std::move(next);
    result.phi_trace.push_back(stirling_terms(x, grid, params).total);
    result.iterations = iter;
    if (diff <= tol) {
      result.converged = true;
      break;
    }
  }
  result.fractions = std::move(x);
  return result;
}

}  // namespace lognash::potential
