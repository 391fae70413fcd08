#include "lognash/model.hpp"

#include <cmath>
#include <string>

#include "lognash/errors.hpp"

namespace lognash {

void validate_params(const ModelParams& params) {
  auto check = [](double value, const char* name) {
    if (!std::isfinite(value)) {
      throw InvalidParameter(name, "must be finite, got " + std::to_string(value));
    }
    if (value <= 0.0) {
      throw InvalidParameter(name, "must be strictly positive, got " + std::to_string(value));
    }
  };
  check(params.alpha, "alpha");
  check(params.beta, "beta");
  check(params.gamma, "gamma");
}

SalaryGrid::SalaryGrid(std::vector<double> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) {
    throw InvalidGrid("salary grid needs at least one level");
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (!(levels_[i] > 0.0) || !std::isfinite(levels_[i])) {
      throw InvalidGrid("salary level " + std::to_string(i) + " must be positive and finite");
    }
    if (i > 0 && !(levels_[i] > levels_[i - 1])) {
      throw InvalidGrid("salary levels must be strictly increasing (violated at index " +
                        std::to_string(i) + ")");
    }
  }
  log_levels_.reserve(levels_.size());
  for (double s : levels_) log_levels_.push_back(std::log(s));
}

SalaryGrid build_salary_grid(double min_salary, double max_salary, std::size_t n) {
  if (!(min_salary > 0.0) || !std::isfinite(min_salary) || !std::isfinite(max_salary)) {
    throw InvalidGrid("salary endpoints must be positive and finite");
  }
  if (min_salary > max_salary) {
    throw InvalidGrid("min_salary must not exceed max_salary");
  }
  if (n == 0) {
    throw InvalidGrid("grid needs at least one level");
  }
  if (n == 1) {
    if (min_salary != max_salary) {
      throw InvalidGrid("a single-level grid requires min_salary == max_salary");
    }
    return SalaryGrid({min_salary});
  }
  if (min_salary == max_salary) {
    throw InvalidGrid("multi-level grid requires min_salary < max_salary");
  }
  const double log_min = std::log(min_salary);
  const double log_max = std::log(max_salary);
  std::vector<double> levels(n);
  levels.front() = min_salary;
  levels.back() = max_salary;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    levels[i] = std::exp(log_min + t * (log_max - log_min));
  }
  return SalaryGrid(std::move(levels));
}

Occupancy::Occupancy(std::vector<double> counts, double total)
    : counts_(std::move(counts)), total_(total) {
  if (counts_.empty()) {
    throw DomainError("occupancy needs at least one level");
  }
  if (!(total_ > 0.0) || !std::isfinite(total_)) {
    throw DomainError("occupancy total must be positive and finite");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (!(counts_[i] >= 0.0) || !std::isfinite(counts_[i])) {
      throw DomainError("occupancy count " + std::to_string(i) + " must be non-negative");
    }
    sum += counts_[i];
  }
  if (sum > total_ * (1.0 + 1e-9)) {
    throw DomainError("occupancy counts sum to " + std::to_string(sum) +
                      ", exceeding the population " + std::to_string(total_));
  }
}

std::vector<double> Occupancy::fractions() const {
  std::vector<double> x(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) x[i] = counts_[i] / total_;
  return x;
}

double base_utility(double salary, const ModelParams& params) {
  if (!(salary > 0.0)) {
    throw DomainError("salary must be positive, got " + std::to_string(salary));
  }
  const double ls = std::log(salary);
  return params.alpha * ls - params.beta * ls * ls;
}

double effective_utility(double salary, double n_occ, const ModelParams& params) {
  if (!(n_occ > 0.0)) {
    throw DomainError("occupancy must be positive, got " + std::to_string(n_occ));
  }
  return base_utility(salary, params) - params.gamma * std::log(n_occ);
}

std::vector<double> base_utilities(const SalaryGrid& grid, const ModelParams& params) {
  std::vector<double> h0(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ls = grid.log_level(i);
    h0[i] = params.alpha * ls - params.beta * ls * ls;
  }
  return h0;
}

}  // namespace lognash
