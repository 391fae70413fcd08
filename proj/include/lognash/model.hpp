#ifndef LOGNASH_MODEL_HPP
#define LOGNASH_MODEL_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace lognash {

/// Preference constants of the effective utility
///   h(S, N) = alpha*ln(S) - beta*(ln S)^2 - gamma*ln(N).
/// All three must be strictly positive and finite.
struct ModelParams {
  double alpha = 1.0;  // salary-utility weight
  double beta = 0.5;   // effort-disutility weight
  double gamma = 1.0;  // competition-disutility weight
};

/// Throws InvalidParameter naming the offending constant unless all three
/// constants are strictly positive and finite.
void validate_params(const ModelParams& params);

/// The n predetermined salary levels, strictly increasing, with cached logs.
/// Salaries carry no currency unit; every formula consumes ln(S), and levels
/// below 1 (negative logs) are legal.
class SalaryGrid {
 public:
  /// Builds from an explicit level list. Throws InvalidGrid unless the list
  /// is non-empty, strictly increasing, and all-positive.
  explicit SalaryGrid(std::vector<double> levels);

  std::size_t size() const { return levels_.size(); }
  double level(std::size_t i) const { return levels_[i]; }
  double log_level(std::size_t i) const { return log_levels_[i]; }
  std::span<const double> levels() const { return levels_; }
  std::span<const double> log_levels() const { return log_levels_; }

 private:
  std::vector<double> levels_;
  std::vector<double> log_levels_;
};

/// n levels log-uniformly spaced between the endpoints inclusive.
/// Requires 0 < min_salary <= max_salary and n >= 1; n == 1 additionally
/// requires min_salary == max_salary. Throws InvalidGrid otherwise.
SalaryGrid build_salary_grid(double min_salary, double max_salary, std::size_t n);

/// Population allocation across salary levels. Occupancies are non-negative
/// reals; integrality exists only inside the agent simulator.
class Occupancy {
 public:
  /// Throws DomainError unless total > 0, all counts >= 0, and the counts sum
  /// to at most total (1e-9 relative slack for solver round-off).
  Occupancy(std::vector<double> counts, double total);

  std::size_t size() const { return counts_.size(); }
  double count(std::size_t i) const { return counts_[i]; }
  std::span<const double> counts() const { return counts_; }
  double total() const { return total_; }

  /// Fractions view x_i = N_i / N.
  std::vector<double> fractions() const;

 private:
  std::vector<double> counts_;
  double total_;
};

/// Occupancy-independent part of the utility: alpha*ln(s) - beta*(ln s)^2.
/// Throws DomainError for s <= 0.
double base_utility(double salary, const ModelParams& params);

/// base_utility(s) - gamma*ln(n_occ). Throws DomainError for s <= 0 or
/// n_occ <= 0 (the log of an empty level is undefined).
double effective_utility(double salary, double n_occ, const ModelParams& params);

/// Base utilities h0_i for every level of the grid.
std::vector<double> base_utilities(const SalaryGrid& grid, const ModelParams& params);

}  // namespace lognash

#endif  // LOGNASH_MODEL_HPP
