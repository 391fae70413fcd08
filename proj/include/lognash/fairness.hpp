#ifndef LOGNASH_FAIRNESS_HPP
#define LOGNASH_FAIRNESS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lognash/model.hpp"

namespace lognash::fairness {

/// Entropy-family metrics of a probability vector.
struct DistributionMetrics {
  double entropy = 0.0;           // -sum p_i ln p_i
  double weighted_product = 0.0;  // prod p_i^{p_i}, in (0, 1]
  double uniform_gap = 0.0;       // ln n - entropy, 0 iff uniform
};

/// Agreement report for the three solution routes. Gaps are sup-norm
/// distances between fraction vectors, the closed form serving as reference;
/// spreads are max_i h_i - min_i h_i at each route's occupancy. pass holds
/// iff no route errored and every gap and spread is within its tolerance.
struct EquivalenceReport {
  std::optional<double> gap_closed_potential;
  std::optional<double> gap_closed_nbs;
  std::optional<double> gap_potential_nbs;
  std::optional<double> spread_closed;
  std::optional<double> spread_potential;
  std::optional<double> spread_nbs;
  std::optional<std::string> nbs_error;  // set when the NBS route rejects the config
  double fraction_tolerance = 0.0;
  double spread_tolerance = 0.0;
  bool pass = false;
};

struct EntropyDecomposition {
  double entropy = 0.0;            // entropy of the equilibrium fractions
  double phi_w_over_gamma = 0.0;   // fairness term of the potential, scaled
  double gap = 0.0;                // absolute difference
};

/// Metrics of a probability vector (p_i >= 0, sum 1 within 1e-9;
/// DomainError otherwise). Conventions: 0 ln 0 == 0 and 0^0 == 1.
/// The weighted product is computed literally, term by term, so the identity
/// weighted_product == exp(-entropy) stays a checkable statement.
DistributionMetrics metrics(std::span<const double> p);

/// Uniform simplex point sampling via normalized exponential draws.
std::vector<double> random_simplex_point(std::size_t n, std::mt19937_64& rng);

/// Draws `samples` random points of the n-simplex and counts violations of
/// the AM-GM bound weighted_product >= 1/n. Returns the violation count
/// (expected zero; the bound is a theorem).
std::size_t amgm_property_check(std::size_t n, std::size_t samples, std::uint64_t seed);

/// Runs all three routes and reports their pairwise agreement.
/// An NBS rejection (nonpositive h* or non-binding constraint) is recorded in
/// nbs_error with the other two routes still compared.
EquivalenceReport compare_methods(const SalaryGrid& grid, const ModelParams& params,
                                  double n_total, double tolerance);

/// Certifies that the potential's fairness term is the entropy of the
/// equilibrium distribution: returns both sides and their gap.
EntropyDecomposition entropy_decomposition(const SalaryGrid& grid, const ModelParams& params,
                                           double n_total);

/// Half the L1 distance between two probability vectors.
double total_variation(std::span<const double> p, std::span<const double> q);

/// Sup-norm distance between two vectors of equal length.
double sup_gap(std::span<const double> p, std::span<const double> q);

}  // namespace lognash::fairness

#endif  // LOGNASH_FAIRNESS_HPP
