#ifndef LOGNASH_NBS_HPP
#define LOGNASH_NBS_HPP

#include <cstdint>
#include <span>

#include "lognash/model.hpp"

namespace lognash::nbs {

/// Solution of the grouped Nash-bargaining program
///   max sum_i N_i ln h_i  s.t.  sum_i N_i <= N
/// with the disagreement point fixed at zero for every player.
struct NbsSolution {
  Occupancy occupancy;           // N*_i
  double h_star = 0.0;           // common utility, > 0
  double mu = 0.0;               // KKT multiplier; ln h* - gamma/h*
  double log_nash_product = 0.0; // sum N_i ln h_i at the solution
  bool binding = true;           // population constraint active
};

struct ConvexityWitnessReport {
  std::size_t samples = 0;
  double max_combined_total = 0.0;  // largest sum_i N3_i observed
  std::size_t violations = 0;       // samples with sum_i N3_i > N
};

struct AxiomProbeReport {
  double symmetry_gap = 0.0;         // occupancy gap between two equal-salary levels
  double permutation_gap = 0.0;      // solve(perm(levels)) vs perm(solve(levels))
  double shift_occupancy_gap = 0.0;  // sup-norm occupancy change under h0 + c
  double shift_h_star_error = 0.0;   // |(h*(h0+c) - h*(h0)) - c|
  bool pass = false;
};

/// Log Nash product sum_i N_i ln h_i. Throws NonpositiveUtility naming the
/// first level whose utility does not exceed the zero disagreement point.
double log_nash_product(const Occupancy& occupancy, std::span<const double> utilities);

/// Scalar KKT inverse h = gamma / W0(gamma * e^{-mu}), the unique positive
/// solution of ln h - gamma/h = mu.
double h_from_mu(double mu, const ModelParams& params);

/// Solves the program via the KKT system: h* = gamma ln(Z/N), occupancy from
/// the equal-utility condition N*_i = exp((h0_i - h*)/gamma), and
/// mu = ln h* - gamma/h* cross-checked against the Lambert-W inversion.
///
/// Throws NonpositiveUtility when h* <= 0: the zero threat point is not
/// dominated and the log-domain program has no solution. mu may come out
/// negative for small h*; the returned occupancy always saturates the
/// population constraint, which is the case the KKT treatment characterizes.
NbsSolution solve(const SalaryGrid& grid, const ModelParams& params, double n_total);

/// Samples pairs of integer occupancies in the feasible set (each N_i >= 1,
/// sum <= N) plus a mixing ratio t, forms the log-space combination
/// N3_i = exp(t ln N1_i + (1-t) ln N2_i), and counts how often sum_i N3_i
/// exceeds N. Jensen's inequality says never; violations are counted, not
/// thrown. Deterministic for a given seed.
ConvexityWitnessReport convexity_witness(const SalaryGrid& grid, const ModelParams& params,
                                         double n_total, std::size_t samples,
                                         std::uint64_t seed);

/// Spot-probes of two Nash-axiom consequences on this config: equal salaries
/// receive equal occupancy (symmetry), relabeling levels relabels the
/// solution, and adding a common constant to every h0 leaves the occupancy
/// unchanged while shifting h* by exactly that constant.
AxiomProbeReport axiom_probes(const SalaryGrid& grid, const ModelParams& params,
                              double n_total);

}  // namespace lognash::nbs

#endif  // LOGNASH_NBS_HPP
