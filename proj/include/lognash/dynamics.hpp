#ifndef LOGNASH_DYNAMICS_HPP
#define LOGNASH_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lognash/model.hpp"

namespace lognash::dynamics {

enum class Protocol { best_response, logit };
enum class Placement { uniform, all_at_lowest, custom };

/// Full state of the agent simulator. Single-owner: exactly one runner may
/// mutate a state; independent runs with their own states can proceed in
/// parallel.
struct SimState {
  std::vector<std::uint32_t> assignments;    // per-agent level index
  std::vector<std::int64_t> occupancy_counts;  // histogram of assignments
  std::uint64_t step = 0;
  std::uint64_t rng_seed = 0;
  std::mt19937_64 rng;
};

struct Snapshot {
  std::uint64_t step = 0;
  std::vector<std::int64_t> counts;
};

struct SimulationTrace {
  std::vector<Snapshot> snapshots;  // strictly increasing in step
  std::vector<double> utility_spread;  // max h - min h over occupied levels, per snapshot
  std::uint64_t seed = 0;
  Protocol protocol = Protocol::best_response;
  std::uint64_t ascent_checks = 0;      // filled when the ascent assertion runs
  std::uint64_t ascent_violations = 0;  // exact-potential decreases observed
};

/// Deterministic initial state for a given seed and placement. Uniform
/// placement gives each level floor(N/n) agents and hands the remainder to
/// the lowest levels; custom counts must sum to n_agents (InvalidPlacement
/// otherwise).
SimState init_population(const SalaryGrid& grid, std::size_t n_agents, Placement placement,
                         std::uint64_t seed,
                         std::optional<std::vector<std::int64_t>> custom_counts = std::nullopt);

/// One revision: a uniformly random agent evaluates levels at the occupancy
/// it would face after moving there (N_j + 1 for j != current, N_j for
/// staying, so the agent always counts itself). best_response moves to an
/// argmax with uniform tie-break. logit imitates a uniformly random model
/// agent, adopting its level with the Fermi probability
/// 1/(1 + exp(-(h_model - h_current)/temperature)); imitation keeps the
/// process's rest points at the equal-utility allocation for every
/// temperature, at the price that an empty level is never re-entered.
void step_once(SimState& state, const SalaryGrid& grid, const ModelParams& params,
               Protocol protocol, double temperature);

/// Applies step_once `steps` times (steps >= 1), snapshotting the initial
/// state, every snapshot_every-th step, and the final step. With
/// check_potential_ascent set, evaluates the exact-factorial potential
/// around every step and counts decreases; best-response steps can never
/// decrease it.
SimulationTrace run(SimState& state, const SalaryGrid& grid, const ModelParams& params,
                    Protocol protocol, double temperature, std::uint64_t steps,
                    std::uint64_t snapshot_every, bool check_potential_ascent = false);

/// Time-averaged fraction vector over snapshots with step >= burn_in_step.
/// Throws InsufficientData when no snapshot survives the burn-in.
std::vector<double> empirical_distribution(const SimulationTrace& trace,
                                           std::uint64_t burn_in_step);

/// True when no agent has a strictly improving move (a best-response rest
/// point).
bool is_rest_point(const SimState& state, const SalaryGrid& grid, const ModelParams& params);

/// Exact-factorial potential of integer counts; the simulator's Lyapunov
/// function under best response.
double exact_potential(const std::vector<std::int64_t>& counts, const SalaryGrid& grid,
                       const ModelParams& params);

}  // namespace lognash::dynamics

#endif  // LOGNASH_DYNAMICS_HPP
