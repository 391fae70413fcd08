#include "lognash/dynamics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lognash/errors.hpp"

namespace lognash::dynamics {

namespace {

std::vector<std::int64_t> placement_counts(const SalaryGrid& grid, std::size_t n_agents,
                                           Placement placement,
                                           std::optional<std::vector<std::int64_t>>& custom) {
  const std::size_t n = grid.size();
  std::vector<std::int64_t> counts(n, 0);
  switch (placement) {
    case Placement::uniform: {
      const auto base = static_cast<std::int64_t>(n_agents / n);
      const std::size_t remainder = n_agents % n;
      for (std::size_t i = 0; i < n; ++i) {
        counts[i] = base + (i < remainder ? 1 : 0);
      }
      break;
    }
    case Placement::all_at_lowest:
      counts[0] = static_cast<std::int64_t>(n_agents);
      break;
    case Placement::custom: {
      if (!custom.has_value()) {
        throw InvalidPlacement("custom placement requires explicit counts");
      }
      if (custom->size() != n) {
        throw InvalidPlacement("custom counts cover " + std::to_string(custom->size()) +
                               " levels, grid has " + std::to_string(n));
      }
      std::int64_t sum = 0;
      for (std::int64_t c : *custom) {
        if (c < 0) throw InvalidPlacement("custom counts must be non-negative");
        sum += c;
      }
      if (sum != static_cast<std::int64_t>(n_agents)) {
        throw InvalidPlacement("custom counts sum to " + std::to_string(sum) + ", expected " +
                               std::to_string(n_agents));
      }
      counts = std::move(*custom);
      break;
    }
  }
  return counts;
}

struct Stepper {
  std::vector<double> h0;
  double gamma;
  double temperature;
  // Scratch buffers reused across steps.
  std::vector<double> candidate_utility;
  std::vector<std::size_t> argmax_set;

  double log_count(std::int64_t k) const { return std::log(static_cast<double>(k)); }

  void advance(SimState& state, Protocol protocol) {
    const std::size_t n_agents = state.assignments.size();
    const std::size_t n_levels = h0.size();
    std::uniform_int_distribution<std::size_t> pick(0, n_agents - 1);
    const std::size_t agent = pick(state.rng);
    const std::uint32_t current = state.assignments[agent];

    for (std::size_t j = 0; j < n_levels; ++j) {
      const std::int64_t occ =
          state.occupancy_counts[j] + (j == current ? 0 : 1);
      candidate_utility[j] = h0[j] - gamma * log_count(occ);
    }

    std::size_t target = current;
    if (protocol == Protocol::best_response) {
      double best = candidate_utility[0];
      for (std::size_t j = 1; j < n_levels; ++j) best = std::max(best, candidate_utility[j]);
      argmax_set.clear();
      for (std::size_t j = 0; j < n_levels; ++j) {
        if (candidate_utility[j] == best) argmax_set.push_back(j);
      }
      if (argmax_set.size() == 1) {
        target = argmax_set[0];
      } else {
        std::uniform_int_distribution<std::size_t> tie(0, argmax_set.size() - 1);
        target = argmax_set[tie(state.rng)];
      }
    } else {
      // Imitative pairwise logit: adopt a random model agent's level with
      // the Fermi acceptance 1/(1 + exp(-dh/T)). The imitation flow is
      // occupancy-weighted, so its rest points equalize utilities at any
      // temperature; a level-sampled logit would instead settle on the
      // over-tempered softmax of h0/(gamma + T).
      const std::size_t model = pick(state.rng);
      const std::size_t proposed = state.assignments[model];
      if (proposed != current) {
        const double gain = candidate_utility[proposed] - candidate_utility[current];
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        if (unit(state.rng) < 1.0 / (1.0 + std::exp(-gain / temperature))) {
          target = proposed;
        }
      }
    }

    if (target != current) {
      assert(state.occupancy_counts[current] > 0);
      --state.occupancy_counts[current];
      ++state.occupancy_counts[target];
      state.assignments[agent] = static_cast<std::uint32_t>(target);
    }
    ++state.step;
  }
};

Stepper make_stepper(const SalaryGrid& grid, const ModelParams& params, double temperature) {
  Stepper s;
  s.h0 = base_utilities(grid, params);
  s.gamma = params.gamma;
  s.temperature = temperature;
  s.candidate_utility.resize(grid.size());
  return s;
}

double spread_over_occupied(const std::vector<std::int64_t>& counts,
                            const std::vector<double>& h0, double gamma) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] <= 0) continue;
    const double h = h0[i] - gamma * std::log(static_cast<double>(counts[i]));
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  return (hi >= lo) ? hi - lo : 0.0;
}

}  // namespace

SimState init_population(const SalaryGrid& grid, std::size_t n_agents, Placement placement,
                         std::uint64_t seed,
                         std::optional<std::vector<std::int64_t>> custom_counts) {
  if (n_agents == 0) throw InvalidPlacement("need at least one agent");
  SimState state;
  state.occupancy_counts = placement_counts(grid, n_agents, placement, custom_counts);
  state.assignments.reserve(n_agents);
  for (std::size_t level = 0; level < state.occupancy_counts.size(); ++level) {
    for (std::int64_t k = 0; k < state.occupancy_counts[level]; ++k) {
      state.assignments.push_back(static_cast<std::uint32_t>(level));
    }
  }
  state.step = 0;
  state.rng_seed = seed;
  state.rng.seed(seed);
  return state;
}

void step_once(SimState& state, const SalaryGrid& grid, const ModelParams& params,
               Protocol protocol, double temperature) {
  if (protocol == Protocol::logit && !(temperature > 0.0)) {
    throw DomainError("logit protocol needs a positive temperature");
  }
  if (state.occupancy_counts.size() != grid.size()) {
    throw DomainError("state level count does not match the grid");
  }
  Stepper stepper = make_stepper(grid, params, temperature);
  stepper.advance(state, protocol);
}

SimulationTrace run(SimState& state, const SalaryGrid& grid, const ModelParams& params,
                    Protocol protocol, double temperature, std::uint64_t steps,
                    std::uint64_t snapshot_every, bool check_potential_ascent) {
  if (steps < 1) throw DomainError("need at least one step");
  if (snapshot_every < 1) throw DomainError("snapshot interval must be at least 1");
  if (protocol == Protocol::logit && !(temperature > 0.0)) {
    throw DomainError("logit protocol needs a positive temperature");
  }
  if (state.occupancy_counts.size() != grid.size()) {
    throw DomainError("state level count does not match the grid");
  }

  Stepper stepper = make_stepper(grid, params, temperature);

  SimulationTrace trace;
  trace.seed = state.rng_seed;
  trace.protocol = protocol;
  auto snapshot = [&]() {
    trace.snapshots.push_back(Snapshot{state.step, state.occupancy_counts});
    trace.utility_spread.push_back(
        spread_over_occupied(state.occupancy_counts, stepper.h0, params.gamma));
  };
  snapshot();

  double phi_before = 0.0;
  if (check_potential_ascent) {
    phi_before = exact_potential(state.occupancy_counts, grid, params);
  }

  for (std::uint64_t s = 1; s <= steps; ++s) {
    stepper.advance(state, protocol);
    if (check_potential_ascent) {
      const double phi_after = exact_potential(state.occupancy_counts, grid, params);
      ++trace.ascent_checks;
      if (phi_after < phi_before - 1e-9 * std::max(1.0, std::abs(phi_before))) {
        ++trace.ascent_violations;
      }
      phi_before = phi_after;
    }
    if (s % snapshot_every == 0 || s == steps) snapshot();
  }
  // The final step may coincide with a scheduled snapshot.
  if (trace.snapshots.size() >= 2 &&
      trace.snapshots[trace.snapshots.size() - 1].step ==
          trace.snapshots[trace.snapshots.size() - 2].step) {
    trace.snapshots.pop_back();
    trace.utility_spread.pop_back();
  }
  return trace;
}

std::vector<double> empirical_distribution(const SimulationTrace& trace,
                                           std::uint64_t burn_in_step) {
  std::size_t used = 0;
  std::vector<double> acc;
  for (const Snapshot& snap : trace.snapshots) {
    if (snap.step < burn_in_step) continue;
    if (acc.empty()) acc.assign(snap.counts.size(), 0.0);
    const double total = static_cast<double>(
        std::accumulate(snap.counts.begin(), snap.counts.end(), std::int64_t{0}));
    for (std::size_t i = 0; i < snap.counts.size(); ++i) {
      acc[i] += static_cast<double>(snap.counts[i]) / total;
    }
    ++used;
  }
  if (used == 0) {
    throw InsufficientData("no snapshot at or past burn-in step " +
                           std::to_string(burn_in_step));
  }
  double sum = 0.0;
  for (double& v : acc) {
    v /= static_cast<double>(used);
    sum += v;
  }
  for (double& v : acc) v /= sum;
  return acc;
}

bool is_rest_point(const SimState& state, const SalaryGrid& grid, const ModelParams& params) {
  const std::vector<double> h0 = base_utilities(grid, params);
  const std::size_t n = grid.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (state.occupancy_counts[a] <= 0) continue;
    const double h_stay =
        h0[a] - params.gamma * std::log(static_cast<double>(state.occupancy_counts[a]));
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      const double h_move =
          h0[b] - params.gamma * std::log(static_cast<double>(state.occupancy_counts[b] + 1));
      if (h_move > h_stay) return false;
    }
  }
  return true;
}

double exact_potential(const std::vector<std::int64_t>& counts, const SalaryGrid& grid,
                       const ModelParams& params) {
  if (counts.size() != grid.size()) {
    throw DomainError("counts do not match the grid");
  }
  std::int64_t total = 0;
  double weighted_h0 = 0.0;
  double occupied_lgamma = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) throw DomainError("negative count");
    total += counts[i];
    const double ls = grid.log_level(i);
    const double h0 = params.alpha * ls - params.beta * ls * ls;
    weighted_h0 += static_cast<double>(counts[i]) * h0;
    occupied_lgamma += std::lgamma(static_cast<double>(counts[i]) + 1.0);
  }
  if (total <= 0) throw DomainError("empty population");
  const double n = static_cast<double>(total);
  return (weighted_h0 + params.gamma * (std::lgamma(n + 1.0) - occupied_lgamma)) / n;
}

}  // namespace lognash::dynamics
