#pragma once

#include <cstdint>

#include "eprsim/models.hpp"
#include "eprsim/types.hpp"

namespace eprsim {

/// PCG32 (XSH-RR 64/32), the pinned generator for every stochastic path.
/// The algorithm is pure 64-bit integer arithmetic, so a (seed, stream)
/// pair yields the same draw sequence on every platform. Streams sharing
/// a state seed start out correlated; hash the seed per stream (see
/// derive_seed) when drawing from many streams side by side.
class Pcg32 {
public:
  Pcg32(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();

  /// Uniform double in [0, 1) with 53-bit resolution.
  double next_double();

private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

/// k-th output of the SplitMix64 sequence seeded with `seed`. Used to
/// derive independent run seeds (e.g. one per scan cell) from one base
/// seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// One simulated coincidence run: fixed analyzer angles, a model, a
/// source, a trial count and the base seed.
struct TrialPlan {
  std::uint64_t trials = 0;
  Angle theta1{};
  Angle theta2{};
  ModelKind model = ModelKind::quantum_minus();
  SourceConfig src{};
  std::uint64_t seed = 0;
};

/// Runs the plan and tallies the four coincidence cells.
///
/// Trial t draws from its own generator keyed on (plan.seed, t), so the
/// result is a pure function of the plan: partitioning the trial range
/// into any number of chunks (executed in parallel for chunks > 1)
/// merges to the identical CountRecord.
///
/// Classical model: per pair, sample the source mode, then each
/// channel's transmitted port independently with its Malus probability.
/// Quantum model: one categorical draw over the four cells of the
/// Born-rule table.
///
/// Throws std::domain_error if trials == 0 or chunks == 0.
CountRecord run_trials(const TrialPlan& plan, unsigned chunks = 1);

/// run_trials + table_from_counts.
CoincidenceTable estimate_table(const TrialPlan& plan, unsigned chunks = 1);

}  // namespace eprsim
