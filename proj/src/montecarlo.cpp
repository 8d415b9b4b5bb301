#include "eprsim/montecarlo.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace eprsim {

Pcg32::Pcg32(std::uint64_t seed, std::uint64_t stream)
    : state_(0), inc_((stream << 1u) | 1u) {
  next_u32();
  state_ += seed;
  next_u32();
}

std::uint32_t Pcg32::next_u32() {
  const std::uint64_t old = state_;
  state_ = old * 6364136223846793005ULL + inc_;
  const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
}

double Pcg32::next_double() {
  const std::uint64_t hi = next_u32();
  const std::uint64_t lo = next_u32();
  return (((hi << 32) | lo) >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Tallies trials [lo, hi). Trial t draws from its own generator keyed on
// (plan.seed, t), so the result of a range union is independent of how it
// was split. The state seed is hashed per trial: generators differing only
// in the stream increment start out correlated.
std::array<std::uint64_t, 4> tally_range(const TrialPlan& plan,
                                         std::uint64_t lo, std::uint64_t hi) {
  std::array<std::uint64_t, 4> cells{};
  if (plan.model.is_quantum()) {
    const CoincidenceTable probs = born_table(
        TwoQubitState::anticorrelated(plan.model.sign), plan.theta1,
        plan.theta2);
    // One categorical draw over the four cells per pair.
    const double c1 = probs.p_vv;
    const double c2 = c1 + probs.p_vh;
    const double c3 = c2 + probs.p_hv;
    for (std::uint64_t t = lo; t < hi; ++t) {
      Pcg32 rng(derive_seed(plan.seed, t), t);
      const double u = rng.next_double();
      ++cells[u < c1 ? 0 : (u < c2 ? 1 : (u < c3 ? 2 : 3))];
    }
  } else {
    const auto [hv_pol1, hv_pol2] =
        mode_polarizations(SourceMode::HV, plan.src.axis);
    const auto [vh_pol1, vh_pol2] =
        mode_polarizations(SourceMode::VH, plan.src.axis);
    const double p_v1[2] = {malus_transmission(plan.theta1, hv_pol1),
                            malus_transmission(plan.theta1, vh_pol1)};
    const double p_v2[2] = {malus_transmission(plan.theta2, hv_pol2),
                            malus_transmission(plan.theta2, vh_pol2)};
    for (std::uint64_t t = lo; t < hi; ++t) {
      Pcg32 rng(derive_seed(plan.seed, t), t);
      const int mode = rng.next_double() < plan.src.mode_weight ? 0 : 1;
      const bool v1 = rng.next_double() < p_v1[mode];
      const bool v2 = rng.next_double() < p_v2[mode];
      ++cells[(v1 ? 0 : 2) + (v2 ? 0 : 1)];
    }
  }
  return cells;
}

}  // namespace

CountRecord run_trials(const TrialPlan& plan, unsigned chunks) {
  if (plan.trials == 0) {
    throw std::domain_error("at least one trial required");
  }
  if (chunks == 0) {
    throw std::domain_error("at least one chunk required");
  }
  validate_source(plan.src);
  if (plan.model.is_quantum() && plan.model.sign != 1 &&
      plan.model.sign != -1) {
    throw std::domain_error("superposition sign must be +1 or -1");
  }

  std::vector<std::array<std::uint64_t, 4>> parts(chunks);
  const std::uint64_t base = plan.trials / chunks;
  const std::uint64_t rem = plan.trials % chunks;
  if (chunks == 1) {
    parts[0] = tally_range(plan, 0, plan.trials);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    std::uint64_t lo = 0;
    for (unsigned c = 0; c < chunks; ++c) {
      const std::uint64_t hi = lo + base + (c < rem ? 1 : 0);
      workers.emplace_back(
          [&plan, &parts, c, lo, hi] { parts[c] = tally_range(plan, lo, hi); });
      lo = hi;
    }
    for (auto& worker : workers) {
      worker.join();
    }
  }

  CountRecord record;
  record.trials = plan.trials;
  record.seed = plan.seed;
  for (const auto& part : parts) {
    record.n_vv += part[0];
    record.n_vh += part[1];
    record.n_hv += part[2];
    record.n_hh += part[3];
  }
  return record;
}

CoincidenceTable estimate_table(const TrialPlan& plan, unsigned chunks) {
  return table_from_counts(run_trials(plan, chunks));
}

}  // namespace eprsim
