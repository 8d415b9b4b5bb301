#pragma once

#include "eprsim/models.hpp"
#include "eprsim/types.hpp"

namespace eprsim {

/// Four analyzer settings of a Bell test: channel 1 measures at a or
/// a_prime, channel 2 at b or b_prime.
struct ChshSettings {
  Angle a{};
  Angle a_prime{};
  Angle b{};
  Angle b_prime{};

  friend bool operator==(const ChshSettings&, const ChshSettings&) = default;
};

struct ChshResult {
  double s = 0.0;
  ChshSettings settings{};
  ModelKind model = ModelKind::quantum_minus();
};

/// S = |chi(a,b) - chi(a,b')| + |chi(a',b) + chi(a',b')| with chi from
/// the model's analytic tables. Local models stay at or below 2; the
/// anticorrelated quantum state reaches 2*sqrt(2).
ChshResult chsh_statistic(const ChshSettings& settings, ModelKind model,
                          const SourceConfig& src = {});

/// Exhaustive search over the grid {0, step, 2*step, ...} < pi in all
/// four settings. Ties are broken toward the lexicographically smallest
/// (a, a', b, b'), so the result is deterministic. Throws
/// std::domain_error unless 0 < grid_step <= pi/8.
ChshResult maximize_chsh(ModelKind model, double grid_step,
                         const SourceConfig& src = {});

}  // namespace eprsim
