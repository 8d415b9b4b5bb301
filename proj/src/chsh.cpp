#include "eprsim/chsh.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace eprsim {

ChshResult chsh_statistic(const ChshSettings& settings, ModelKind model,
                          const SourceConfig& src) {
  const double e_ab = chi(settings.a, settings.b, model, src);
  const double e_ab2 = chi(settings.a, settings.b_prime, model, src);
  const double e_a2b = chi(settings.a_prime, settings.b, model, src);
  const double e_a2b2 = chi(settings.a_prime, settings.b_prime, model, src);
  const double s = std::fabs(e_ab - e_ab2) + std::fabs(e_a2b + e_a2b2);
  return ChshResult{s, settings, model};
}

ChshResult maximize_chsh(ModelKind model, double grid_step,
                         const SourceConfig& src) {
  if (!(grid_step > 0.0) || grid_step > kPi / 8.0 + 1e-12) {
    throw std::domain_error("grid step must lie in (0, pi/8]");
  }

  std::vector<Angle> grid;
  for (std::size_t k = 0; k * grid_step < kPi; ++k) {
    grid.push_back(Angle::from_radians(k * grid_step));
  }
  const std::size_t n = grid.size();

  // chi is a function of one angle pair, so the 4-D search reduces to a
  // precomputed n x n correlation matrix.
  std::vector<double> corr(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      corr[i * n + j] = chi(grid[i], grid[j], model, src);
    }
  }

  // Ascending scan with strict improvement keeps the lexicographically
  // smallest (a, a', b, b') among ties.
  ChshResult best{-1.0, ChshSettings{}, model};
  for (std::size_t ia = 0; ia < n; ++ia) {
    for (std::size_t ia2 = 0; ia2 < n; ++ia2) {
      for (std::size_t ib = 0; ib < n; ++ib) {
        const double e_ab = corr[ia * n + ib];
        const double e_a2b = corr[ia2 * n + ib];
        for (std::size_t ib2 = 0; ib2 < n; ++ib2) {
          const double s = std::fabs(e_ab - corr[ia * n + ib2]) +
                           std::fabs(e_a2b + corr[ia2 * n + ib2]);
          if (s > best.s) {
            best.s = s;
            best.settings = ChshSettings{grid[ia], grid[ia2], grid[ib],
                                         grid[ib2]};
          }
        }
      }
    }
  }
  return best;
}

}  // namespace eprsim
