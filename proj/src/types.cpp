#include "eprsim/types.hpp"

#include <cmath>
#include <stdexcept>

namespace eprsim {

Angle Angle::from_radians(double radians) {
  if (!std::isfinite(radians)) {
    throw std::domain_error("angle must be finite");
  }
  double r = std::fmod(radians, kPi);
  if (r < 0.0) {
    r += kPi;
  }
  // fmod is exact, but adding pi to a tiny negative remainder can round
  // up to pi itself; the interval is half-open.
  if (r >= kPi) {
    r = 0.0;
  }
  if (r == 0.0) {
    r = 0.0;  // collapse -0
  }
  Angle a;
  a.radians_ = r;
  return a;
}

Angle Angle::from_degrees(double degrees) {
  return from_radians(degrees * kPi / 180.0);
}

Angle Angle::rotated(double delta_radians) const {
  return from_radians(radians_ + delta_radians);
}

Angle normalize_angle(double radians) { return Angle::from_radians(radians); }

Angle port_axis(Angle analyzer, Port port) {
  return port == Port::V ? analyzer : analyzer.rotated(kPi / 2.0);
}

void validate_source(const SourceConfig& src) {
  if (!std::isfinite(src.mode_weight) || src.mode_weight < 0.0 ||
      src.mode_weight > 1.0) {
    throw std::domain_error("mode weight must lie in [0, 1]");
  }
}

std::pair<Angle, Angle> mode_polarizations(SourceMode mode, Angle axis) {
  const Angle along = axis;
  const Angle across = axis.rotated(kPi / 2.0);
  if (mode == SourceMode::HV) {
    return {along, across};
  }
  return {across, along};
}

double CoincidenceTable::entry(Port channel1, Port channel2) const {
  if (channel1 == Port::V) {
    return channel2 == Port::V ? p_vv : p_vh;
  }
  return channel2 == Port::V ? p_hv : p_hh;
}

bool is_valid_table(const CoincidenceTable& t, double tol) {
  for (double p : {t.p_vv, t.p_vh, t.p_hv, t.p_hh}) {
    if (!std::isfinite(p) || p < -tol || p > 1.0 + tol) {
      return false;
    }
  }
  return std::fabs(t.sum() - 1.0) <= tol;
}

CoincidenceTable table_from_counts(const CountRecord& counts) {
  if (counts.trials == 0) {
    throw std::domain_error("count record needs at least one trial");
  }
  if (counts.n_vv + counts.n_vh + counts.n_hv + counts.n_hh != counts.trials) {
    throw std::domain_error("coincidence cells must partition the trials");
  }
  const double n = static_cast<double>(counts.trials);
  return CoincidenceTable{
      static_cast<double>(counts.n_vv) / n,
      static_cast<double>(counts.n_vh) / n,
      static_cast<double>(counts.n_hv) / n,
      static_cast<double>(counts.n_hh) / n,
  };
}

}  // namespace eprsim
