#pragma once

#include <cstdint>
#include <numbers>
#include <utility>

namespace eprsim {

inline constexpr double kPi = std::numbers::pi;

/// Tolerance for analytic identities on probabilities (table sums,
/// state normalization).
inline constexpr double kProbTolerance = 1e-12;

/// Orientation of a polarizer axis in the plane of polarization.
///
/// A polarizer axis is an orientation, not a direction, so values are
/// normalized to the half-open interval [0, pi). Normalization is
/// idempotent and pi-periodic.
class Angle {
public:
  Angle() = default;

  /// Normalizes into [0, pi). Throws std::domain_error on non-finite input.
  static Angle from_radians(double radians);
  static Angle from_degrees(double degrees);

  double radians() const { return radians_; }
  double degrees() const { return radians_ * 180.0 / kPi; }

  /// This orientation rotated by delta radians, re-normalized.
  Angle rotated(double delta_radians) const;

  friend bool operator==(Angle, Angle) = default;

private:
  double radians_ = 0.0;
};

/// Spec'd free-function form of Angle::from_radians.
Angle normalize_angle(double radians);

/// Output port of a two-port analyzer: V is the transmitted port at the
/// analyzer angle, H the orthogonal port. Measuring H at angle theta is
/// the same as measuring V with the analyzer rotated by pi/2.
enum class Port : std::uint8_t { V, H };

/// Effective analyzer orientation seen by a port.
Angle port_axis(Angle analyzer, Port port);

/// Which of the two anticorrelated emission modes a pair carries.
/// HV: channel 1 polarized along the source axis, channel 2 orthogonal.
/// VH: the exchange.
enum class SourceMode : std::uint8_t { HV, VH };

/// Source of anticorrelated pairs: an axis orientation and the
/// probability of emitting mode HV (mode VH has the complement).
struct SourceConfig {
  Angle axis{};
  double mode_weight = 0.5;
};

/// Throws std::domain_error unless mode_weight is finite and in [0, 1].
void validate_source(const SourceConfig& src);

/// Polarization orientations (channel 1, channel 2) carried by a mode.
std::pair<Angle, Angle> mode_polarizations(SourceMode mode, Angle axis);

/// Joint probabilities of the four coincidence outcomes at one angle
/// pair. Entries lie in [0, 1] and sum to 1 within kProbTolerance.
struct CoincidenceTable {
  double p_vv = 0.0;
  double p_vh = 0.0;
  double p_hv = 0.0;
  double p_hh = 0.0;

  double sum() const { return p_vv + p_vh + p_hv + p_hh; }
  double entry(Port channel1, Port channel2) const;
};

bool is_valid_table(const CoincidenceTable& t, double tol = kProbTolerance);

/// Raw coincidence counts from a simulated run. The four cells partition
/// the trials: n_vv + n_vh + n_hv + n_hh == trials.
struct CountRecord {
  std::uint64_t n_vv = 0;
  std::uint64_t n_vh = 0;
  std::uint64_t n_hv = 0;
  std::uint64_t n_hh = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Empirical frequencies count/trials. Throws std::domain_error if
/// trials == 0 or the cells do not partition the trials.
CoincidenceTable table_from_counts(const CountRecord& counts);

}  // namespace eprsim
