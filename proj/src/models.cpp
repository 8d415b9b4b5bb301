#include "eprsim/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eprsim {

namespace {

// A curve whose extrema both vanish below this is reported as degenerate
// rather than given a 0/0 visibility.
constexpr double kDegenerateEps = 1e-15;

}  // namespace

// cos^2 via the half-angle form; lands exactly on 0 and 1 when the analyzer
// is aligned with or orthogonal to the polarization.
double malus_transmission(Angle analyzer, Angle polarization) {
  return 0.5 *
         (1.0 + std::cos(2.0 * (analyzer.radians() - polarization.radians())));
}

ModelKind ModelKind::quantum(int sign) {
  if (sign != 1 && sign != -1) {
    throw std::domain_error("superposition sign must be +1 or -1");
  }
  return {Family::Quantum, sign};
}

std::string_view ModelKind::tag() const {
  if (is_classical()) {
    return "classical";
  }
  return sign < 0 ? "quantum-minus" : "quantum-plus";
}

std::optional<ModelKind> parse_model(std::string_view tag) {
  if (tag == "classical") {
    return ModelKind::classical();
  }
  if (tag == "quantum-minus") {
    return ModelKind::quantum_minus();
  }
  if (tag == "quantum-plus") {
    return ModelKind::quantum_plus();
  }
  return std::nullopt;
}

TwoQubitState TwoQubitState::anticorrelated(int sign) {
  if (sign != 1 && sign != -1) {
    throw std::domain_error("superposition sign must be +1 or -1");
  }
  const double amp = 1.0 / std::sqrt(2.0);
  TwoQubitState state;
  state.amplitudes = {0.0, amp, sign * amp, 0.0};  // basis VV, VH, HV, HH
  return state;
}

double TwoQubitState::norm_squared() const {
  double n = 0.0;
  for (const auto& a : amplitudes) {
    n += std::norm(a);
  }
  return n;
}

CoincidenceTable classical_table(Angle theta1, Angle theta2,
                                 const SourceConfig& src) {
  validate_source(src);
  CoincidenceTable t;
  const SourceMode modes[] = {SourceMode::HV, SourceMode::VH};
  const double weights[] = {src.mode_weight, 1.0 - src.mode_weight};
  for (int m = 0; m < 2; ++m) {
    const auto [pol1, pol2] = mode_polarizations(modes[m], src.axis);
    // The orthogonal port takes the complement, so each mode's intensity is
    // partitioned exactly.
    const double v1 = malus_transmission(port_axis(theta1, Port::V), pol1);
    const double h1 = 1.0 - v1;
    const double v2 = malus_transmission(port_axis(theta2, Port::V), pol2);
    const double h2 = 1.0 - v2;
    t.p_vv += weights[m] * v1 * v2;
    t.p_vh += weights[m] * v1 * h2;
    t.p_hv += weights[m] * h1 * v2;
    t.p_hh += weights[m] * h1 * h2;
  }
  return t;
}

CoincidenceTable quantum_table_closed(Angle theta1, Angle theta2, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::domain_error("superposition sign must be +1 or -1");
  }
  // sin^2/2 via the half-angle form, for the same exactness as the
  // classical transmissions.
  auto cell = [&](Port i, Port j) {
    const double a1 = port_axis(theta1, i).radians();
    const double a2 = port_axis(theta2, j).radians();
    return 0.25 * (1.0 - std::cos(2.0 * (sign < 0 ? a1 - a2 : a1 + a2)));
  };
  return CoincidenceTable{cell(Port::V, Port::V), cell(Port::V, Port::H),
                          cell(Port::H, Port::V), cell(Port::H, Port::H)};
}

CoincidenceTable born_table(const TwoQubitState& state, Angle theta1,
                            Angle theta2) {
  if (std::fabs(state.norm_squared() - 1.0) > kProbTolerance) {
    throw std::domain_error("state must be normalized");
  }
  // Port bra in the (v, h) basis; real coefficients.
  auto bra = [](Angle analyzer, Port p) {
    const double a = port_axis(analyzer, p).radians();
    return std::array<double, 2>{std::cos(a), std::sin(a)};
  };
  auto cell = [&](Port i, Port j) {
    const auto b1 = bra(theta1, i);
    const auto b2 = bra(theta2, j);
    std::complex<double> amp = 0.0;
    for (int c1 = 0; c1 < 2; ++c1) {
      for (int c2 = 0; c2 < 2; ++c2) {
        amp += b1[c1] * b2[c2] * state.amplitudes[2 * c1 + c2];
      }
    }
    return std::norm(amp);
  };
  return CoincidenceTable{cell(Port::V, Port::V), cell(Port::V, Port::H),
                          cell(Port::H, Port::V), cell(Port::H, Port::H)};
}

CoincidenceTable model_table(Angle theta1, Angle theta2, ModelKind model,
                             const SourceConfig& src) {
  if (model.is_classical()) {
    return classical_table(theta1, theta2, src);
  }
  return quantum_table_closed(theta1, theta2, model.sign);
}

double chi_of_table(const CoincidenceTable& table) {
  const double denom = table.sum();
  if (denom <= 0.0) {
    throw std::domain_error("coincidence table sums to zero");
  }
  // Clamp the roundoff residue: chi is bounded by 1 in magnitude.
  return std::clamp((table.p_vv - table.p_vh - table.p_hv + table.p_hh) / denom,
                    -1.0, 1.0);
}

double chi(Angle theta1, Angle theta2, ModelKind model,
           const SourceConfig& src) {
  return chi_of_table(model_table(theta1, theta2, model, src));
}

namespace {

Visibility from_extrema(double max_p, double min_p) {
  if (max_p + min_p <= kDegenerateEps) {
    return Visibility{0.0, true};
  }
  return Visibility{(max_p - min_p) / (max_p + min_p), false};
}

}  // namespace

Visibility visibility(ModelKind model, Angle theta1, const SourceConfig& src) {
  validate_source(src);
  if (model.is_quantum()) {
    // p_vv = sin^2(theta1 -/+ theta2) / 2 sweeps [0, 1/2] for any theta1.
    return from_extrema(0.5, 0.0);
  }
  // Classical p_vv(theta2) = A sin^2(theta2 - axis) + B cos^2(theta2 - axis),
  // so the extrema are A and B themselves.
  const double c2u = std::cos(2.0 * (theta1.radians() - src.axis.radians()));
  const double a = src.mode_weight * 0.5 * (1.0 + c2u);
  const double b = (1.0 - src.mode_weight) * 0.5 * (1.0 - c2u);
  return from_extrema(std::max(a, b), std::min(a, b));
}

Visibility visibility_scanned(ModelKind model, Angle theta1,
                              const SourceConfig& src, int points) {
  if (points < 2) {
    throw std::domain_error("scan needs at least two points");
  }
  double max_p = 0.0;
  double min_p = 1.0;
  for (int k = 0; k < points; ++k) {
    const Angle theta2 = Angle::from_radians(k * kPi / points);
    const double p = model_table(theta1, theta2, model, src).p_vv;
    max_p = std::max(max_p, p);
    min_p = std::min(min_p, p);
  }
  return from_extrema(max_p, min_p);
}

}  // namespace eprsim
