#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "eprsim/types.hpp"

namespace eprsim {

/// Which prediction engine to evaluate.
///
/// Classical: a local Malus-law model of the two-channel experiment. The
/// source emits one of two anticorrelated modes per pair and each
/// channel's analyzer transmits with probability cos^2 of the angle
/// between its axis and the pulse polarization.
///
/// Quantum: the anticorrelated two-photon superposition, sign +1 or -1.
/// Only the sign -1 state has coincidence probabilities that depend on
/// the analyzer-angle difference alone; it is the default everywhere.
struct ModelKind {
  enum class Family : std::uint8_t { Classical, Quantum };

  Family family = Family::Quantum;
  int sign = -1;  // superposition sign, +1 or -1; quantum only

  static ModelKind classical() { return {Family::Classical, -1}; }
  static ModelKind quantum(int sign);
  static ModelKind quantum_minus() { return {Family::Quantum, -1}; }
  static ModelKind quantum_plus() { return {Family::Quantum, +1}; }

  bool is_classical() const { return family == Family::Classical; }
  bool is_quantum() const { return family == Family::Quantum; }

  /// CLI/report tag: "classical", "quantum-minus" or "quantum-plus".
  std::string_view tag() const;

  friend bool operator==(const ModelKind&, const ModelKind&) = default;
};

/// Parses a model tag; std::nullopt if unrecognized.
std::optional<ModelKind> parse_model(std::string_view tag);

/// Two-photon polarization state as four complex amplitudes in the
/// product basis, ordered (VV, VH, HV, HH).
struct TwoQubitState {
  std::array<std::complex<double>, 4> amplitudes{};

  /// The perfectly anticorrelated superposition
  /// (|V>|H> + sign |H>|V>) / sqrt(2). sign must be +1 or -1.
  static TwoQubitState anticorrelated(int sign);

  double norm_squared() const;
};

/// Malus transmitted fraction cos^2(analyzer - polarization), exactly 0
/// at orthogonal alignment and exactly 1 at parallel alignment.
double malus_transmission(Angle analyzer, Angle polarization);

/// Coincidence table of the classical Malus-law model: the mode-averaged
/// product of per-channel two-port Malus probabilities. Analyzer angles
/// are lab-frame; the source axis is subtracted internally.
CoincidenceTable classical_table(Angle theta1, Angle theta2,
                                 const SourceConfig& src = {});

/// Closed-form quantum coincidence table. For sign -1,
/// p_vv = sin^2(theta1 - theta2) / 2; for sign +1 the argument is
/// theta1 + theta2. Throws std::domain_error unless sign is +1 or -1.
CoincidenceTable quantum_table_closed(Angle theta1, Angle theta2, int sign);

/// Born-rule evaluation: projects the state onto the four analyzer port
/// pairs, p_ij = |<theta1,i| x <theta2,j| psi>|^2. Independent of
/// quantum_table_closed; the two must agree for anticorrelated states.
/// Throws std::domain_error if the state is not normalized.
CoincidenceTable born_table(const TwoQubitState& state, Angle theta1,
                            Angle theta2);

/// Dispatch on model kind. src applies to the classical engine only.
CoincidenceTable model_table(Angle theta1, Angle theta2, ModelKind model,
                             const SourceConfig& src = {});

/// System correlation of a table:
/// (p_vv - p_vh - p_hv + p_hh) / (p_vv + p_vh + p_hv + p_hh).
double chi_of_table(const CoincidenceTable& table);

/// chi evaluated on the model's analytic table. Closed forms:
/// classical -cos(2 theta1) cos(2 theta2), quantum(-) -cos(2(theta1 - theta2)).
double chi(Angle theta1, Angle theta2, ModelKind model,
           const SourceConfig& src = {});

/// Fringe contrast of a coincidence curve. A degenerate curve
/// (max + min == 0, i.e. p_vv identically zero) reports value 0.
struct Visibility {
  double value = 0.0;
  bool degenerate = false;
};

/// (max - min) / (max + min) of p_vv over theta2 in [0, pi), from the
/// closed-form extrema. Classical with equal mode weights: |cos(2 theta1)|.
/// Quantum: 1 for every theta1.
Visibility visibility(ModelKind model, Angle theta1,
                      const SourceConfig& src = {});

/// Same quantity estimated by a dense theta2 scan of the table engine;
/// cross-check for visibility(). points >= 2 required.
Visibility visibility_scanned(ModelKind model, Angle theta1,
                              const SourceConfig& src = {}, int points = 1024);

}  // namespace eprsim
