#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eprsim/models.hpp"
#include "eprsim/types.hpp"

namespace eprsim {

/// An angle scan: one coincidence curve per theta1 entry, each sampled
/// at `steps` equally spaced theta2 points covering
/// [theta2_start, theta2_end] inclusive of both endpoints.
struct ScanSpec {
  std::vector<Angle> theta1;
  double theta2_start = 0.0;
  double theta2_end = kPi;
  int steps = 181;
  ModelKind model = ModelKind::classical();
  SourceConfig src{};

  /// The stock scan: classical model, theta1 in
  /// {0, pi/8, 3pi/16, pi/4, 3pi/8, pi/2}, theta2 over [0, pi] at
  /// degree resolution.
  static ScanSpec defaults();
};

/// Sampling parameters for Monte Carlo scans.
struct McParams {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  unsigned chunks = 1;
};

/// One emitted point: the coincidence table and chi at an angle pair.
/// theta2_rad keeps the raw scan coordinate (the range endpoint pi is
/// reported as pi, not wrapped to 0).
struct ScanRow {
  std::string model;
  double theta1_rad = 0.0;
  double theta2_rad = 0.0;
  CoincidenceTable table{};
  double chi = 0.0;
};

/// The theta2 sample points of a spec. Throws std::domain_error if the
/// spec is invalid (steps < 2, empty range, bad source).
std::vector<double> theta2_grid(const ScanSpec& spec);

/// Analytic scan: rows ordered by (theta1 list order, theta2 ascending),
/// tables from the model's closed-form engine.
std::vector<ScanRow> scan(const ScanSpec& spec);

/// Scan at an explicit list of theta2 values (radians) instead of a range.
std::vector<ScanRow> scan_values(const std::vector<Angle>& theta1,
                                 const std::vector<double>& theta2_values,
                                 ModelKind model, const SourceConfig& src = {});

/// Monte Carlo counterparts: each cell is an independent seeded run with
/// seed derive_seed(mc.seed, row_index); chi comes from the empirical
/// table.
std::vector<ScanRow> mc_scan(const ScanSpec& spec, const McParams& mc);
std::vector<ScanRow> mc_scan_values(const std::vector<Angle>& theta1,
                                    const std::vector<double>& theta2_values,
                                    ModelKind model, const SourceConfig& src,
                                    const McParams& mc);

/// Real-to-text contract for the CSV surface: 12 significant digits,
/// shortest form, '.' decimal separator, no locale dependence.
std::string format_real(double value);

/// Writes `model,theta1_rad,theta2_rad,p_vv,p_vh,p_hv,p_hh,chi` plus one
/// line per row, '\n' endings. Byte-deterministic for identical input.
/// Throws std::domain_error on empty input; stream failures surface as
/// std::runtime_error.
void emit_csv(const std::vector<ScanRow>& rows, std::ostream& out);

/// Provenance block emitted alongside rows in the JSON format.
struct EmitMeta {
  ScanSpec spec;
  /// Set when the scan ran over an explicit theta2 list.
  std::optional<std::vector<double>> theta2_values;
  /// Set for Monte Carlo scans.
  std::optional<McParams> mc;
};

/// JSON document {"spec": ..., "rows": [...]} carrying the same field
/// names and values as the CSV surface.
void emit_json(const EmitMeta& meta, const std::vector<ScanRow>& rows,
               std::ostream& out);

}  // namespace eprsim
