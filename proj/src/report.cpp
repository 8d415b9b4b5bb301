#include "eprsim/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "eprsim/montecarlo.hpp"

namespace eprsim {

namespace {

void validate_spec(const ScanSpec& spec) {
  if (spec.theta1.empty()) {
    throw std::domain_error("at least one theta1 curve required");
  }
  if (spec.steps < 2) {
    throw std::domain_error("scan needs at least two steps");
  }
  if (!std::isfinite(spec.theta2_start) || !std::isfinite(spec.theta2_end) ||
      !(spec.theta2_end > spec.theta2_start)) {
    throw std::domain_error("theta2 range must be finite and increasing");
  }
  validate_source(spec.src);
}

ScanRow make_row(ModelKind model, const SourceConfig& src, Angle theta1,
                 double theta2_raw) {
  const Angle theta2 = Angle::from_radians(theta2_raw);
  const CoincidenceTable table = model_table(theta1, theta2, model, src);
  return ScanRow{std::string(model.tag()), theta1.radians(), theta2_raw, table,
                 chi_of_table(table)};
}

}  // namespace

ScanSpec ScanSpec::defaults() {
  ScanSpec spec;
  spec.theta1 = {
      Angle::from_radians(0.0),           Angle::from_radians(kPi / 8.0),
      Angle::from_radians(3.0 * kPi / 16.0), Angle::from_radians(kPi / 4.0),
      Angle::from_radians(3.0 * kPi / 8.0), Angle::from_radians(kPi / 2.0),
  };
  return spec;
}

std::vector<double> theta2_grid(const ScanSpec& spec) {
  validate_spec(spec);
  std::vector<double> grid(static_cast<std::size_t>(spec.steps));
  for (int k = 0; k < spec.steps; ++k) {
    const double frac = static_cast<double>(k) / (spec.steps - 1);
    grid[k] = spec.theta2_start + (spec.theta2_end - spec.theta2_start) * frac;
  }
  return grid;
}

std::vector<ScanRow> scan(const ScanSpec& spec) {
  return scan_values(spec.theta1, theta2_grid(spec), spec.model, spec.src);
}

std::vector<ScanRow> scan_values(const std::vector<Angle>& theta1,
                                 const std::vector<double>& theta2_values,
                                 ModelKind model, const SourceConfig& src) {
  if (theta1.empty() || theta2_values.empty()) {
    throw std::domain_error("scan needs at least one angle per axis");
  }
  validate_source(src);
  std::vector<ScanRow> rows;
  rows.reserve(theta1.size() * theta2_values.size());
  for (const Angle t1 : theta1) {
    for (const double t2 : theta2_values) {
      rows.push_back(make_row(model, src, t1, t2));
    }
  }
  return rows;
}

std::vector<ScanRow> mc_scan(const ScanSpec& spec, const McParams& mc) {
  return mc_scan_values(spec.theta1, theta2_grid(spec), spec.model, spec.src,
                        mc);
}

std::vector<ScanRow> mc_scan_values(const std::vector<Angle>& theta1,
                                    const std::vector<double>& theta2_values,
                                    ModelKind model, const SourceConfig& src,
                                    const McParams& mc) {
  if (theta1.empty() || theta2_values.empty()) {
    throw std::domain_error("scan needs at least one angle per axis");
  }
  std::vector<ScanRow> rows;
  rows.reserve(theta1.size() * theta2_values.size());
  std::uint64_t cell = 0;
  for (const Angle t1 : theta1) {
    for (const double t2 : theta2_values) {
      TrialPlan plan;
      plan.trials = mc.trials;
      plan.theta1 = t1;
      plan.theta2 = Angle::from_radians(t2);
      plan.model = model;
      plan.src = src;
      plan.seed = derive_seed(mc.seed, cell++);
      const CoincidenceTable table = estimate_table(plan, mc.chunks);
      rows.push_back(ScanRow{std::string(model.tag()), t1.radians(), t2, table,
                             chi_of_table(table)});
    }
  }
  return rows;
}

std::string format_real(double value) {
  if (value == 0.0) {
    value = 0.0;  // collapse -0
  }
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

void emit_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
  if (rows.empty()) {
    throw std::domain_error("no rows to emit");
  }
  out << "model,theta1_rad,theta2_rad,p_vv,p_vh,p_hv,p_hh,chi\n";
  for (const ScanRow& row : rows) {
    out << row.model << ',' << format_real(row.theta1_rad) << ','
        << format_real(row.theta2_rad) << ',' << format_real(row.table.p_vv)
        << ',' << format_real(row.table.p_vh) << ','
        << format_real(row.table.p_hv) << ',' << format_real(row.table.p_hh)
        << ',' << format_real(row.chi) << '\n';
  }
  if (!out) {
    throw std::runtime_error("failed writing rows to output");
  }
}

namespace {

// JSON reals are passed through the CSV rendering first, so both formats
// carry identical 12-significant-digit values and parse back equal.
double rounded_real(double value) {
  return std::strtod(format_real(value).c_str(), nullptr);
}

}  // namespace

void emit_json(const EmitMeta& meta, const std::vector<ScanRow>& rows,
               std::ostream& out) {
  if (rows.empty()) {
    throw std::domain_error("no rows to emit");
  }
  nlohmann::json spec;
  spec["model"] = meta.spec.model.tag();
  auto theta1 = nlohmann::json::array();
  for (const Angle a : meta.spec.theta1) {
    theta1.push_back(rounded_real(a.radians()));
  }
  spec["theta1_rad"] = std::move(theta1);
  if (meta.theta2_values.has_value()) {
    auto theta2 = nlohmann::json::array();
    for (const double t2 : *meta.theta2_values) {
      theta2.push_back(rounded_real(t2));
    }
    spec["theta2_rad"] = std::move(theta2);
  } else {
    spec["theta2_start_rad"] = rounded_real(meta.spec.theta2_start);
    spec["theta2_end_rad"] = rounded_real(meta.spec.theta2_end);
    spec["steps"] = meta.spec.steps;
  }
  spec["source_axis_rad"] = rounded_real(meta.spec.src.axis.radians());
  spec["mode_weight"] = rounded_real(meta.spec.src.mode_weight);
  if (meta.mc.has_value()) {
    spec["trials"] = meta.mc->trials;
    spec["seed"] = meta.mc->seed;
    spec["chunks"] = meta.mc->chunks;
  }

  auto rows_json = nlohmann::json::array();
  for (const ScanRow& row : rows) {
    rows_json.push_back({{"model", row.model},
                         {"theta1_rad", rounded_real(row.theta1_rad)},
                         {"theta2_rad", rounded_real(row.theta2_rad)},
                         {"p_vv", rounded_real(row.table.p_vv)},
                         {"p_vh", rounded_real(row.table.p_vh)},
                         {"p_hv", rounded_real(row.table.p_hv)},
                         {"p_hh", rounded_real(row.table.p_hh)},
                         {"chi", rounded_real(row.chi)}});
  }

  nlohmann::json doc;
  doc["spec"] = std::move(spec);
  doc["rows"] = std::move(rows_json);
  out << doc.dump(2) << '\n';
  if (!out) {
    throw std::runtime_error("failed writing rows to output");
  }
}

}  // namespace eprsim
