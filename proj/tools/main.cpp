// Command-line surface for the polarization-correlation toolkit.
// Subcommands: scan (closed-form curves), mc (seeded Monte Carlo),
// chsh (Bell statistic), visibility (fringe contrast per curve).

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eprsim/chsh.hpp"
#include "eprsim/models.hpp"
#include "eprsim/montecarlo.hpp"
#include "eprsim/report.hpp"
#include "eprsim/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitUsage;
}

double to_radians(double value, bool degrees) {
  return degrees ? value * eprsim::kPi / 180.0 : value;
}

std::optional<std::vector<eprsim::Angle>> to_angles(
    const std::vector<double>& values, bool degrees) {
  std::vector<eprsim::Angle> angles;
  angles.reserve(values.size());
  for (double v : values) {
    if (!std::isfinite(v)) {
      return std::nullopt;
    }
    angles.push_back(eprsim::Angle::from_radians(to_radians(v, degrees)));
  }
  return angles;
}

// "start:end:steps" with start/end in the input angle unit.
std::optional<std::tuple<double, double, int>> parse_range(
    const std::string& text, bool degrees) {
  std::istringstream in(text);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(in, part, ':')) {
    parts.push_back(part);
  }
  if (parts.size() != 3) {
    return std::nullopt;
  }
  try {
    std::size_t used = 0;
    const double start = std::stod(parts[0], &used);
    if (used != parts[0].size()) return std::nullopt;
    const double end = std::stod(parts[1], &used);
    if (used != parts[1].size()) return std::nullopt;
    const int steps = std::stoi(parts[2], &used);
    if (used != parts[2].size()) return std::nullopt;
    return std::tuple{to_radians(start, degrees), to_radians(end, degrees),
                      steps};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string format_fixed9(double value) {
  std::array<char, 48> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, 9);
  return std::string(buf.data(), res.ptr);
}

template <typename Writer>
int with_output(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitRuntime;
  }
  write(out);
  return kExitOk;
}

struct ScanOptions {
  std::string model = "classical";
  std::vector<double> theta1;
  std::string theta2_range;
  double source_axis = 0.0;
  double mode_weight = 0.5;
  std::string out_path;
  std::string format = "csv";
  bool degrees = false;
};

struct McOptions {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  unsigned chunks = 1;
  std::vector<double> theta2;
};

struct ChshOptions {
  std::string model = "classical";
  std::vector<double> settings;
  double grid_step = 0.0;
  bool has_grid_step = false;
  bool degrees = false;
};

struct VisibilityOptions {
  std::string model = "classical";
  std::vector<double> theta1;
  bool degrees = false;
};

void add_scan_options(CLI::App* cmd, ScanOptions& opt) {
  cmd->add_option("--model", opt.model, "Prediction engine")
      ->check(CLI::IsMember({"classical", "quantum-minus", "quantum-plus"}));
  cmd->add_option("--theta1", opt.theta1,
                  "Comma-separated channel-1 analyzer angles")
      ->delimiter(',');
  cmd->add_option("--theta2-range", opt.theta2_range,
                  "Channel-2 sweep as start:end:steps (default 0:pi:181)");
  cmd->add_option("--source-axis", opt.source_axis,
                  "Source axis orientation (classical model)");
  cmd->add_option("--mode-weight", opt.mode_weight,
                  "Probability of the first emission mode (classical model)")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--out", opt.out_path, "Output file (default stdout)");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--degrees", opt.degrees,
                "Interpret all angle inputs as degrees (output stays radians)");
}

// Resolves flags into spec + optional explicit theta2 list. Returns an
// exit code on bad input, or nullopt on success.
std::optional<int> build_scan_spec(const ScanOptions& opt,
                                   const std::vector<double>& theta2_list,
                                   eprsim::ScanSpec& spec,
                                   std::optional<std::vector<double>>& values) {
  spec = eprsim::ScanSpec::defaults();
  const auto model = eprsim::parse_model(opt.model);
  if (!model) {
    return usage_error("unknown model '" + opt.model + "'");
  }
  spec.model = *model;
  if (!opt.theta1.empty()) {
    const auto angles = to_angles(opt.theta1, opt.degrees);
    if (!angles) {
      return usage_error("--theta1 values must be finite");
    }
    spec.theta1 = *angles;
  }
  if (!std::isfinite(opt.source_axis)) {
    return usage_error("--source-axis must be finite");
  }
  spec.src.axis =
      eprsim::Angle::from_radians(to_radians(opt.source_axis, opt.degrees));
  spec.src.mode_weight = opt.mode_weight;
  if (!opt.theta2_range.empty()) {
    const auto range = parse_range(opt.theta2_range, opt.degrees);
    if (!range) {
      return usage_error("--theta2-range expects start:end:steps");
    }
    std::tie(spec.theta2_start, spec.theta2_end, spec.steps) = *range;
    if (spec.steps < 2) {
      return usage_error("--theta2-range needs at least 2 steps");
    }
    if (!(spec.theta2_end > spec.theta2_start)) {
      return usage_error("--theta2-range must be increasing");
    }
  }
  if (!theta2_list.empty()) {
    values.emplace();
    values->reserve(theta2_list.size());
    for (double v : theta2_list) {
      if (!std::isfinite(v)) {
        return usage_error("--theta2 values must be finite");
      }
      values->push_back(to_radians(v, opt.degrees));
    }
  }
  return std::nullopt;
}

int emit_rows(const ScanOptions& opt, const eprsim::EmitMeta& meta,
              const std::vector<eprsim::ScanRow>& rows) {
  return with_output(opt.out_path, [&](std::ostream& out) {
    if (opt.format == "json") {
      eprsim::emit_json(meta, rows, out);
    } else {
      eprsim::emit_csv(rows, out);
    }
  });
}

int run_scan(const ScanOptions& opt) {
  eprsim::ScanSpec spec;
  std::optional<std::vector<double>> unused;
  if (const auto code = build_scan_spec(opt, {}, spec, unused)) {
    return *code;
  }
  const auto rows = eprsim::scan(spec);
  return emit_rows(opt, eprsim::EmitMeta{spec, std::nullopt, std::nullopt},
                   rows);
}

int run_mc(const ScanOptions& opt, const McOptions& mc_opt) {
  if (mc_opt.trials == 0) {
    return usage_error("--trials must be positive");
  }
  if (mc_opt.chunks == 0) {
    return usage_error("--chunks must be positive");
  }
  eprsim::ScanSpec spec;
  std::optional<std::vector<double>> values;
  if (const auto code = build_scan_spec(opt, mc_opt.theta2, spec, values)) {
    return *code;
  }
  const eprsim::McParams mc{mc_opt.trials, mc_opt.seed, mc_opt.chunks};
  const auto rows =
      values ? eprsim::mc_scan_values(spec.theta1, *values, spec.model,
                                      spec.src, mc)
             : eprsim::mc_scan(spec, mc);
  return emit_rows(opt, eprsim::EmitMeta{spec, values, mc}, rows);
}

int run_chsh(const ChshOptions& opt) {
  const auto model = eprsim::parse_model(opt.model);
  if (!model) {
    return usage_error("unknown model '" + opt.model + "'");
  }
  if (opt.settings.empty() && !opt.has_grid_step) {
    return usage_error("chsh needs either --settings or --grid-step");
  }

  eprsim::ChshResult result;
  std::optional<double> step_used;
  if (!opt.settings.empty()) {
    if (opt.settings.size() != 4) {
      return usage_error("--settings expects four angles a,a',b,b'");
    }
    const auto angles = to_angles(opt.settings, opt.degrees);
    if (!angles) {
      return usage_error("--settings values must be finite");
    }
    const eprsim::ChshSettings settings{(*angles)[0], (*angles)[1],
                                        (*angles)[2], (*angles)[3]};
    result = eprsim::chsh_statistic(settings, *model);
  } else {
    const double step = to_radians(opt.grid_step, opt.degrees);
    if (!std::isfinite(step) || !(step > 0.0) ||
        step > eprsim::kPi / 8.0 + 1e-12) {
      return usage_error("--grid-step must lie in (0, pi/8]");
    }
    result = eprsim::maximize_chsh(*model, step);
    step_used = step;
  }

  std::cout << "model: " << model->tag() << '\n';
  if (step_used) {
    std::cout << "grid_step_rad: " << eprsim::format_real(*step_used) << '\n';
  }
  std::cout << "a_rad: " << eprsim::format_real(result.settings.a.radians())
            << '\n'
            << "a_prime_rad: "
            << eprsim::format_real(result.settings.a_prime.radians()) << '\n'
            << "b_rad: " << eprsim::format_real(result.settings.b.radians())
            << '\n'
            << "b_prime_rad: "
            << eprsim::format_real(result.settings.b_prime.radians()) << '\n'
            << "S: " << format_fixed9(result.s) << '\n';
  return kExitOk;
}

int run_visibility(const VisibilityOptions& opt) {
  const auto model = eprsim::parse_model(opt.model);
  if (!model) {
    return usage_error("unknown model '" + opt.model + "'");
  }
  std::vector<eprsim::Angle> theta1;
  if (opt.theta1.empty()) {
    theta1 = eprsim::ScanSpec::defaults().theta1;
  } else {
    const auto angles = to_angles(opt.theta1, opt.degrees);
    if (!angles) {
      return usage_error("--theta1 values must be finite");
    }
    theta1 = *angles;
  }
  std::cout << "theta1_rad,visibility,degenerate\n";
  for (const eprsim::Angle t1 : theta1) {
    const eprsim::Visibility vis = eprsim::visibility(*model, t1);
    std::cout << eprsim::format_real(t1.radians()) << ','
              << eprsim::format_real(vis.value) << ','
              << (vis.degenerate ? '1' : '0') << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Polarization-correlation toolkit: side-by-side Malus-law and "
      "quantum models of two-channel coincidence experiments"};
  app.require_subcommand(1);

  ScanOptions scan_opt;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Closed-form coincidence curves over analyzer angles");
  add_scan_options(scan_cmd, scan_opt);

  ScanOptions mc_scan_opt;
  McOptions mc_opt;
  auto* mc_cmd =
      app.add_subcommand("mc", "Seeded Monte Carlo coincidence counting");
  add_scan_options(mc_cmd, mc_scan_opt);
  mc_cmd->add_option("--trials", mc_opt.trials, "Pairs per angle cell")
      ->capture_default_str();
  mc_cmd->add_option("--seed", mc_opt.seed, "Base RNG seed");
  mc_cmd->add_option("--chunks", mc_opt.chunks,
                     "Parallel chunks (result is chunk-count invariant)");
  auto* theta2_list_opt =
      mc_cmd->add_option("--theta2", mc_opt.theta2,
                         "Explicit comma-separated channel-2 angles")
          ->delimiter(',');
  theta2_list_opt->excludes(mc_cmd->get_option("--theta2-range"));

  ChshOptions chsh_opt;
  auto* chsh_cmd = app.add_subcommand(
      "chsh", "CHSH statistic at fixed settings or maximized on a grid");
  chsh_cmd->add_option("--model", chsh_opt.model, "Prediction engine")
      ->check(CLI::IsMember({"classical", "quantum-minus", "quantum-plus"}));
  auto* settings_opt =
      chsh_cmd
          ->add_option("--settings", chsh_opt.settings,
                       "Four analyzer settings a,a',b,b'")
          ->delimiter(',');
  auto* step_opt = chsh_cmd->add_option("--grid-step", chsh_opt.grid_step,
                                        "Exhaustive grid-search step");
  step_opt->excludes(settings_opt);
  settings_opt->excludes(step_opt);
  chsh_cmd->add_flag("--degrees", chsh_opt.degrees,
                     "Interpret all angle inputs as degrees");

  VisibilityOptions vis_opt;
  auto* vis_cmd = app.add_subcommand(
      "visibility", "Fringe contrast of each coincidence curve");
  vis_cmd->add_option("--model", vis_opt.model, "Prediction engine")
      ->check(CLI::IsMember({"classical", "quantum-minus", "quantum-plus"}));
  vis_cmd
      ->add_option("--theta1", vis_opt.theta1,
                   "Comma-separated channel-1 analyzer angles")
      ->delimiter(',');
  vis_cmd->add_flag("--degrees", vis_opt.degrees,
                    "Interpret all angle inputs as degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  chsh_opt.has_grid_step = step_opt->count() > 0;

  try {
    if (scan_cmd->parsed()) {
      return run_scan(scan_opt);
    }
    if (mc_cmd->parsed()) {
      return run_mc(mc_scan_opt, mc_opt);
    }
    if (chsh_cmd->parsed()) {
      return run_chsh(chsh_opt);
    }
    if (vis_cmd->parsed()) {
      return run_visibility(vis_opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
