// Acceptance checks for the toolkit's headline claims. Each criterion
// prints one [PASS]/[FAIL] line; the exit code is the failure count.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eprsim/chsh.hpp"
#include "eprsim/models.hpp"
#include "eprsim/montecarlo.hpp"
#include "eprsim/report.hpp"
#include "eprsim/types.hpp"

using namespace eprsim;

namespace {

int failures = 0;

void report(const char* name, bool ok, double seconds) {
  std::printf("[%s] %s (%.3f s)\n", ok ? "PASS" : "FAIL", name, seconds);
  if (!ok) {
    ++failures;
  }
}

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// Independent two-mode oracle: plain weighted cos^2 products, no shared
// code with the library engine.
CoincidenceTable brute_force_classical(double theta1, double theta2) {
  auto intensity = [](double analyzer, double pol) {
    const double c = std::cos(analyzer - pol);
    return c * c;
  };
  CoincidenceTable t;
  const double pol1[2] = {0.0, kPi / 2.0};
  const double pol2[2] = {kPi / 2.0, 0.0};
  for (int m = 0; m < 2; ++m) {
    const double v1 = intensity(theta1, pol1[m]);
    const double h1 = intensity(theta1 + kPi / 2.0, pol1[m]);
    const double v2 = intensity(theta2, pol2[m]);
    const double h2 = intensity(theta2 + kPi / 2.0, pol2[m]);
    t.p_vv += 0.5 * v1 * v2;
    t.p_vh += 0.5 * v1 * h2;
    t.p_hv += 0.5 * h1 * v2;
    t.p_hh += 0.5 * h1 * h2;
  }
  return t;
}

double max_cell_difference(const CoincidenceTable& a,
                           const CoincidenceTable& b) {
  return std::max({std::fabs(a.p_vv - b.p_vv), std::fabs(a.p_vh - b.p_vh),
                   std::fabs(a.p_hv - b.p_hv), std::fabs(a.p_hh - b.p_hh)});
}

const double kTheta1Labels[6] = {0.0,       kPi / 8.0,       3.0 * kPi / 16.0,
                                 kPi / 4.0, 3.0 * kPi / 8.0, kPi / 2.0};

void criterion_default_scan() {
  const Stopwatch watch;
  const std::vector<ScanRow> rows = scan(ScanSpec::defaults());
  bool ok = rows.size() == 1086;
  for (const ScanRow& row : rows) {
    const double closed = 0.25 * (1.0 - std::cos(2.0 * row.theta1_rad) *
                                            std::cos(2.0 * row.theta2_rad));
    ok = ok && std::fabs(row.table.p_vv - closed) <= 1e-12;
    const CoincidenceTable oracle =
        brute_force_classical(row.theta1_rad, row.theta2_rad);
    ok = ok && max_cell_difference(row.table, oracle) <= 1e-12;
  }
  // Quarter-turn analyzer: the flat curve.
  for (std::size_t i = 3 * 181; i < 4 * 181; ++i) {
    ok = ok && std::fabs(rows[i].table.p_vv - 0.25) <= 1e-12;
  }
  const double elapsed = watch.seconds();
  report("1. default scan matches the product closed form and mode oracle",
         ok && elapsed < 1.0, elapsed);
}

void criterion_visibility() {
  const Stopwatch watch;
  const double expected[6] = {1.0, std::sqrt(0.5),
                              std::fabs(std::cos(3.0 * kPi / 8.0)), 0.0,
                              std::sqrt(0.5), 1.0};
  bool ok = true;
  const std::vector<ScanRow> rows = scan(ScanSpec::defaults());
  for (int i = 0; i < 6; ++i) {
    const Visibility analytic = visibility(
        ModelKind::classical(), Angle::from_radians(kTheta1Labels[i]));
    ok = ok && std::fabs(analytic.value - expected[i]) <= 1e-9;

    double max_p = 0.0;
    double min_p = 1.0;
    for (int k = 0; k < 181; ++k) {
      const double p = rows[i * 181 + k].table.p_vv;
      max_p = std::max(max_p, p);
      min_p = std::min(min_p, p);
    }
    const double scanned = (max_p - min_p) / (max_p + min_p);
    ok = ok && std::fabs(scanned - expected[i]) <= 1e-6;
  }
  report("2. curve visibilities equal |cos 2*theta1| at the six labels", ok,
         watch.seconds());
}

void criterion_rotational_invariance() {
  const Stopwatch watch;
  Pcg32 rng(20260817, 11);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const double t1 = kPi * rng.next_double();
    const double t2 = kPi * rng.next_double();
    const double delta = kPi * rng.next_double();
    const CoincidenceTable base = quantum_table_closed(
        Angle::from_radians(t1), Angle::from_radians(t2), -1);
    const CoincidenceTable rotated =
        quantum_table_closed(Angle::from_radians(t1 + delta),
                             Angle::from_radians(t2 + delta), -1);
    ok = ok && max_cell_difference(base, rotated) <= 1e-12;
  }
  const CoincidenceTable c_base = classical_table(Angle{}, Angle{});
  const CoincidenceTable c_rotated = classical_table(
      Angle::from_radians(kPi / 4.0), Angle::from_radians(kPi / 4.0));
  ok = ok && max_cell_difference(c_base, c_rotated) >= 0.1;
  const double elapsed = watch.seconds();
  report("3. quantum tables are rotation invariant, classical tables are not",
         ok && elapsed < 1.0, elapsed);
}

void criterion_oracle_equivalence() {
  const Stopwatch watch;
  Pcg32 rng(20260817, 13);
  bool ok = true;
  for (int sign : {-1, +1}) {
    const TwoQubitState state = TwoQubitState::anticorrelated(sign);
    for (int i = 0; i < 1000; ++i) {
      const Angle t1 = Angle::from_radians(kPi * rng.next_double());
      const Angle t2 = Angle::from_radians(kPi * rng.next_double());
      ok = ok && max_cell_difference(quantum_table_closed(t1, t2, sign),
                                     born_table(state, t1, t2)) <= 1e-12;
    }
  }
  const double elapsed = watch.seconds();
  report("4. closed quantum tables agree with the projection oracle",
         ok && elapsed < 1.0, elapsed);
}

void criterion_chsh_bounds() {
  const Stopwatch watch;
  const ChshResult classical =
      maximize_chsh(ModelKind::classical(), kPi / 64.0);
  const ChshResult quantum =
      maximize_chsh(ModelKind::quantum_minus(), kPi / 8.0);
  const bool ok = std::fabs(classical.s - 2.0) <= 1e-9 &&
                  std::fabs(quantum.s - 2.0 * std::sqrt(2.0)) <= 1e-9;
  const double elapsed = watch.seconds();
  report("5. grid search: local bound 2, quantum maximum 2*sqrt(2)",
         ok && elapsed < 30.0, elapsed);
}

void criterion_monte_carlo() {
  const Stopwatch watch;
  const double grid[5] = {0.0, 0.35, kPi / 4.0, 1.2, 2.6};
  const std::uint64_t trials = 100000;
  int excursions = 0;
  int cells = 0;
  bool ok = true;
  std::uint64_t run = 0;
  for (const ModelKind model :
       {ModelKind::classical(), ModelKind::quantum_minus()}) {
    for (double t1 : grid) {
      for (double t2 : grid) {
        TrialPlan plan;
        plan.trials = trials;
        plan.theta1 = Angle::from_radians(t1);
        plan.theta2 = Angle::from_radians(t2);
        plan.model = model;
        plan.seed = derive_seed(20260817, run++);
        const CountRecord rec = run_trials(plan);
        const CoincidenceTable analytic =
            model_table(plan.theta1, plan.theta2, model, plan.src);
        const CoincidenceTable empirical = table_from_counts(rec);
        const double emp[4] = {empirical.p_vv, empirical.p_vh, empirical.p_hv,
                               empirical.p_hh};
        const double exact[4] = {analytic.p_vv, analytic.p_vh, analytic.p_hv,
                                 analytic.p_hh};
        for (int cell = 0; cell < 4; ++cell) {
          const double band =
              4.0 * std::sqrt(exact[cell] * (1.0 - exact[cell]) /
                              static_cast<double>(trials)) +
              1.0 / static_cast<double>(trials);
          excursions += std::fabs(emp[cell] - exact[cell]) > band ? 1 : 0;
          ++cells;
        }
      }
    }
  }
  // 4-sigma bands: allow at most 1 excursion per 100 cells.
  ok = ok && cells == 200 && excursions <= 2;

  TrialPlan probe;
  probe.trials = trials;
  probe.theta1 = Angle::from_radians(0.35);
  probe.theta2 = Angle::from_radians(1.2);
  probe.model = ModelKind::quantum_minus();
  probe.seed = 404;
  const CountRecord a = run_trials(probe, 1);
  const CountRecord b = run_trials(probe, 1);
  const CountRecord c = run_trials(probe, 8);
  ok = ok && a.n_vv == b.n_vv && a.n_vh == b.n_vh && a.n_hv == b.n_hv &&
       a.n_hh == b.n_hh;
  ok = ok && a.n_vv == c.n_vv && a.n_vh == c.n_vh && a.n_hv == c.n_hv &&
       a.n_hh == c.n_hh;

  const double elapsed = watch.seconds();
  std::ostringstream name;
  name << "6. sampled frequencies sit in the 4-sigma bands (" << excursions
       << "/" << cells << " excursions), reproducibly";
  report(name.str().c_str(), ok && elapsed < 10.0, elapsed);
}

void criterion_golden_csv() {
  const Stopwatch watch;
  const std::vector<ScanRow> rows = scan(ScanSpec::defaults());
  std::ostringstream first;
  std::ostringstream second;
  emit_csv(rows, first);
  emit_csv(scan(ScanSpec::defaults()), second);
  bool ok = first.str() == second.str();

  std::ifstream golden(EPRSIM_GOLDEN_CSV, std::ios::binary);
  std::ostringstream committed;
  committed << golden.rdbuf();
  ok = ok && golden.good() && committed.str() == first.str();
  report("7. default scan bytes are stable and match the committed golden",
         ok, watch.seconds());
}

}  // namespace

int main() {
  criterion_default_scan();
  criterion_visibility();
  criterion_rotational_invariance();
  criterion_oracle_equivalence();
  criterion_chsh_bounds();
  criterion_monte_carlo();
  criterion_golden_csv();
  std::printf("%d of 7 criteria passed\n", 7 - failures);
  return failures;
}
