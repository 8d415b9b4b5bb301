#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "eprsim/chsh.hpp"
#include "eprsim/models.hpp"
#include "eprsim/montecarlo.hpp"
#include "eprsim/report.hpp"
#include "eprsim/types.hpp"

namespace py = pybind11;
using namespace eprsim;

namespace {

ModelKind model_from_tag(const std::string& tag) {
  const auto model = parse_model(tag);
  if (!model) {
    throw py::value_error("unknown model '" + tag +
                          "'; expected classical, quantum-minus or "
                          "quantum-plus");
  }
  return *model;
}

SourceConfig make_source(double axis_rad, double mode_weight) {
  return SourceConfig{Angle::from_radians(axis_rad), mode_weight};
}

std::vector<Angle> theta1_or_default(
    const std::optional<std::vector<double>>& theta1) {
  if (!theta1) {
    return ScanSpec::defaults().theta1;
  }
  std::vector<Angle> angles;
  angles.reserve(theta1->size());
  for (double v : *theta1) {
    angles.push_back(Angle::from_radians(v));
  }
  return angles;
}

ScanSpec make_spec(const std::string& model,
                   const std::optional<std::vector<double>>& theta1,
                   double theta2_start, double theta2_end, int steps,
                   double source_axis, double mode_weight) {
  ScanSpec spec = ScanSpec::defaults();
  spec.model = model_from_tag(model);
  spec.theta1 = theta1_or_default(theta1);
  spec.theta2_start = theta2_start;
  spec.theta2_end = theta2_end;
  spec.steps = steps;
  spec.src = make_source(source_axis, mode_weight);
  return spec;
}

}  // namespace

PYBIND11_MODULE(_eprsim, m) {
  m.doc() =
      "Closed-form and Monte Carlo engines for two-channel "
      "polarization-correlation experiments";

  py::class_<CoincidenceTable>(m, "CoincidenceTable")
      .def(py::init([](double p_vv, double p_vh, double p_hv, double p_hh) {
             return CoincidenceTable{p_vv, p_vh, p_hv, p_hh};
           }),
           py::arg("p_vv"), py::arg("p_vh"), py::arg("p_hv"), py::arg("p_hh"))
      .def_readonly("p_vv", &CoincidenceTable::p_vv)
      .def_readonly("p_vh", &CoincidenceTable::p_vh)
      .def_readonly("p_hv", &CoincidenceTable::p_hv)
      .def_readonly("p_hh", &CoincidenceTable::p_hh)
      .def("sum", &CoincidenceTable::sum)
      .def("as_tuple",
           [](const CoincidenceTable& t) {
             return py::make_tuple(t.p_vv, t.p_vh, t.p_hv, t.p_hh);
           })
      .def("__repr__", [](const CoincidenceTable& t) {
        std::ostringstream out;
        out << "CoincidenceTable(p_vv=" << t.p_vv << ", p_vh=" << t.p_vh
            << ", p_hv=" << t.p_hv << ", p_hh=" << t.p_hh << ")";
        return out.str();
      });

  py::class_<CountRecord>(m, "CountRecord")
      .def_readonly("n_vv", &CountRecord::n_vv)
      .def_readonly("n_vh", &CountRecord::n_vh)
      .def_readonly("n_hv", &CountRecord::n_hv)
      .def_readonly("n_hh", &CountRecord::n_hh)
      .def_readonly("trials", &CountRecord::trials)
      .def_readonly("seed", &CountRecord::seed)
      .def("as_tuple",
           [](const CountRecord& c) {
             return py::make_tuple(c.n_vv, c.n_vh, c.n_hv, c.n_hh);
           })
      .def("__repr__", [](const CountRecord& c) {
        std::ostringstream out;
        out << "CountRecord(n_vv=" << c.n_vv << ", n_vh=" << c.n_vh
            << ", n_hv=" << c.n_hv << ", n_hh=" << c.n_hh
            << ", trials=" << c.trials << ", seed=" << c.seed << ")";
        return out.str();
      });

  py::class_<Visibility>(m, "Visibility")
      .def_readonly("value", &Visibility::value)
      .def_readonly("degenerate", &Visibility::degenerate)
      .def("__repr__", [](const Visibility& v) {
        std::ostringstream out;
        out << "Visibility(value=" << v.value
            << ", degenerate=" << (v.degenerate ? "True" : "False") << ")";
        return out.str();
      });

  py::class_<ChshSettings>(m, "ChshSettings")
      .def(py::init([](double a, double a_prime, double b, double b_prime) {
             return ChshSettings{
                 Angle::from_radians(a), Angle::from_radians(a_prime),
                 Angle::from_radians(b), Angle::from_radians(b_prime)};
           }),
           py::arg("a"), py::arg("a_prime"), py::arg("b"), py::arg("b_prime"))
      .def_property_readonly(
          "a", [](const ChshSettings& s) { return s.a.radians(); })
      .def_property_readonly(
          "a_prime", [](const ChshSettings& s) { return s.a_prime.radians(); })
      .def_property_readonly(
          "b", [](const ChshSettings& s) { return s.b.radians(); })
      .def_property_readonly(
          "b_prime", [](const ChshSettings& s) { return s.b_prime.radians(); })
      .def("__repr__", [](const ChshSettings& s) {
        std::ostringstream out;
        out << "ChshSettings(a=" << s.a.radians()
            << ", a_prime=" << s.a_prime.radians() << ", b=" << s.b.radians()
            << ", b_prime=" << s.b_prime.radians() << ")";
        return out.str();
      });

  py::class_<ChshResult>(m, "ChshResult")
      .def_readonly("s", &ChshResult::s)
      .def_readonly("settings", &ChshResult::settings)
      .def_property_readonly(
          "model", [](const ChshResult& r) { return std::string(r.model.tag()); })
      .def("__repr__", [](const ChshResult& r) {
        std::ostringstream out;
        out << "ChshResult(s=" << r.s << ", model='" << r.model.tag() << "')";
        return out.str();
      });

  py::class_<ScanRow>(m, "ScanRow")
      .def_readonly("model", &ScanRow::model)
      .def_readonly("theta1_rad", &ScanRow::theta1_rad)
      .def_readonly("theta2_rad", &ScanRow::theta2_rad)
      .def_readonly("table", &ScanRow::table)
      .def_readonly("chi", &ScanRow::chi)
      .def("__repr__", [](const ScanRow& r) {
        std::ostringstream out;
        out << "ScanRow(model='" << r.model << "', theta1_rad=" << r.theta1_rad
            << ", theta2_rad=" << r.theta2_rad << ", p_vv=" << r.table.p_vv
            << ", chi=" << r.chi << ")";
        return out.str();
      });

  m.def(
      "normalize_angle",
      [](double radians) { return normalize_angle(radians).radians(); },
      py::arg("radians"),
      "Normalize a polarizer orientation into [0, pi).");

  m.def(
      "classical_table",
      [](double theta1, double theta2, double source_axis, double mode_weight) {
        return classical_table(Angle::from_radians(theta1),
                               Angle::from_radians(theta2),
                               make_source(source_axis, mode_weight));
      },
      py::arg("theta1"), py::arg("theta2"), py::arg("source_axis") = 0.0,
      py::arg("mode_weight") = 0.5,
      "Coincidence table of the local Malus-law model (angles in radians).");

  m.def(
      "quantum_table_closed",
      [](double theta1, double theta2, int sign) {
        return quantum_table_closed(Angle::from_radians(theta1),
                                    Angle::from_radians(theta2), sign);
      },
      py::arg("theta1"), py::arg("theta2"), py::arg("sign") = -1,
      "Closed-form quantum coincidence table.");

  m.def(
      "born_table",
      [](const std::array<std::complex<double>, 4>& amplitudes, double theta1,
         double theta2) {
        TwoQubitState state;
        state.amplitudes = amplitudes;
        return born_table(state, Angle::from_radians(theta1),
                          Angle::from_radians(theta2));
      },
      py::arg("amplitudes"), py::arg("theta1"), py::arg("theta2"),
      "Born-rule table from four (VV, VH, HV, HH) amplitudes.");

  m.def(
      "anticorrelated_state",
      [](int sign) { return TwoQubitState::anticorrelated(sign).amplitudes; },
      py::arg("sign") = -1,
      "Amplitudes of the anticorrelated superposition (VV, VH, HV, HH).");

  m.def("table_from_counts", &table_from_counts, py::arg("counts"),
        "Empirical frequencies of a count record.");

  m.def("chi_of_table", &chi_of_table, py::arg("table"),
        "System correlation of a coincidence table, in [-1, 1].");

  m.def(
      "chi",
      [](double theta1, double theta2, const std::string& model,
         double source_axis, double mode_weight) {
        return chi(Angle::from_radians(theta1), Angle::from_radians(theta2),
                   model_from_tag(model), make_source(source_axis, mode_weight));
      },
      py::arg("theta1"), py::arg("theta2"), py::arg("model") = "quantum-minus",
      py::arg("source_axis") = 0.0, py::arg("mode_weight") = 0.5,
      "System correlation of a model at an angle pair.");

  m.def(
      "visibility",
      [](const std::string& model, double theta1, double source_axis,
         double mode_weight) {
        return visibility(model_from_tag(model), Angle::from_radians(theta1),
                          make_source(source_axis, mode_weight));
      },
      py::arg("model"), py::arg("theta1"), py::arg("source_axis") = 0.0,
      py::arg("mode_weight") = 0.5,
      "Closed-form fringe contrast of the p_vv curve at fixed theta1.");

  m.def(
      "visibility_scanned",
      [](const std::string& model, double theta1, double source_axis,
         double mode_weight, int points) {
        return visibility_scanned(model_from_tag(model),
                                  Angle::from_radians(theta1),
                                  make_source(source_axis, mode_weight), points);
      },
      py::arg("model"), py::arg("theta1"), py::arg("source_axis") = 0.0,
      py::arg("mode_weight") = 0.5, py::arg("points") = 1024,
      "Dense-scan cross-check of visibility().");

  m.def(
      "run_trials",
      [](const std::string& model, double theta1, double theta2,
         std::uint64_t trials, std::uint64_t seed, unsigned chunks,
         double source_axis, double mode_weight) {
        TrialPlan plan;
        plan.trials = trials;
        plan.theta1 = Angle::from_radians(theta1);
        plan.theta2 = Angle::from_radians(theta2);
        plan.model = model_from_tag(model);
        plan.src = make_source(source_axis, mode_weight);
        plan.seed = seed;
        return run_trials(plan, chunks);
      },
      py::arg("model"), py::arg("theta1"), py::arg("theta2"),
      py::arg("trials"), py::arg("seed") = 0, py::arg("chunks") = 1,
      py::arg("source_axis") = 0.0, py::arg("mode_weight") = 0.5,
      "Seeded coincidence counting; identical inputs give identical counts.");

  m.def(
      "estimate_table",
      [](const std::string& model, double theta1, double theta2,
         std::uint64_t trials, std::uint64_t seed, unsigned chunks,
         double source_axis, double mode_weight) {
        TrialPlan plan;
        plan.trials = trials;
        plan.theta1 = Angle::from_radians(theta1);
        plan.theta2 = Angle::from_radians(theta2);
        plan.model = model_from_tag(model);
        plan.src = make_source(source_axis, mode_weight);
        plan.seed = seed;
        return estimate_table(plan, chunks);
      },
      py::arg("model"), py::arg("theta1"), py::arg("theta2"),
      py::arg("trials"), py::arg("seed") = 0, py::arg("chunks") = 1,
      py::arg("source_axis") = 0.0, py::arg("mode_weight") = 0.5,
      "Empirical coincidence table of a seeded run.");

  m.def("derive_seed", &derive_seed, py::arg("seed"), py::arg("index"),
        "k-th SplitMix64 output; derives independent run seeds.");

  m.def(
      "chsh_statistic",
      [](const std::string& model, double a, double a_prime, double b,
         double b_prime, double source_axis, double mode_weight) {
        const ChshSettings settings{
            Angle::from_radians(a), Angle::from_radians(a_prime),
            Angle::from_radians(b), Angle::from_radians(b_prime)};
        return chsh_statistic(settings, model_from_tag(model),
                              make_source(source_axis, mode_weight));
      },
      py::arg("model"), py::arg("a"), py::arg("a_prime"), py::arg("b"),
      py::arg("b_prime"), py::arg("source_axis") = 0.0,
      py::arg("mode_weight") = 0.5,
      "CHSH statistic at four analyzer settings.");

  m.def(
      "maximize_chsh",
      [](const std::string& model, double grid_step, double source_axis,
         double mode_weight) {
        return maximize_chsh(model_from_tag(model), grid_step,
                             make_source(source_axis, mode_weight));
      },
      py::arg("model"), py::arg("grid_step"), py::arg("source_axis") = 0.0,
      py::arg("mode_weight") = 0.5,
      "Exhaustive CHSH maximum over the settings grid.");

  m.def(
      "scan",
      [](const std::string& model, std::optional<std::vector<double>> theta1,
         double theta2_start, double theta2_end, int steps, double source_axis,
         double mode_weight) {
        return scan(make_spec(model, theta1, theta2_start, theta2_end, steps,
                              source_axis, mode_weight));
      },
      py::arg("model") = "classical", py::arg("theta1") = py::none(),
      py::arg("theta2_start") = 0.0, py::arg("theta2_end") = kPi,
      py::arg("steps") = 181, py::arg("source_axis") = 0.0,
      py::arg("mode_weight") = 0.5,
      "Closed-form scan; defaults reproduce the stock six-curve sweep.");

  m.def(
      "mc_scan",
      [](const std::string& model, std::optional<std::vector<double>> theta1,
         double theta2_start, double theta2_end, int steps, double source_axis,
         double mode_weight, std::uint64_t trials, std::uint64_t seed,
         unsigned chunks) {
        const McParams mc{trials, seed, chunks};
        return mc_scan(make_spec(model, theta1, theta2_start, theta2_end,
                                 steps, source_axis, mode_weight),
                       mc);
      },
      py::arg("model") = "classical", py::arg("theta1") = py::none(),
      py::arg("theta2_start") = 0.0, py::arg("theta2_end") = kPi,
      py::arg("steps") = 181, py::arg("source_axis") = 0.0,
      py::arg("mode_weight") = 0.5, py::arg("trials") = 100000,
      py::arg("seed") = 0, py::arg("chunks") = 1,
      "Monte Carlo scan with one seeded run per angle cell.");

  m.def(
      "rows_to_csv",
      [](const std::vector<ScanRow>& rows) {
        std::ostringstream out;
        emit_csv(rows, out);
        return out.str();
      },
      py::arg("rows"), "Render scan rows in the canonical CSV format.");

#ifdef EPRSIM_VERSION
  m.attr("__version__") = EPRSIM_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
