#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "sarfreq/coeffs.hpp"
#include "sarfreq/export.hpp"
#include "sarfreq/frontier.hpp"
#include "sarfreq/model.hpp"
#include "sarfreq/scenario_io.hpp"
#include "sarfreq/sensitivity.hpp"
#include "sarfreq/solver.hpp"

namespace py = pybind11;
using namespace sarfreq;

namespace {

using Rows = std::vector<std::vector<double>>;
using IntRows = std::vector<std::vector<int>>;

CoefficientMatrix to_coefficients(const Rows& rows) {
  return CoefficientMatrix(Matrix<double>::from_rows(rows));
}

BinaryMatrix to_binary(const IntRows& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BinaryMatrix x(rows.size(), cols);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != cols) throw InputError("ragged assignment rows");
    for (std::size_t k = 0; k < cols; ++k) {
      if (rows[j][k] != 0 && rows[j][k] != 1) throw InputError("assignment entries must be 0 or 1");
      x(j, k) = static_cast<std::uint8_t>(rows[j][k]);
    }
  }
  return x;
}

IntRows from_binary(const BinaryMatrix& x) {
  IntRows out(x.rows(), std::vector<int>(x.cols()));
  for (std::size_t j = 0; j < x.rows(); ++j)
    for (std::size_t k = 0; k < x.cols(); ++k) out[j][k] = x(j, k);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact two-objective receiver-to-frequency assignment";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("num_transmitters", &Scenario::num_transmitters)
      .def_readonly("num_stations", &Scenario::num_stations)
      .def_readonly("num_frequencies", &Scenario::num_frequencies)
      .def_readonly("weights", &Scenario::weights)
      .def_readonly("station_capacity", &Scenario::station_capacity)
      .def_readonly("total_receivers", &Scenario::total_receivers)
      .def_readonly("fair_share", &Scenario::fair_share)
      .def_readonly("min_coverage", &Scenario::min_coverage)
      .def("__eq__", [](const Scenario& a, const Scenario& b) { return a == b; });

  py::class_<ScenarioFile>(m, "ScenarioFile")
      .def_readonly("scenario", &ScenarioFile::scenario)
      .def_property_readonly("coefficients",
                             [](const ScenarioFile& f) -> std::optional<Rows> {
                               if (!f.coefficients) return std::nullopt;
                               return f.coefficients->to_rows();
                             })
      .def("effective_coefficients",
           [](const ScenarioFile& f) { return f.effective_coefficients().to_rows(); })
      .def("__eq__", [](const ScenarioFile& a, const ScenarioFile& b) { return a == b; });

  m.def("load_scenario", &load_scenario, py::arg("path"));
  m.def("parse_scenario", &parse_scenario, py::arg("text"));
  m.def("dump_scenario", &dump_scenario, py::arg("file"));
  m.def("validate_scenario", [](const Scenario& s) { return validate_scenario(s).violations; });
  m.def("fair_share_default", &fair_share_default, py::arg("total_receivers"),
        py::arg("num_frequencies"));
  m.def("max_excess_budget", &max_excess_budget, py::arg("scenario"));
  m.def("compute_coefficients",
        [](const Scenario& s, std::optional<std::vector<double>> weights) {
          return (weights ? compute_coefficients(s, *weights) : compute_coefficients(s)).to_rows();
        },
        py::arg("scenario"), py::arg("weights") = py::none());

  m.def("objective1",
        [](const IntRows& x, const Rows& c) { return objective1(to_binary(x), to_coefficients(c)); },
        py::arg("x"), py::arg("coefficients"));
  m.def("excess",
        [](const IntRows& x, int fs) {
          auto r = excess(to_binary(x), fs);
          return py::make_tuple(r.y, r.f2);
        },
        py::arg("x"), py::arg("fair_share"));

  py::class_<SolveResult>(m, "SolveResult")
      .def_property_readonly("x", [](const SolveResult& r) { return from_binary(r.assignment.x); })
      .def_property_readonly("y", [](const SolveResult& r) { return r.assignment.y; })
      .def_readonly("f1", &SolveResult::f1)
      .def_readonly("f2", &SolveResult::f2)
      .def_readonly("optimal", &SolveResult::optimal)
      .def_readonly("nodes_explored", &SolveResult::nodes_explored);

  m.def("solve_budgeted",
        [](const Scenario& s, const Rows& c, int budget) {
          py::gil_scoped_release release;
          return solve_budgeted(s, to_coefficients(c), budget);
        },
        py::arg("scenario"), py::arg("coefficients"), py::arg("budget"));
  m.def("brute_force_oracle",
        [](const Scenario& s, const Rows& c, int budget) {
          py::gil_scoped_release release;
          return brute_force_oracle(s, to_coefficients(c), budget);
        },
        py::arg("scenario"), py::arg("coefficients"), py::arg("budget"));

  py::class_<NPoint>(m, "NPoint")
      .def_property_readonly("x", [](const NPoint& p) { return from_binary(p.assignment.x); })
      .def_property_readonly("y", [](const NPoint& p) { return p.assignment.y; })
      .def_readonly("f1", &NPoint::f1)
      .def_readonly("f2", &NPoint::f2)
      .def_readonly("budget", &NPoint::budget);

  py::class_<Frontier>(m, "Frontier")
      .def_readonly("points", &Frontier::points)
      .def("__len__", [](const Frontier& f) { return f.points.size(); })
      .def("csv",
           [](const Frontier& f) {
             if (f.points.empty()) return frontier_csv(f, 0, 0);
             const auto& x = f.points.front().assignment.x;
             return frontier_csv(f, x.rows(), x.cols());
           })
      .def("json", &frontier_json)
      .def("svg", [](const Frontier& f) { return frontier_svg(f); });

  m.def("sweep",
        [](const Scenario& s, const Rows& c, int lo, int hi, unsigned workers) {
          py::gil_scoped_release release;
          return sweep(s, to_coefficients(c), {lo, hi}, workers);
        },
        py::arg("scenario"), py::arg("coefficients"), py::arg("lo"), py::arg("hi"),
        py::arg("workers") = 1);

  py::class_<SequenceOutcome>(m, "SequenceOutcome")
      .def_readonly("label", &SequenceOutcome::label)
      .def_property_readonly("x",
                             [](const SequenceOutcome& o) { return from_binary(o.assignment.x); })
      .def_readonly("f1", &SequenceOutcome::f1);
  py::class_<InvarianceReport>(m, "InvarianceReport")
      .def_readonly("budget", &InvarianceReport::budget)
      .def_readonly("outcomes", &InvarianceReport::outcomes)
      .def_readonly("all_assignments_identical", &InvarianceReport::all_assignments_identical)
      .def_property_readonly("disagreements", [](const InvarianceReport& r) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& d : r.disagreements) out.emplace_back(d.first, d.second);
        return out;
      });

  m.def("weight_sequence_study",
        [](const Scenario& s, const std::vector<std::pair<std::string, std::vector<double>>>& seqs,
           int budget) {
          std::vector<WeightSequence> ws;
          for (const auto& [label, u] : seqs) ws.push_back({label, u});
          py::gil_scoped_release release;
          return weight_sequence_study(s, ws, budget);
        },
        py::arg("scenario"), py::arg("sequences"), py::arg("budget"));

  py::class_<SensitivityRange>(m, "SensitivityRange")
      .def_readonly("transmitter", &SensitivityRange::transmitter)
      .def_readonly("original_value", &SensitivityRange::original_value)
      .def_readonly("low", &SensitivityRange::low)
      .def_readonly("high", &SensitivityRange::high)
      .def_readonly("budget", &SensitivityRange::budget);
  m.def("weight_range",
        [](const Scenario& s, int budget, int transmitter, double tol) {
          py::gil_scoped_release release;
          return weight_range(s, budget, transmitter, tol);
        },
        py::arg("scenario"), py::arg("budget"), py::arg("transmitter"), py::arg("tol"));
}
