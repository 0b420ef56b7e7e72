// Copyright 2026 The cspsamle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cspsamle/bounds.h"
#include "cspsamle/cspsa.h"
#include "cspsamle/errors.h"
#include "cspsamle/harness.h"
#include "cspsamle/measurement.h"
#include "cspsamle/mle.h"
#include "cspsamle/report.h"
#include "cspsamle/states.h"

namespace py = pybind11;
using namespace cspsamle;

namespace {

PureState to_state(const ComplexVector& v) { return PureState(v); }

py::dict stats_dict(const SummaryStats& s) {
  py::dict d;
  d["mean"] = s.mean;
  d["variance"] = s.variance;
  d["median"] = s.median;
  d["q1"] = s.q1;
  d["q3"] = s.q3;
  d["count"] = s.count;
  return d;
}

}  // namespace

PYBIND11_MODULE(cspsamle, m) {
  m.doc() = "CSPSA-MLE adaptive pure-state tomography simulator";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ZeroVector>(m, "ZeroVector", error.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error.ptr());
  py::register_exception<InvalidDistribution>(m, "InvalidDistribution", error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<DegenerateIterate>(m, "DegenerateIterate", error.ptr());
  py::register_exception<EmptyData>(m, "EmptyData", error.ptr());
  py::register_exception<EmptyInput>(m, "EmptyInput", error.ptr());
  py::register_exception<ConfigInvalid>(m, "ConfigInvalid", error.ptr());
  py::register_exception<IoFailure>(m, "IoFailure", error.ptr());

  py::class_<Rng>(m, "Rng", "Seeded Mersenne Twister stream")
      .def(py::init<std::uint64_t>(), py::arg("seed"));

  // States are exchanged with Python as 1-d complex numpy arrays.
  m.def("normalize",
        [](const ComplexVector& raw) { return normalize(raw).amplitudes(); },
        py::arg("raw"));
  m.def("fidelity",
        [](const ComplexVector& a, const ComplexVector& b) {
          return fidelity(to_state(a), to_state(b));
        },
        py::arg("a"), py::arg("b"));
  m.def("infidelity",
        [](const ComplexVector& a, const ComplexVector& b) {
          return infidelity(to_state(a), to_state(b));
        },
        py::arg("a"), py::arg("b"));
  m.def("haar_random_state",
        [](Eigen::Index d, Rng& rng) { return haar_random_state(d, rng).amplitudes(); },
        py::arg("d"), py::arg("rng"));

  m.def("complete_basis",
        [](const ComplexVector& psi) { return complete_basis(to_state(psi)).columns(); },
        py::arg("psi"), "Unitary whose column 0 is psi");
  m.def("outcome_probabilities",
        [](const ComplexMatrix& basis, const ComplexVector& truth) {
          return outcome_probabilities(MeasurementBasis::from_columns(basis), to_state(truth));
        },
        py::arg("basis"), py::arg("truth"));
  m.def("simulate_counts",
        [](const std::vector<double>& p, std::int64_t shots, Rng& rng) {
          return simulate_counts(p, shots, rng);
        },
        py::arg("probabilities"), py::arg("shots"), py::arg("rng"));
  m.def("estimate_infidelity",
        [](const ComplexMatrix& basis, const std::vector<std::int64_t>& counts) {
          return estimate_infidelity(CountRecord(MeasurementBasis::from_columns(basis), counts));
        },
        py::arg("basis"), py::arg("counts"));

  py::class_<GainParams>(m, "GainParams")
      .def(py::init<>())
      .def_readwrite("a", &GainParams::a)
      .def_readwrite("big_a", &GainParams::big_a)
      .def_readwrite("s", &GainParams::s)
      .def_readwrite("b", &GainParams::b)
      .def_readwrite("r", &GainParams::r);
  m.def("default_gains", &default_gains, py::arg("n_est"));
  m.def("gains_at",
        [](const GainParams& p, std::int64_t k) {
          const Gains g = gains_at(p, k);
          return py::make_tuple(g.step, g.perturbation);
        },
        py::arg("params"), py::arg("k"), "Returns (a_k, c_k)");
  m.def("gradient_estimate",
        [](double f_plus, double f_minus, double c_k, const ComplexVector& delta) {
          return gradient_estimate(f_plus, f_minus, c_k, Perturbation(delta));
        },
        py::arg("f_plus"), py::arg("f_minus"), py::arg("c_k"), py::arg("delta"));

  m.def("gill_massar_pure", &gill_massar_pure, py::arg("d"), py::arg("n"));
  m.def("gill_massar_mixed", &gill_massar_mixed, py::arg("d"), py::arg("n"));
  m.def("total_ensemble", &total_ensemble, py::arg("n_est"), py::arg("k"));
  m.def("summarize",
        [](const std::vector<double>& xs) { return stats_dict(summarize(xs)); },
        py::arg("samples"));

  m.def("refine",
        [](const std::vector<std::pair<ComplexMatrix, std::vector<std::int64_t>>>& records,
           const ComplexVector& start) {
          AccumulatedData data;
          for (const auto& [basis, counts] : records) {
            data.add(CountRecord(MeasurementBasis::from_columns(basis), counts));
          }
          return refine(data, to_state(start)).amplitudes();
        },
        py::arg("records"), py::arg("start"),
        "Maximum-likelihood pure state for a list of (basis, counts) records");

  py::enum_<Mode>(m, "Mode")
      .value("CSPSA_MLE", Mode::kCspsaMle)
      .value("CSPSA_ONLY", Mode::kCspsaOnly);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("dim", &ExperimentConfig::dim)
      .def_readwrite("n_est", &ExperimentConfig::n_est)
      .def_readwrite("k_max", &ExperimentConfig::k_max)
      .def_readwrite("num_states", &ExperimentConfig::num_states)
      .def_readwrite("guesses", &ExperimentConfig::guesses)
      .def_readwrite("reps", &ExperimentConfig::reps)
      .def_readwrite("gains", &ExperimentConfig::gains)
      .def_readwrite("mode", &ExperimentConfig::mode)
      .def_readwrite("master_seed", &ExperimentConfig::master_seed)
      .def_readwrite("workers", &ExperimentConfig::workers)
      .def_readwrite("per_state", &ExperimentConfig::per_state);

  m.def("run_trial",
        [](const ExperimentConfig& c, const ComplexVector& truth, const ComplexVector& guess,
           Rng& rng) { return run_trial(c, to_state(truth), to_state(guess), rng).infidelity; },
        py::arg("config"), py::arg("truth"), py::arg("initial_guess"), py::arg("rng"),
        "Per-iteration infidelity of one run");

  py::class_<AggregateReport>(m, "AggregateReport")
      .def_readonly("total_copies", &AggregateReport::total_copies)
      .def_readonly("gm_pure", &AggregateReport::gm_pure)
      .def_readonly("gm_mixed", &AggregateReport::gm_mixed)
      .def_readonly("rejected_steps", &AggregateReport::rejected_steps)
      .def_property_readonly("pooled",
                             [](const AggregateReport& r) {
                               py::list out;
                               for (const auto& s : r.pooled) out.append(stats_dict(s));
                               return out;
                             })
      .def("write", [](const AggregateReport& r, const std::string& path) { write_report(r, path); },
           py::arg("path"));

  m.def("run_experiment", &run_experiment, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
}
