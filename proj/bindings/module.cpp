#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "redheffer/core.hpp"
#include "redheffer/qpe.hpp"
#include "redheffer/thresholds.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Generalized Redheffer inequality numerics and a quantum "
      "phase-estimation simulator";

  m.def("alpha_sharp", &redheffer::alpha_sharp,
        "Sharp exponent log 2 / log(4/pi)");
  m.def("success_bound", &redheffer::success_bound,
        "Phase-estimation success floor 8/pi^2");
  m.def("alpha_two", &redheffer::alpha_two,
        "The n = 2 induction threshold log 2 / log(21/16)");
  m.def("product_limit", &redheffer::product_limit,
        "lim F_n(1) = pi/4");

  m.def("partial_product", &redheffer::partial_product, py::arg("n"),
        py::arg("y"), "F_n(y) = prod_{k=2}^n (1 - y/(2k-1)^2)");
  m.def("partial_product_log_deriv", &redheffer::partial_product_log_deriv,
        py::arg("n"), py::arg("y"), "F_n'(y)/F_n(y)");
  m.def("infinite_product", &redheffer::infinite_product, py::arg("y"),
        "cos(pi sqrt(y)/2)/(1-y), with value pi/4 at y = 1");
  m.def("induction_gap", &redheffer::induction_gap, py::arg("n"),
        py::arg("alpha"), py::arg("y"),
        "(1+y)^{1/alpha} F_n(y) - (1 + y/(4n-2))");
  m.def("margin", &redheffer::margin, py::arg("alpha"), py::arg("x"),
        "(1+4x^2)^{1/alpha} cos(pi x) - (1-4x^2)");
  m.def("corollary_lhs", &redheffer::corollary_lhs, py::arg("theta"),
        "sin^2(pi t)(1/t^2 + 1/(1-t)^2)");
  m.def("induction_step_residual", &redheffer::induction_step_residual,
        py::arg("m"), py::arg("y"));
  m.def("induction_step_residual_bound",
        &redheffer::induction_step_residual_bound, py::arg("m"), py::arg("y"));

  py::class_<redheffer::SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("alpha_lo", &redheffer::SolverConfig::alpha_lo)
      .def_readwrite("alpha_hi", &redheffer::SolverConfig::alpha_hi)
      .def_readwrite("alpha_tol", &redheffer::SolverConfig::alpha_tol)
      .def_readwrite("y_grid", &redheffer::SolverConfig::y_grid)
      .def_readwrite("neg_tol", &redheffer::SolverConfig::neg_tol);

  py::class_<redheffer::GapScan>(m, "GapScan")
      .def_readonly("min_value", &redheffer::GapScan::min_value)
      .def_readonly("argmin", &redheffer::GapScan::argmin);

  py::class_<redheffer::MarginReport>(m, "MarginReport")
      .def_readonly("alpha", &redheffer::MarginReport::alpha)
      .def_readonly("grid_count", &redheffer::MarginReport::grid_count)
      .def_readonly("min_margin", &redheffer::MarginReport::min_margin)
      .def_readonly("argmin_x", &redheffer::MarginReport::argmin_x)
      .def_readonly("refined", &redheffer::MarginReport::refined);

  py::class_<redheffer::ThresholdRow>(m, "ThresholdRow")
      .def_readonly("n", &redheffer::ThresholdRow::n)
      .def_readonly("alpha_n", &redheffer::ThresholdRow::alpha_n)
      .def_readonly("beta_n", &redheffer::ThresholdRow::beta_n)
      .def_readonly("gamma_n", &redheffer::ThresholdRow::gamma_n)
      .def_readonly("alpha_eq_beta", &redheffer::ThresholdRow::alpha_eq_beta);

  m.def("beta_threshold", &redheffer::beta_threshold, py::arg("n"));
  m.def("gamma_threshold", &redheffer::gamma_threshold, py::arg("n"));
  m.def("min_induction_gap", &redheffer::min_induction_gap, py::arg("n"),
        py::arg("alpha"), py::arg("grid_count"), py::arg("threads") = 1);
  m.def(
      "alpha_threshold",
      [](int n, const redheffer::SolverConfig& cfg) {
        return redheffer::alpha_threshold(n, cfg);
      },
      py::arg("n"), py::arg("cfg") = redheffer::SolverConfig{});
  m.def("certify_inequality", &redheffer::certify_inequality,
        py::arg("alpha"), py::arg("grid_count"), py::arg("threads") = 1);
  m.def("find_violation", &redheffer::find_violation, py::arg("alpha"));
  m.def("concavity_check", &redheffer::concavity_check, py::arg("alpha"),
        py::arg("grid_count"));
  m.def(
      "threshold_table",
      [](int n_max, const redheffer::SolverConfig& cfg) {
        return redheffer::threshold_table(n_max, cfg);
      },
      py::arg("n_max"), py::arg("cfg") = redheffer::SolverConfig{});

  py::class_<redheffer::qpe::StateVector>(m, "StateVector")
      .def_readonly("num_qubits", &redheffer::qpe::StateVector::num_qubits)
      .def_readonly("amplitudes", &redheffer::qpe::StateVector::amplitudes)
      .def("norm", &redheffer::qpe::StateVector::norm);

  py::class_<redheffer::qpe::OutcomeDistribution>(m, "OutcomeDistribution")
      .def_readonly("num_qubits",
                    &redheffer::qpe::OutcomeDistribution::num_qubits)
      .def_readonly("phase", &redheffer::qpe::OutcomeDistribution::phase)
      .def_readonly("probs", &redheffer::qpe::OutcomeDistribution::probs);

  py::class_<redheffer::qpe::SuccessReport>(m, "SuccessReport")
      .def_readonly("phase", &redheffer::qpe::SuccessReport::phase)
      .def_readonly("num_qubits", &redheffer::qpe::SuccessReport::num_qubits)
      .def_readonly("x_lo", &redheffer::qpe::SuccessReport::x_lo)
      .def_readonly("x_hi", &redheffer::qpe::SuccessReport::x_hi)
      .def_readonly("p_lo", &redheffer::qpe::SuccessReport::p_lo)
      .def_readonly("p_hi", &redheffer::qpe::SuccessReport::p_hi)
      .def_readonly("success_prob",
                    &redheffer::qpe::SuccessReport::success_prob)
      .def_readonly("bound", &redheffer::qpe::SuccessReport::bound)
      .def_readonly("satisfied", &redheffer::qpe::SuccessReport::satisfied);

  m.attr("MAX_QUBITS") = redheffer::qpe::kMaxQubits;
  m.def("basis_state", &redheffer::qpe::basis_state, py::arg("num_qubits"),
        py::arg("x"));
  m.def("phase_state", &redheffer::qpe::phase_state, py::arg("num_qubits"),
        py::arg("phase"));
  m.def("qft", &redheffer::qpe::qft, py::arg("state"));
  m.def("inverse_qft", &redheffer::qpe::inverse_qft, py::arg("state"));
  m.def("qft_direct", &redheffer::qpe::qft_direct, py::arg("state"));
  m.def("inverse_qft_direct", &redheffer::qpe::inverse_qft_direct,
        py::arg("state"));
  m.def("phase_error", &redheffer::qpe::phase_error, py::arg("phase"),
        py::arg("num_qubits"), py::arg("x"));
  m.def("closed_form_prob", &redheffer::qpe::closed_form_prob,
        py::arg("num_qubits"), py::arg("phase"), py::arg("x"));
  m.def("outcome_distribution", &redheffer::qpe::outcome_distribution,
        py::arg("num_qubits"), py::arg("phase"));
  m.def("success_probability", &redheffer::qpe::success_probability,
        py::arg("num_qubits"), py::arg("phase"));
}
