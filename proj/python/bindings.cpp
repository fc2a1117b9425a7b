// bindings.cpp — python module exposing the core operations: closed-form
// values for every order, the relaxed solver with witnesses, the negative-
// order pathway, and the verification suites.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "renyi_ci/coupling_entropy.hpp"
#include "renyi_ci/dsbs_core.hpp"
#include "renyi_ci/lemma_suite.hpp"
#include "renyi_ci/negative_orders.hpp"
#include "renyi_ci/relaxed_wyner.hpp"

namespace py = pybind11;
namespace rc = renyi_ci;

PYBIND11_MODULE(_renyi_ci, m) {
    m.doc() = "Renyi common information of the doubly symmetric binary source";
    m.attr("__version__") = "0.1.0";

    py::register_exception<rc::PhaseUncertainError>(m, "PhaseUncertainError",
                                                    PyExc_ValueError);

    py::class_<rc::CiResult>(m, "CiResult")
        .def_readonly("value", &rc::CiResult::value)
        .def_readonly("epsilon", &rc::CiResult::epsilon)
        .def_readonly("p_star", &rc::CiResult::p_star)
        .def_readonly("q", &rc::CiResult::q)
        .def_readonly("r_star", &rc::CiResult::r_star)
        .def_property_readonly(
            "order", [](const rc::CiResult& r) { return r.order.describe(); })
        .def("__repr__", [](const rc::CiResult& r) {
            return "CiResult(value=" + std::to_string(r.value) +
                   ", order=" + r.order.describe() + ")";
        });

    py::class_<rc::RelaxedCiWitness>(m, "RelaxedCiWitness")
        .def_readonly("r", &rc::RelaxedCiWitness::r)
        .def_readonly("t", &rc::RelaxedCiWitness::t)
        .def_readonly("q", &rc::RelaxedCiWitness::q)
        .def_readonly("b", &rc::RelaxedCiWitness::b)
        .def_readonly("b0", &rc::RelaxedCiWitness::b0)
        .def_readonly("value", &rc::RelaxedCiWitness::value);

    py::class_<rc::Condition1Report>(m, "Condition1Report")
        .def_readonly("epsilon", &rc::Condition1Report::epsilon)
        .def_readonly("holds", &rc::Condition1Report::holds)
        .def_readonly("s_range_end", &rc::Condition1Report::s_range_end)
        .def_readonly("worst_s", &rc::Condition1Report::worst_s)
        .def_readonly("worst_omega", &rc::Condition1Report::worst_omega)
        .def_readonly("grid_points", &rc::Condition1Report::grid_points);

    py::class_<rc::PhasePoint>(m, "PhasePoint")
        .def_readonly("epsilon", &rc::PhasePoint::epsilon)
        .def_readonly("gamma_ub_minus_inf", &rc::PhasePoint::gamma_ub_minus_inf)
        .def_readonly("wyner", &rc::PhasePoint::wyner)
        .def_readonly("gap", &rc::PhasePoint::gap)
        .def_readonly("r_star", &rc::PhasePoint::r_star);

    py::class_<rc::VerificationReport>(m, "VerificationReport")
        .def_readonly("suite", &rc::VerificationReport::suite)
        .def_readonly("pass_", &rc::VerificationReport::pass)
        .def_readonly("worst_violation", &rc::VerificationReport::worst_violation)
        .def_readonly("worst_location", &rc::VerificationReport::worst_location)
        .def_readonly("points_checked", &rc::VerificationReport::points_checked)
        .def_readonly("tolerance_used", &rc::VerificationReport::tolerance_used)
        .def_readonly("skipped_points", &rc::VerificationReport::skipped_points);

    m.def("wyner_ci", &rc::wyner_ci, py::arg("eps"),
          "Wyner common information of DSBS(eps) in bits.");
    m.def("exact_ci", &rc::exact_ci, py::arg("eps"),
          "Exact (order-infinity) common information of DSBS(eps) in bits.");
    m.def(
        "renyi_ci",
        [](double eps, double alpha) {
            return rc::renyi_ci(eps, rc::Order::from_alpha(alpha));
        },
        py::arg("eps"), py::arg("alpha"),
        "Gamma_alpha with witnesses; alpha may be +-inf. Negative orders "
        "raise PhaseUncertainError when only the upper bound is certified.");
    m.def("chi_s", &rc::chi_s, py::arg("t"), py::arg("eps"), py::arg("s"),
          "The convex certificate; at t = (1-2 eps)/4 it equals Gamma_{1+s}.");
    m.def("kappa", &rc::kappa, py::arg("eps"), py::arg("s"));
    m.def("p_star", &rc::p_star, py::arg("eps"), py::arg("s"),
          "Stationary coupling cell of the order-(1+s) closed form.");
    m.def("p_star_general", &rc::p_star_general, py::arg("gamma1"),
          py::arg("gamma2"), py::arg("kappa"),
          "Stationary cell of a 2x2 coupling with the given marginals.");
    m.def("gamma_ub_super1", &rc::gamma_ub_super1, py::arg("eps"), py::arg("s"));

    m.def("q0", &rc::q0, py::arg("r"), "Zero of the constraint function.");
    m.def("conditional_mi", &rc::conditional_mi, py::arg("r"), py::arg("q"));
    m.def("relaxed_ci", &rc::relaxed_ci, py::arg("r"), py::arg("t"),
          "Relaxed common information C(r,t) with the additive-noise witness.");
    m.def("brute_force_relaxed_ci", &rc::brute_force_relaxed_ci, py::arg("r"),
          py::arg("t"), py::arg("grid_step"),
          "Independent grid oracle over binary-W conditionals.");

    m.def("omega", &rc::omega, py::arg("eps"), py::arg("s"));
    m.def("condition1_holds", &rc::condition1_holds, py::arg("eps"),
          py::arg("grid") = 10000,
          "Check the negative-order sufficient condition at eps.");
    m.def("epsilon0", &rc::epsilon0, py::arg("tolerance"),
          py::arg("bracket_lo") = 0.01, py::arg("bracket_hi") = 0.10,
          "Bisect the threshold where the condition starts to hold.");
    m.def(
        "gamma_ub_negative",
        [](double eps, double alpha) {
            return rc::gamma_ub_negative(eps, rc::Order::from_alpha(alpha));
        },
        py::arg("eps"), py::arg("alpha"),
        "Certified negative-order upper bound with witnesses.");
    m.def("g_domain_start", &rc::g_domain_start, py::arg("eps"));
    m.def("g_condition", &rc::g_condition, py::arg("t"), py::arg("eps"));
    m.def("g_condition_deriv", &rc::g_condition_deriv, py::arg("t"), py::arg("eps"));
    m.def("phase_scan", &rc::phase_scan, py::arg("eps_min"), py::arg("eps_max"),
          py::arg("points"), "Negative-order gap scan over eps.");

    m.def("phi_split", &rc::phi_split, py::arg("p"), py::arg("gamma"),
          py::arg("s"), py::arg("t"));
    m.def("chi_core", &rc::chi_core, py::arg("t"), py::arg("kappa"));
    m.def("chi_core_dt", &rc::chi_core_dt, py::arg("t"), py::arg("kappa"));
    m.def("chi_core_dt2", &rc::chi_core_dt2, py::arg("t"), py::arg("kappa"));
    m.def("verify_entropy_splitting", &rc::verify_entropy_splitting,
          py::arg("grid_density") = 50);
    m.def("verify_chi_properties", &rc::verify_chi_properties,
          py::arg("kappa_grid") = 10, py::arg("s_grid") = 10,
          py::arg("t_grid") = 50);
    m.def("verify_chi_corrected", &rc::verify_chi_corrected,
          py::arg("kappa_grid") = 10, py::arg("s_grid") = 10,
          py::arg("t_grid") = 50);
    m.def("verify_phi_ratio_monotone", &rc::verify_phi_ratio_monotone,
          py::arg("grid") = 1000);
    m.def("verify_condition_chain", &rc::verify_condition_chain, py::arg("eps"),
          py::arg("grid") = 1000);
}
