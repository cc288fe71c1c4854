#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "epropt/analysis.hpp"
#include "epropt/manopt.hpp"

namespace py = pybind11;
using namespace epropt;

PYBIND11_MODULE(_core, m) {
  m.doc() = "EPR squeezing of the dual-NOPA coherent-feedback network and "
            "its optimization over unitary scattering matrices";

  py::register_exception<singular_loop_error>(m, "SingularLoopError",
                                              PyExc_ArithmeticError);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<double, double, double, double>(), py::arg("x"),
           py::arg("d") = 0.0, py::arg("loss_scale") = 0.0,
           py::arg("gamma_r") = 7.2e7)
      .def_readonly("x", &SystemParams::x)
      .def_readonly("gamma_r", &SystemParams::gamma_r)
      .def_readonly("K", &SystemParams::K)
      .def_readonly("loss_scale", &SystemParams::loss_scale)
      .def_readonly("d", &SystemParams::d)
      .def_readonly("alpha", &SystemParams::alpha)
      .def_readonly("beta", &SystemParams::beta)
      .def("effective_K", &SystemParams::effective_K)
      .def("__repr__", [](const SystemParams& p) {
        return "SystemParams(x=" + std::to_string(p.x) +
               ", d=" + std::to_string(p.d) +
               ", loss_scale=" + std::to_string(p.loss_scale) + ")";
      });

  py::class_<NopaCoefficients>(m, "NopaCoefficients")
      .def_readonly("h1", &NopaCoefficients::h1)
      .def_readonly("h2", &NopaCoefficients::h2)
      .def_readonly("h3", &NopaCoefficients::h3)
      .def_readonly("h4", &NopaCoefficients::h4);

  py::class_<NopaCoefficientsAtFrequency>(m, "NopaCoefficientsAtFrequency")
      .def_readonly("h1", &NopaCoefficientsAtFrequency::h1)
      .def_readonly("h2", &NopaCoefficientsAtFrequency::h2)
      .def_readonly("h3", &NopaCoefficientsAtFrequency::h3)
      .def_readonly("h4", &NopaCoefficientsAtFrequency::h4);

  m.def("h_coeffs_infinite",
        py::overload_cast<const SystemParams&>(&h_coeffs_infinite),
        py::arg("params"));
  m.def("h_coeffs_infinite",
        py::overload_cast<double, double>(&h_coeffs_infinite), py::arg("x"),
        py::arg("K_effective"));
  m.def("h_coeffs_finite",
        py::overload_cast<double, const SystemParams&>(&h_coeffs_finite),
        py::arg("omega"), py::arg("params"));
  m.def("h_coeffs_finite",
        py::overload_cast<double, double, double, double>(&h_coeffs_finite),
        py::arg("omega"), py::arg("x"), py::arg("K_effective"),
        py::arg("gamma_r"));
  m.def("nopa_transfer", &nopa_transfer, py::arg("h"));

  m.def("s_cfb", &s_cfb);
  m.def("unitarity_defect", &unitarity_defect, py::arg("s"));
  m.def("to_quadrature", &to_quadrature, py::arg("s"));
  m.def("project_to_unitary", &project_to_unitary, py::arg("m"));
  m.def("random_unitary", &random_unitary, py::arg("seed"));
  m.def("random_tangent", &random_tangent, py::arg("s"), py::arg("seed"));

  m.def("transfer", &transfer, py::arg("s_tilde"), py::arg("params"));
  m.def("oracle_transfer", &oracle_transfer, py::arg("s_tilde"),
        py::arg("params"));

  py::class_<Squeezing>(m, "Squeezing")
      .def_readonly("V", &Squeezing::V)
      .def_readonly("V_plus", &Squeezing::V_plus)
      .def_readonly("V_minus", &Squeezing::V_minus)
      .def_readonly("entangled", &Squeezing::entangled);

  m.def("squeezing", &squeezing, py::arg("s_tilde"), py::arg("params"));
  m.def("squeezing_rotated", &squeezing_rotated, py::arg("s_tilde"),
        py::arg("params"), py::arg("psi1"), py::arg("psi2"));

  py::class_<GradientInfo>(m, "GradientInfo")
      .def_readonly("D", &GradientInfo::D)
      .def_readonly("Z", &GradientInfo::Z)
      .def_readonly("grad_norm", &GradientInfo::grad_norm);

  m.def("directional_derivative", &directional_derivative, py::arg("s_tilde"),
        py::arg("params"));
  m.def("d_cfb_coefficient", &d_cfb_coefficient, py::arg("params"));

  py::class_<HessianInfo>(m, "HessianInfo")
      .def_readonly("X", &HessianInfo::X)
      .def_readonly("Hess", &HessianInfo::Hess)
      .def_readonly("eigenvalues", &HessianInfo::eigenvalues)
      .def_readonly("L", &HessianInfo::L);

  m.def("hessian", &hessian, py::arg("s_tilde"), py::arg("params"));
  m.def("commutation_matrix_4", &commutation_matrix_4);

  py::class_<DescentResult>(m, "DescentResult")
      .def_readonly("s_final", &DescentResult::s_final)
      .def_readonly("V_final", &DescentResult::V_final)
      .def_readonly("iterations", &DescentResult::iterations)
      .def_readonly("converged", &DescentResult::converged)
      .def_readonly("trace", &DescentResult::trace);

  m.def(
      "steepest_descent",
      [](const Matrix2cd& s0, const SystemParams& params, double tol_grad,
         int max_iter, double step0) {
        DescentOptions opts;
        opts.tol_grad = tol_grad;
        opts.max_iter = max_iter;
        opts.step0 = step0;
        return steepest_descent(s0, params, opts);
      },
      py::arg("s0"), py::arg("params"), py::arg("tol_grad") = 1e-10,
      py::arg("max_iter") = 10000, py::arg("step0") = 1.0);

  m.def("critical_point_check", &critical_point_check, py::arg("s_tilde"),
        py::arg("params"), py::arg("tol"));
  m.def("local_min_check", &local_min_check, py::arg("s_tilde"),
        py::arg("params"), py::arg("tol"));

  py::class_<EigFormulaResult>(m, "EigFormulaResult")
      .def_readonly("e1", &EigFormulaResult::e1)
      .def_readonly("e2", &EigFormulaResult::e2)
      .def_readonly("e3", &EigFormulaResult::e3)
      .def_readonly("e4", &EigFormulaResult::e4);

  m.def("closed_form_eigs", &closed_form_eigs, py::arg("x"));
  m.def("find_x_lm", &find_x_lm, py::arg("d"), py::arg("loss_scale"),
        py::arg("tol") = 1e-7);

  py::class_<TableRow>(m, "TableRow")
      .def_readonly("table", &TableRow::table)
      .def_readonly("d", &TableRow::d)
      .def_readonly("loss_scale", &TableRow::loss_scale)
      .def_readonly("x_lm", &TableRow::x_lm)
      .def_readonly("x_lm_reference", &TableRow::x_lm_reference)
      .def_readonly("abs_error", &TableRow::abs_error);

  py::class_<TableReport>(m, "TableReport")
      .def_readonly("rows", &TableReport::rows)
      .def_readonly("max_abs_error", &TableReport::max_abs_error)
      .def_readonly("mismatches", &TableReport::mismatches);

  m.def("reproduce_tables", &reproduce_tables);

  m.attr("X_MAX") = kXMax;
}
