#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stefanctl/controller.hpp"
#include "stefanctl/diagnostics.hpp"
#include "stefanctl/errors.hpp"
#include "stefanctl/scenario_io.hpp"
#include "stefanctl/solver.hpp"
#include "stefanctl/transforms.hpp"

namespace py = pybind11;
using namespace stefanctl;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boundary-controlled one-phase melting: solver, feedback law, "
            "backstepping transforms and stability diagnostics";

  py::register_exception<Error>(m, "StefanError");

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init([](double rho, double cp, double k, double dh, double t_melt) {
             return PhysicalParams{rho, cp, k, dh, t_melt};
           }),
           py::arg("rho"), py::arg("cp"), py::arg("k"), py::arg("dh"),
           py::arg("t_melt"))
      .def_readwrite("rho", &PhysicalParams::rho)
      .def_readwrite("cp", &PhysicalParams::cp)
      .def_readwrite("k", &PhysicalParams::k)
      .def_readwrite("dh", &PhysicalParams::dh)
      .def_readwrite("t_melt", &PhysicalParams::t_melt)
      .def("alpha", &PhysicalParams::alpha)
      .def("beta", &PhysicalParams::beta);

  py::enum_<BcMode>(m, "BcMode")
      .value("CONTROLLED_FLUX", BcMode::ControlledFlux)
      .value("PRESCRIBED_FLUX", BcMode::PrescribedFlux)
      .value("PRESCRIBED_TEMPERATURE", BcMode::PrescribedTemperature);

  py::enum_<Integrator>(m, "Integrator")
      .value("EXPLICIT", Integrator::Explicit)
      .value("IMPLICIT", Integrator::Implicit);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("params", &Scenario::params)
      .def_readwrite("gain_c", &Scenario::gain_c)
      .def_readwrite("setpoint_sr", &Scenario::setpoint_sr)
      .def_readwrite("s0", &Scenario::s0)
      .def_readwrite("h_slope", &Scenario::h_slope)
      .def_readwrite("domain_length", &Scenario::domain_length)
      .def_readwrite("n_cells", &Scenario::n_cells)
      .def_readwrite("dt", &Scenario::dt)
      .def_readwrite("t_final", &Scenario::t_final)
      .def_readwrite("bc_mode", &Scenario::bc_mode)
      .def_readwrite("integrator", &Scenario::integrator)
      .def("validate", &Scenario::validate);

  py::class_<Coefficients>(m, "Coefficients")
      .def_readonly("alpha", &Coefficients::alpha)
      .def_readonly("beta", &Coefficients::beta);
  m.def("derive_coefficients", &derive_coefficients, py::arg("params"));

  py::class_<InitialProfile>(m, "InitialProfile")
      .def_readonly("values", &InitialProfile::values);
  m.def("build_initial_profile", &build_initial_profile, py::arg("scenario"));

  py::class_<FeasibilityVerdict>(m, "FeasibilityVerdict")
      .def_readonly("feasible", &FeasibilityVerdict::feasible)
      .def_readonly("margin", &FeasibilityVerdict::margin)
      .def_readonly("bound", &FeasibilityVerdict::bound);
  m.def("feasible_setpoint", &feasible_setpoint, py::arg("scenario"),
        py::arg("profile"));

  py::class_<SolverState>(m, "SolverState")
      .def(py::init<>())
      .def_readwrite("u", &SolverState::u)
      .def_readwrite("s", &SolverState::s)
      .def_readwrite("t", &SolverState::t);

  py::class_<ControlInput>(m, "ControlInput")
      .def_readonly("q_c", &ControlInput::q_c)
      .def_readonly("energy_e", &ControlInput::energy_e)
      .def_readonly("t", &ControlInput::t);
  m.def("control_law", &control_law, py::arg("state"), py::arg("scenario"));
  m.def("predicted_flux", &predicted_flux, py::arg("t"), py::arg("q_c0"),
        py::arg("c"));
  m.def("predicted_energy", &predicted_energy, py::arg("t"), py::arg("scenario"),
        py::arg("e0"));

  py::class_<TraceRecord>(m, "TraceRecord")
      .def_readonly("t", &TraceRecord::t)
      .def_readonly("s", &TraceRecord::s)
      .def_readonly("s_dot", &TraceRecord::s_dot)
      .def_readonly("q_c", &TraceRecord::q_c)
      .def_readonly("q_c_predicted", &TraceRecord::q_c_predicted)
      .def_readonly("energy_e", &TraceRecord::energy_e)
      .def_readonly("energy_predicted", &TraceRecord::energy_predicted)
      .def_readonly("l2_sq", &TraceRecord::l2_sq)
      .def_readonly("h1_sq", &TraceRecord::h1_sq)
      .def_readonly("x_sq", &TraceRecord::x_sq)
      .def_readonly("v1", &TraceRecord::v1)
      .def_readonly("v", &TraceRecord::v)
      .def_readonly("envelope_bound", &TraceRecord::envelope_bound)
      .def_readonly("flag_qc", &TraceRecord::flag_qc)
      .def_readonly("flag_sdot", &TraceRecord::flag_sdot)
      .def_readonly("flag_band", &TraceRecord::flag_band)
      .def_readonly("flag_temp", &TraceRecord::flag_temp)
      .def_readonly("min_u", &TraceRecord::min_u)
      .def_readonly("w_interface_abs", &TraceRecord::w_interface_abs)
      .def_readonly("wx_origin_abs", &TraceRecord::wx_origin_abs);

  py::class_<DecayCertificate>(m, "DecayCertificate")
      .def_readonly("p", &DecayCertificate::p)
      .def_readonly("p_upper", &DecayCertificate::p_upper)
      .def_readonly("a", &DecayCertificate::a)
      .def_readonly("b", &DecayCertificate::b)
      .def_readonly("m1", &DecayCertificate::m1)
      .def_readonly("m2", &DecayCertificate::m2)
      .def_readonly("m3", &DecayCertificate::m3)
      .def_readonly("m4", &DecayCertificate::m4)
      .def_readonly("m5", &DecayCertificate::m5)
      .def_readonly("m6", &DecayCertificate::m6)
      .def_readonly("m7", &DecayCertificate::m7)
      .def_readonly("m8", &DecayCertificate::m8)
      .def_readonly("delta_bar", &DecayCertificate::delta_bar)
      .def_readonly("delta_under", &DecayCertificate::delta_under)
      .def_readonly("big_d", &DecayCertificate::big_d);
  m.def("decay_certificate", &decay_certificate, py::arg("scenario"),
        py::arg("p_override") = std::nullopt);

  py::class_<ClosedLoopResult>(m, "ClosedLoopResult")
      .def_readonly("records", &ClosedLoopResult::records)
      .def_readonly("certificate", &ClosedLoopResult::certificate)
      .def_readonly("feasibility", &ClosedLoopResult::feasibility)
      .def_readonly("q_c0", &ClosedLoopResult::q_c0)
      .def_readonly("e0", &ClosedLoopResult::e0)
      .def_readonly("v1_0", &ClosedLoopResult::v1_0)
      .def_readonly("eps_rel", &ClosedLoopResult::eps_rel);
  m.def(
      "closed_loop_run",
      [](const Scenario& sc, int record_every) {
        return closed_loop_run(sc, RunOptions{record_every});
      },
      py::arg("scenario"), py::arg("record_every") = 0);

  py::class_<TargetState>(m, "TargetState")
      .def_readonly("w", &TargetState::w)
      .def_readonly("x_err", &TargetState::x_err)
      .def_readonly("s", &TargetState::s);
  m.def(
      "direct_transform",
      [](const std::vector<double>& u, double s, const Scenario& sc) {
        return direct_transform(u, s, TransformParams::from_scenario(sc));
      },
      py::arg("u"), py::arg("s"), py::arg("scenario"));
  m.def(
      "inverse_transform",
      [](const std::vector<double>& w, double x_err, const Scenario& sc) {
        return inverse_transform(w, x_err, TransformParams::from_scenario(sc));
      },
      py::arg("w"), py::arg("x_err"), py::arg("scenario"));

  py::class_<KernelResidualReport>(m, "KernelResidualReport")
      .def_readonly("h_ode", &KernelResidualReport::h_ode)
      .def_readonly("h_ode_fd", &KernelResidualReport::h_ode_fd)
      .def_readonly("h_value_origin", &KernelResidualReport::h_value_origin)
      .def_readonly("h_slope_origin", &KernelResidualReport::h_slope_origin)
      .def_readonly("h_slope_origin_fd", &KernelResidualReport::h_slope_origin_fd)
      .def_readonly("l_wave_fd", &KernelResidualReport::l_wave_fd)
      .def_readonly("l_diagonal_fd", &KernelResidualReport::l_diagonal_fd)
      .def_readonly("flux_compat", &KernelResidualReport::flux_compat)
      .def_readonly("flux_compat_quadrature",
                    &KernelResidualReport::flux_compat_quadrature)
      .def_readonly("interface_relation", &KernelResidualReport::interface_relation);
  m.def(
      "kernel_residuals",
      [](const Scenario& sc, double s, int n_samples) {
        KernelSet kernels{sc.gain_c, sc.params.alpha(), sc.params.beta()};
        return kernel_residuals(kernels, s, n_samples);
      },
      py::arg("scenario"), py::arg("s"), py::arg("n_samples") = 1000);

  m.def("h1_norm_sq",
        [](const std::vector<double>& u, double s, int n_cells) {
          return h1_norm_sq(u, s, 1.0 / n_cells);
        },
        py::arg("u"), py::arg("s"), py::arg("n_cells"));
  m.def("neumann_lambda", &neumann_lambda, py::arg("stefan_number"));
  m.def("neumann_interface", &neumann_interface, py::arg("stefan_number"),
        py::arg("alpha"), py::arg("t"));

  m.def(
      "parse_scenario",
      [](const std::string& path) {
        const LoadedScenario loaded = parse_scenario(path);
        return py::make_tuple(loaded.scenario, loaded.feasibility);
      },
      py::arg("path"));
}
