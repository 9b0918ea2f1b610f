#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wgswitch/adiabatic.hpp"
#include "wgswitch/analytic.hpp"
#include "wgswitch/errors.hpp"
#include "wgswitch/model.hpp"
#include "wgswitch/numkernel.hpp"
#include "wgswitch/propagate.hpp"
#include "wgswitch/splitter.hpp"

namespace py = pybind11;
using namespace wgswitch;

namespace {

using Rows = std::vector<std::vector<Complex>>;

Rows rows(const Propagator2& u) { return {{u(0, 0), u(0, 1)}, {u(1, 0), u(1, 1)}}; }

}  // namespace

PYBIND11_MODULE(_wgswitch, m) {
  m.doc() = "Two- and three-waveguide coupler simulations";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());

  py::enum_<ProfileKind>(m, "ProfileKind").value("Sech", ProfileKind::Sech).value("Gaussian", ProfileKind::Gaussian);
  py::enum_<MismatchKind>(m, "MismatchKind")
      .value("StepFlip", MismatchKind::StepFlip)
      .value("Constant", MismatchKind::Constant);
  py::enum_<DiagonalConvention>(m, "DiagonalConvention")
      .value("FullDelta", DiagonalConvention::FullDelta)
      .value("HalfDelta", DiagonalConvention::HalfDelta)
      .value("SecondOnly", DiagonalConvention::SecondOnly);
  py::enum_<Frame>(m, "Frame").value("Diagonal", Frame::Diagonal).value("Interaction", Frame::Interaction);

  py::class_<CouplingProfile>(m, "CouplingProfile")
      .def(py::init([](ProfileKind kind, double omega0, double width) { return CouplingProfile{kind, omega0, width}; }),
           py::arg("kind") = ProfileKind::Sech, py::arg("omega0") = 0.0, py::arg("width") = 1.0)
      .def_readwrite("kind", &CouplingProfile::kind)
      .def_readwrite("omega0", &CouplingProfile::omega0)
      .def_readwrite("width", &CouplingProfile::width)
      .def("value", &CouplingProfile::value);

  py::class_<MismatchProfile>(m, "MismatchProfile")
      .def(py::init([](MismatchKind kind, double delta0) { return MismatchProfile{kind, delta0}; }),
           py::arg("kind") = MismatchKind::StepFlip, py::arg("delta0") = 0.0)
      .def_readwrite("kind", &MismatchProfile::kind)
      .def_readwrite("delta0", &MismatchProfile::delta0)
      .def("value", &MismatchProfile::value);

  py::class_<TwoGuideModel>(m, "TwoGuideModel")
      .def(py::init([](double omega0, double delta0, double z_min, double z_max, DiagonalConvention conv,
                       ProfileKind profile) {
             TwoGuideModel t;
             t.coupling = CouplingProfile{profile, omega0, 1.0};
             t.mismatch = MismatchProfile{MismatchKind::StepFlip, delta0};
             t.z_min = z_min;
             t.z_max = z_max;
             t.convention = conv;
             t.validate();
             return t;
           }),
           py::arg("omega0"), py::arg("delta0"), py::arg("z_min") = -12.0, py::arg("z_max") = 12.0,
           py::arg("convention") = DiagonalConvention::FullDelta, py::arg("profile") = ProfileKind::Sech)
      .def_readwrite("coupling", &TwoGuideModel::coupling)
      .def_readwrite("mismatch", &TwoGuideModel::mismatch)
      .def_readwrite("z_min", &TwoGuideModel::z_min)
      .def_readwrite("z_max", &TwoGuideModel::z_max)
      .def_readwrite("convention", &TwoGuideModel::convention);

  py::class_<ThreeGuideModel>(m, "ThreeGuideModel")
      .def(py::init([](double omega0, double delta0, double z_min, double z_max, ProfileKind profile) {
             ThreeGuideModel t;
             t.coupling = CouplingProfile{profile, omega0, 1.0};
             t.mismatch = MismatchProfile{MismatchKind::StepFlip, delta0};
             t.z_min = z_min;
             t.z_max = z_max;
             t.validate();
             return t;
           }),
           py::arg("omega0"), py::arg("delta0"), py::arg("z_min") = -12.0, py::arg("z_max") = 12.0,
           py::arg("profile") = ProfileKind::Sech)
      .def_readwrite("coupling", &ThreeGuideModel::coupling)
      .def_readwrite("mismatch", &ThreeGuideModel::mismatch)
      .def_readwrite("z_min", &ThreeGuideModel::z_min)
      .def_readwrite("z_max", &ThreeGuideModel::z_max);

  py::class_<AmplitudeState>(m, "AmplitudeState")
      .def(py::init([](std::vector<Complex> amplitudes, double z) { return AmplitudeState{std::move(amplitudes), z}; }),
           py::arg("amplitudes"), py::arg("z"))
      .def_readonly("amplitudes", &AmplitudeState::amplitudes)
      .def_readonly("z", &AmplitudeState::z)
      .def("norm", &AmplitudeState::norm)
      .def("intensity", &AmplitudeState::intensity);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("samples", &Trajectory::samples)
      .def_readonly("steps_accepted", &Trajectory::steps_accepted)
      .def_readonly("steps_rejected", &Trajectory::steps_rejected)
      .def("final_state", &Trajectory::final_state)
      .def("max_norm_drift", &Trajectory::max_norm_drift);

  // numkernel
  m.def("log_gamma", &numkernel::complex_log_gamma, py::arg("z"));
  m.def("gamma", &numkernel::complex_gamma, py::arg("z"));
  m.def("hyp2f1", &numkernel::hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t"));

  // model
  m.def(
      "pulse_area", [](const CouplingProfile& c, double z_a, double z_b) { return pulse_area(c, z_a, z_b); },
      py::arg("coupling"),
        py::arg("z_a"), py::arg("z_b"));

  // propagate
  m.def("evolve_two", &evolve_two, py::arg("model"), py::arg("initial"), py::arg("tol") = kDefaultTol,
        py::arg("n_samples") = kDefaultSamples, py::arg("frame") = Frame::Diagonal);
  m.def("evolve_three", &evolve_three, py::arg("model"), py::arg("initial"), py::arg("tol") = kDefaultTol,
        py::arg("n_samples") = kDefaultSamples);
  m.def("final_transfer", &final_transfer, py::arg("model"), py::arg("tol") = kDefaultTol,
        py::arg("frame") = Frame::Diagonal);
  m.def(
      "propagator_numeric",
      [](const TwoGuideModel& t, double z_a, double z_b, double tol) {
        return rows(propagator_numeric(t, z_a, z_b, tol));
      },
      py::arg("model"), py::arg("z_a"), py::arg("z_b"), py::arg("tol") = kDefaultTol);

  // analytic
  m.def(
      "half_propagator_entries",
      [](double alpha, double delta_l) {
        const HalfPropagatorEntries e = half_propagator_entries(StepSechParams::make(alpha, delta_l));
        return py::dict(py::arg("a") = e.a, py::arg("b") = e.b, py::arg("xi") = e.xi, py::arg("eta") = e.eta);
      },
      py::arg("alpha"), py::arg("delta_l"));
  m.def(
      "half_propagator", [](double a, double d) { return rows(half_propagator(StepSechParams::make(a, d))); },
      py::arg("alpha"), py::arg("delta_l"));
  m.def(
      "second_half_propagator",
      [](double a, double d) { return rows(second_half_propagator(StepSechParams::make(a, d))); }, py::arg("alpha"),
      py::arg("delta_l"));
  m.def(
      "full_propagator", [](double a, double d) { return rows(full_propagator(StepSechParams::make(a, d))); },
      py::arg("alpha"), py::arg("delta_l"));
  m.def(
      "intensity_closed_form", [](double a, double d) { return intensity_closed_form(StepSechParams::make(a, d)); },
      py::arg("alpha"), py::arg("delta_l"));
  m.def(
      "intensity_asymptotic",
      [](double a, double d) {
        const AsymptoticEstimate e = intensity_asymptotic(StepSechParams::make(a, d));
        return py::make_tuple(e.value, e.in_regime);
      },
      py::arg("alpha"), py::arg("delta_l"));
  m.def("phase_phi", py::overload_cast<double, double>(&phase_phi), py::arg("alpha"), py::arg("delta_l"));

  // adiabatic
  m.def("mixing_angle", &mixing_angle, py::arg("omega"), py::arg("delta"));
  m.def(
      "adiabaticity_margin",
      [](const TwoGuideModel& t, std::size_t n) {
        const AdiabaticityMargin r = adiabaticity_margin(t, n);
        return py::dict(py::arg("value") = r.value, py::arg("z_at_max") = r.z_at_max, py::arg("skipped") = r.skipped);
      },
      py::arg("model"), py::arg("n_samples") = 4001);
  m.def(
      "adiabatic_propagator", [](const TwoGuideModel& t) { return rows(adiabatic_propagator(t)); }, py::arg("model"));
  m.def("adiabatic_final_intensity", &adiabatic_final_intensity, py::arg("omega0"), py::arg("delta0"));

  // splitter
  m.def(
      "to_bright_dark",
      [](const AmplitudeState& s) {
        const BrightDarkState b = to_bright_dark(s);
        return std::vector<Complex>{b.bright, b.middle, b.dark};
      },
      py::arg("state"));
  m.def("reduced_two_level", &reduced_two_level, py::arg("model"));
  m.def("z_reversed", &z_reversed, py::arg("model"));
  m.def(
      "run_splitter",
      [](const ThreeGuideModel& t, double tol, std::size_t n) {
        SplitterResult r = run_splitter(t, tol, n);
        return py::make_tuple(std::move(r.trajectory), r.i1, r.i2, r.i3);
      },
      py::arg("model"), py::arg("tol") = kDefaultTol, py::arg("n_samples") = kDefaultSamples);
}
