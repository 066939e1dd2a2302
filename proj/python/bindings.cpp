#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lowsnr/analysis.hpp"
#include "lowsnr/channel.hpp"
#include "lowsnr/errors.hpp"
#include "lowsnr/simulate.hpp"
#include "lowsnr/solver.hpp"
#include "lowsnr/specfun.hpp"
#include "lowsnr/sweep.hpp"

namespace py = pybind11;
using namespace lowsnr;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Low-SNR capacity of the non-coherent Rayleigh fading channel";

  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<BracketError>(m, "BracketError", PyExc_RuntimeError);
  py::register_exception<BoundaryMaximumError>(m, "BoundaryMaximumError",
                                               PyExc_RuntimeError);

  py::enum_<BranchK>(m, "BranchK")
      .value("Principal", BranchK::Principal)
      .value("MinusOne", BranchK::MinusOne);

  py::class_<QuadResult>(m, "QuadResult")
      .def_readonly("value", &QuadResult::value)
      .def_readonly("abs_error_estimate", &QuadResult::abs_error_estimate)
      .def_readonly("evaluations", &QuadResult::evaluations)
      .def("__repr__", [](const QuadResult& q) {
        return "QuadResult(value=" + std::to_string(q.value) +
               ", abs_error_estimate=" + std::to_string(q.abs_error_estimate) +
               ", evaluations=" + std::to_string(q.evaluations) + ")";
      });

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("value", &SolveResult::value)
      .def_readonly("residual", &SolveResult::residual)
      .def_readonly("iterations", &SolveResult::iterations)
      .def_readonly("branch", &SolveResult::branch)
      .def_readonly("objective", &SolveResult::objective);

  py::class_<OnOffInput>(m, "OnOffInput")
      .def(py::init<double, double>(), py::arg("x1"), py::arg("p1"))
      .def_static(
          "for_snr",
          [](double x1, double a) { return OnOffInput::for_snr(x1, Snr(a)); },
          py::arg("x1"), py::arg("a"))
      .def_readonly("x1", &OnOffInput::x1)
      .def_readonly("p1", &OnOffInput::p1)
      .def_property_readonly("p0", &OnOffInput::p0)
      .def("average_power", &OnOffInput::average_power);

  py::class_<ChannelParams>(m, "ChannelParams")
      .def(py::init<double, double, double>(), py::arg("sigma_h_sq"),
           py::arg("sigma_w_sq"), py::arg("power"))
      .def_readonly("sigma_h_sq", &ChannelParams::sigma_h_sq)
      .def_readonly("sigma_w_sq", &ChannelParams::sigma_w_sq)
      .def_readonly("power", &ChannelParams::power)
      .def("snr", &ChannelParams::snr);

  py::class_<CapacityPoint> cap(m, "CapacityPoint");
  py::enum_<CapacityPoint::Method>(cap, "Method")
      .value("FixedPoint", CapacityPoint::Method::FixedPoint)
      .value("NumericMax", CapacityPoint::Method::NumericMax)
      .value("BoundUB", CapacityPoint::Method::BoundUB)
      .value("BoundLB", CapacityPoint::Method::BoundLB);
  cap.def_readonly("a", &CapacityPoint::a)
      .def_readonly("x1", &CapacityPoint::x1)
      .def_readonly("p1", &CapacityPoint::p1)
      .def_readonly("capacity", &CapacityPoint::capacity)
      .def_readonly("delta", &CapacityPoint::delta)
      .def_readonly("delta_over_a", &CapacityPoint::delta_over_a)
      .def_readonly("penalty", &CapacityPoint::penalty)
      .def_readonly("energy_per_nat", &CapacityPoint::energy_per_nat)
      .def_readonly("branch", &CapacityPoint::branch)
      .def_readonly("method", &CapacityPoint::method);

  py::class_<BoundsPoint>(m, "BoundsPoint")
      .def_readonly("a", &BoundsPoint::a)
      .def_readonly("x1_lower", &BoundsPoint::x1_lower)
      .def_readonly("x1_upper", &BoundsPoint::x1_upper)
      .def_readonly("c_upper", &BoundsPoint::c_upper)
      .def_readonly("c_lower", &BoundsPoint::c_lower);

  py::class_<LowSnrConstants>(m, "LowSnrConstants")
      .def_readonly("x0_sq", &LowSnrConstants::x0_sq)
      .def_readonly("a0", &LowSnrConstants::a0)
      .def_readonly("xi0", &LowSnrConstants::xi0)
      .def_property_readonly("x0", &LowSnrConstants::x0);

  // specfun
  m.def("lambert_w", &lambert_w, py::arg("branch"), py::arg("z"),
        "Real Lambert W on the requested branch");
  m.def("lambert_ladder_upper", &lambert_ladder_upper, py::arg("z"));
  m.def("gauss_2f1_1b", &gauss_2f1_1b, py::arg("b"), py::arg("z"),
        "2F1(1, b; b+1; z) for b > 0, z <= 0");

  // channel
  m.def("cond_density", &cond_density, py::arg("y"), py::arg("x"));
  m.def("output_density", &output_density, py::arg("y"), py::arg("input"));
  m.def("mi_quadrature", &mi_quadrature, py::arg("input"));
  m.def(
      "mi_closed",
      [](double x1, double a) { return mi_closed(x1, Snr(a)); },
      py::arg("x1"), py::arg("a"));
  m.def(
      "mi_series",
      [](double x1, double a) { return mi_series(x1, Snr(a)); },
      py::arg("x1"), py::arg("a"));
  m.def("mi_derivative_x1", &mi_derivative_x1, py::arg("input"));

  // solver
  m.def("constants", &constants, py::return_value_policy::reference,
        "Branch-junction constants (x0^2, a0, xi0)");
  m.def("phi", &phi, py::arg("x"));
  m.def("snr_of_x1", &snr_of_x1, py::arg("x1"), py::arg("branch"));
  m.def(
      "stationarity_residual",
      [](double x1, double a) { return stationarity_residual(x1, Snr(a)); },
      py::arg("x1"), py::arg("a"));
  m.def(
      "solve_x1",
      [](double a, double a_max) { return solve_x1(Snr(a), a_max); },
      py::arg("a"), py::arg("a_max") = 0.1);
  m.def(
      "maximize_mi",
      [](double a, bool use_closed_form) {
        return maximize_mi(Snr(a), use_closed_form);
      },
      py::arg("a"), py::arg("use_closed_form") = true);

  // analysis
  m.def(
      "capacity_at",
      [](double a, double x1) { return capacity_at(Snr(a), x1); },
      py::arg("a"), py::arg("x1"));
  m.def(
      "penalty_per_snr",
      [](double a, double x1) { return penalty_per_snr(Snr(a), x1); },
      py::arg("a"), py::arg("x1"));
  m.def(
      "capacity_low_snr",
      [](double a, double a_max) { return capacity_low_snr(Snr(a), a_max); },
      py::arg("a"), py::arg("a_max") = 0.1);
  m.def(
      "x1_upper_bound", [](double a) { return x1_upper_bound(Snr(a)); },
      py::arg("a"));
  m.def(
      "x1_lower_bound", [](double a) { return x1_lower_bound(Snr(a)); },
      py::arg("a"));
  m.def(
      "x1_lower_bound_one_step",
      [](double a) { return x1_lower_bound_one_step(Snr(a)); }, py::arg("a"));
  m.def(
      "capacity_bounds", [](double a) { return capacity_bounds(Snr(a)); },
      py::arg("a"));

  // simulate
  py::class_<SimConfig> sim(m, "SimConfig");
  py::enum_<SimConfig::SamplePath>(sim, "SamplePath")
      .value("DirectExponential", SimConfig::SamplePath::DirectExponential)
      .value("ComplexGaussian", SimConfig::SamplePath::ComplexGaussian);
  sim.def(py::init([](std::uint64_t seed, std::size_t n_samples,
                      const OnOffInput& input, SimConfig::SamplePath path) {
            SimConfig cfg;
            cfg.seed = seed;
            cfg.n_samples = n_samples;
            cfg.input = input;
            cfg.path = path;
            return cfg;
          }),
          py::arg("seed"), py::arg("n_samples"), py::arg("input"),
          py::arg("path") = SimConfig::SamplePath::DirectExponential)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("n_samples", &SimConfig::n_samples)
      .def_readwrite("input", &SimConfig::input)
      .def_readwrite("path", &SimConfig::path);

  py::class_<MiEstimate>(m, "MiEstimate")
      .def_readonly("estimate", &MiEstimate::estimate)
      .def_readonly("std_error", &MiEstimate::std_error)
      .def_readonly("n", &MiEstimate::n);

  m.def(
      "sample_outputs",
      [](const SimConfig& cfg, std::size_t count) {
        auto samples = sample_outputs(cfg, count);
        std::vector<std::pair<double, double>> out;
        out.reserve(samples.size());
        for (const auto& s : samples) out.emplace_back(s.x, s.y);
        return out;
      },
      py::arg("config"), py::arg("count"));
  m.def("estimate_mi", &estimate_mi, py::arg("config"));

  m.attr("__version__") = "1.0.0";
}
