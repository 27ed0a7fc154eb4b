// Python bindings: thin wrappers over the C++ library. States cross the
// boundary as 4x4 complex numpy arrays; bad input raises ValueError.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qmem/correlations.hpp"
#include "qmem/dynamics.hpp"
#include "qmem/selfcheck.hpp"
#include "qmem/sweep.hpp"
#include "qmem/uncertainty.hpp"

namespace py = pybind11;
using namespace qmem;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

TwoQubitState to_state(const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != 4 || a.shape(1) != 4) throw InvalidInput("expected a 4x4 density matrix");
  Mat4 m;
  auto v = a.unchecked<2>();
  for (py::ssize_t i = 0; i < 4; ++i)
    for (py::ssize_t j = 0; j < 4; ++j) m(i, j) = v(i, j);
  return TwoQubitState(m);
}

ComplexArray to_array(const TwoQubitState& s) {
  ComplexArray out({4, 4});
  auto v = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < 4; ++i)
    for (py::ssize_t j = 0; j < 4; ++j) v(i, j) = s(i, j);
  return out;
}

EnvironmentParams make_env(double lambda, double delta, double gamma) { return {gamma, lambda, delta}; }

py::dict record_dict(const SweepConfig& cfg, const TimeSeriesRecord& r) {
  py::dict d;
  d["gamma_t"] = r.gamma_t;
  d["delta_over_gamma"] = r.delta_over_gamma;
  d["lambda_over_gamma"] = r.lambda_over_gamma;
  d["r"] = r.r;
  d["theta"] = r.theta;
  for (Quantity q : cfg.quantities) d[py::str(std::string(quantity_name(q)))] = r.value(q);
  return d;
}

SweepConfig make_config(std::optional<std::string> preset, std::optional<double> lambda,
                        std::optional<std::vector<double>> delta, std::optional<double> r,
                        std::optional<double> theta, std::optional<double> t_max, std::optional<int> points,
                        std::optional<std::string> quantities, std::optional<std::string> engine) {
  SweepConfig cfg = preset ? figure_preset(*preset) : SweepConfig{};
  if (lambda) cfg.lambda_over_gamma = *lambda;
  if (delta) cfg.delta_list = *delta;
  if (r) cfg.r = *r;
  if (theta) cfg.theta = *theta;
  if (t_max) cfg.t_max = *t_max;
  if (points) cfg.n_points = *points;
  if (quantities) cfg.quantities = parse_quantity_list(*quantities);
  if (engine) cfg.engine = parse_engine(*engine);
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_qmem, m) {
  m.doc() = "Two-qubit quantum-memory dynamics in a detuned Lorentzian cavity";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidInput& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<DecayEnvelope>(m, "DecayEnvelope")
      .def_readonly("t", &DecayEnvelope::t)
      .def_readonly("g", &DecayEnvelope::g)
      .def_readonly("abs_g2", &DecayEnvelope::abs_g2)
      .def_readonly("decay_rate", &DecayEnvelope::decay_rate)
      .def_readonly("lamb_shift", &DecayEnvelope::lamb_shift)
      .def("__repr__", [](const DecayEnvelope& e) {
        std::ostringstream os;
        os << "DecayEnvelope(t=" << e.t << ", g=" << e.g << ", decay_rate=" << e.decay_rate << ")";
        return os.str();
      });

  m.def(
      "envelope", [](double lambda, double delta, double t, double gamma) {
        return envelope(make_env(lambda, delta, gamma), t);
      },
      py::arg("lambda_"), py::arg("delta"), py::arg("t"), py::arg("gamma") = 1.0,
      "Decay envelope G(t) with its rate and frequency shift.");

  m.def(
      "initial_state", [](double r, double theta) { return to_array(initial_state({r, theta})); }, py::arg("r"),
      py::arg("theta"), "r |psi(theta)><psi(theta)| + (1 - r) I/4 as a 4x4 array.");

  m.def(
      "evolved_state",
      [](double r, double theta, double lambda, double delta, double t, double gamma) {
        return to_array(analytic_x_state({r, theta}, envelope(make_env(lambda, delta, gamma), t)));
      },
      py::arg("r"), py::arg("theta"), py::arg("lambda_"), py::arg("delta"), py::arg("t"), py::arg("gamma") = 1.0,
      "State after the memory qubit has interacted with the cavity for time t.");

  m.def(
      "concurrence",
      [](const ComplexArray& rho) {
        const TwoQubitState s = to_state(rho);
        return is_x_state(s) ? concurrence_x_state(s) : concurrence_general(s);
      },
      py::arg("rho"), "Concurrence (closed form for X-states, spin-flip eigenvalues otherwise).");
  m.def(
      "discord",
      [](const ComplexArray& rho) {
        const TwoQubitState s = to_state(rho);
        return is_x_state(s) ? discord_x_state(s) : discord_oracle(s);
      },
      py::arg("rho"), "Discord with measurements on B (closed form for X-states, search otherwise).");
  m.def(
      "discord_oracle", [](const ComplexArray& rho) { return discord_oracle(to_state(rho)); }, py::arg("rho"));
  m.def(
      "mutual_information", [](const ComplexArray& rho) { return mutual_information(to_state(rho)); },
      py::arg("rho"));

  m.def(
      "uncertainty",
      [](const ComplexArray& rho) {
        const UncertaintyReport u = eub(to_state(rho));
        py::dict d;
        d["lhs"] = u.lhs;
        d["eub"] = u.eub;
        d["berta"] = u.berta;
        d["holevo_x"] = u.holevo_x;
        d["holevo_z"] = u.holevo_z;
        d["cond_entropy"] = u.cond_entropy;
        d["delta_term"] = u.delta_term;
        return d;
      },
      py::arg("rho"), "Entropic uncertainty: left-hand side and both lower bounds for sigma_x / sigma_z.");

  m.def(
      "sweep",
      [](std::optional<std::string> preset, std::optional<double> lambda, std::optional<std::vector<double>> delta,
         std::optional<double> r, std::optional<double> theta, std::optional<double> t_max,
         std::optional<int> points, std::optional<std::string> quantities, std::optional<std::string> engine,
         unsigned threads) {
        const SweepConfig cfg = make_config(preset, lambda, delta, r, theta, t_max, points, quantities, engine);
        std::vector<TimeSeriesRecord> rows;
        {
          py::gil_scoped_release release;
          rows = run_sweep(cfg, threads);
        }
        py::list out;
        for (const TimeSeriesRecord& rec : rows) out.append(record_dict(cfg, rec));
        return out;
      },
      py::arg("preset") = py::none(), py::arg("lambda_") = py::none(), py::arg("delta") = py::none(),
      py::arg("r") = py::none(), py::arg("theta") = py::none(), py::arg("t_max") = py::none(),
      py::arg("points") = py::none(), py::arg("quantities") = py::none(), py::arg("engine") = py::none(),
      py::arg("threads") = 1, "Rows of a (delta, t) sweep as dicts; `preset` starts from a figure preset.");

  m.def(
      "figure_csv",
      [](const std::string& name) {
        const SweepConfig cfg = figure_preset(name);
        std::vector<TimeSeriesRecord> rows;
        {
          py::gil_scoped_release release;
          rows = run_sweep(cfg, 1);
        }
        std::ostringstream os;
        write_csv(os, cfg, rows);
        return os.str();
      },
      py::arg("name"), "CSV text of a figure preset, byte-identical to the command-line output.");

  m.def("selfcheck", [] {
    std::vector<SuiteResult> results;
    {
      py::gil_scoped_release release;
      results = run_selfcheck();
    }
    py::list out;
    for (const SuiteResult& r : results) out.append(py::make_tuple(r.name, r.passed, r.detail));
    return out;
  });
}
