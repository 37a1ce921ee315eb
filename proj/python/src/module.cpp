#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>

#include <string>
#include <vector>

#include "clawtile/capi.h"

namespace py = pybind11;

namespace {

py::object g_config_error, g_numerical_error, g_busy_error, g_closed_error;

[[noreturn]] void raise(int code) {
  const std::string msg = clawtile_last_error();
  switch (code) {
    case CLAWTILE_E_CONFIG:
      PyErr_SetString(g_config_error.ptr(), msg.c_str());
      break;
    case CLAWTILE_E_NUMERIC:
      PyErr_SetString(g_numerical_error.ptr(), msg.c_str());
      break;
    case CLAWTILE_E_BUSY:
      PyErr_SetString(g_busy_error.ptr(), msg.c_str());
      break;
    case CLAWTILE_E_CLOSED:
      PyErr_SetString(g_closed_error.ptr(), msg.c_str());
      break;
    case CLAWTILE_E_ARGUMENT:
      PyErr_SetString(PyExc_ValueError, msg.c_str());
      break;
    default:
      PyErr_SetString(PyExc_RuntimeError, msg.c_str());
  }
  throw py::error_already_set();
}

void check(int code) {
  if (code != CLAWTILE_OK) raise(code);
}

// Owns one engine session. Calls release the GIL; the engine rejects
// overlapping calls on the same session.
class Engine {
 public:
  explicit Engine(const std::string& config_text) {
    check(clawtile_session_create(config_text.c_str(), &s_));
  }
  ~Engine() { clawtile_session_destroy(s_); }
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  py::tuple shape() {
    int ndim = 0, cells[3] = {}, m = 0;
    check(clawtile_session_shape(s_, &ndim, cells, &m));
    py::list c;
    for (int a = 0; a < ndim; ++a) c.append(cells[a]);
    return py::make_tuple(ndim, py::tuple(c), m);
  }

  py::tuple bounds() {
    int ndim = 0, cells[3] = {}, m = 0;
    check(clawtile_session_shape(s_, &ndim, cells, &m));
    double lo[3], hi[3];
    check(clawtile_session_bounds(s_, lo, hi));
    py::list l, h;
    for (int a = 0; a < ndim; ++a) {
      l.append(lo[a]);
      h.append(hi[a]);
    }
    return py::make_tuple(py::tuple(l), py::tuple(h));
  }

  py::dict evolve(double t_target) {
    clawtile_step_report rep{};
    int rc;
    {
      py::gil_scoped_release nogil;
      rc = clawtile_session_evolve(s_, t_target, &rep);
    }
    check(rc);
    py::dict d;
    d["steps"] = rep.steps;
    d["reverts"] = rep.reverts;
    d["time"] = rep.time;
    d["cfl_max"] = rep.cfl_max;
    return d;
  }

  // Flat copy of the interior, per state with x fastest, plus the time.
  py::tuple state() {
    std::size_t n = 0;
    check(clawtile_session_state_size(s_, &n));
    py::array_t<double> out(static_cast<py::ssize_t>(n));
    double t = 0.0;
    check(clawtile_session_copy_state(s_, out.mutable_data(), n, &t));
    return py::make_tuple(out, t);
  }

  void set_state(py::array_t<double, py::array::c_style | py::array::forcecast> values) {
    check(clawtile_session_set_state(s_, values.data(), static_cast<std::size_t>(values.size())));
  }

  void close() { check(clawtile_session_close(s_)); }

 private:
  clawtile_session* s_ = nullptr;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Low-level session interface of the clawtile engine.";

  py::object base = py::module_::import("builtins").attr("RuntimeError");
  py::object value = py::module_::import("builtins").attr("ValueError");
  g_config_error = py::reinterpret_borrow<py::object>(
      PyErr_NewException("clawtile._core.ConfigError", value.ptr(), nullptr));
  g_numerical_error = py::reinterpret_borrow<py::object>(
      PyErr_NewException("clawtile._core.NumericalError", base.ptr(), nullptr));
  g_busy_error = py::reinterpret_borrow<py::object>(
      PyErr_NewException("clawtile._core.SessionBusy", base.ptr(), nullptr));
  g_closed_error = py::reinterpret_borrow<py::object>(
      PyErr_NewException("clawtile._core.SessionClosed", base.ptr(), nullptr));
  m.attr("ConfigError") = g_config_error;
  m.attr("NumericalError") = g_numerical_error;
  m.attr("SessionBusy") = g_busy_error;
  m.attr("SessionClosed") = g_closed_error;

  py::class_<Engine>(m, "Engine")
      .def(py::init<const std::string&>(), py::arg("config_text"))
      .def("shape", &Engine::shape, "(ndim, cells, num_states)")
      .def("bounds", &Engine::bounds, "(lower, upper) per active axis")
      .def("evolve", &Engine::evolve, py::arg("t_target"))
      .def("state", &Engine::state)
      .def("set_state", &Engine::set_state, py::arg("values"))
      .def("close", &Engine::close);
}
