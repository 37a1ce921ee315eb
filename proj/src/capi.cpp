#include "clawtile/capi.h"

#include <atomic>
#include <memory>
#include <string>

#include "clawtile/config.hpp"
#include "clawtile/errors.hpp"
#include "clawtile/simulation.hpp"

struct clawtile_session {
  std::unique_ptr<clawtile::Simulation> sim;
  std::atomic<bool> busy{false};
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

std::string with_step(const char* what, const clawtile::Simulation& sim) {
  const auto& rs = sim.run_state();
  return std::string(what) + " [after step " + std::to_string(rs.step_count) +
         ", t = " + std::to_string(rs.t) + ", dt = " + std::to_string(rs.dt) + "]";
}

// Runs fn under the session's single-owner guard and maps exceptions to codes.
template <typename Fn>
int guarded(clawtile_session* s, Fn&& fn) {
  if (!s) return fail(CLAWTILE_E_ARGUMENT, "null session");
  bool expected = false;
  if (!s->busy.compare_exchange_strong(expected, true))
    return fail(CLAWTILE_E_BUSY, "session is in use by another call");
  struct Release {
    clawtile_session* s;
    ~Release() { s->busy.store(false); }
  } release{s};
  if (!s->sim) return fail(CLAWTILE_E_CLOSED, "session is closed");
  try {
    fn(*s->sim);
    g_last_error.clear();
    return CLAWTILE_OK;
  } catch (const clawtile::ConfigError& e) {
    return fail(CLAWTILE_E_CONFIG, e.what());
  } catch (const clawtile::NumericalBlowup& e) {
    return fail(CLAWTILE_E_NUMERIC, with_step(e.what(), *s->sim));
  } catch (const clawtile::StepControlError& e) {
    return fail(CLAWTILE_E_NUMERIC, with_step(e.what(), *s->sim));
  } catch (const clawtile::DryStateError& e) {
    return fail(CLAWTILE_E_NUMERIC, with_step(e.what(), *s->sim));
  } catch (const clawtile::InvalidArgument& e) {
    return fail(CLAWTILE_E_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(CLAWTILE_E_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

int clawtile_session_create(const char* config_text, clawtile_session** out) {
  if (!out) return fail(CLAWTILE_E_ARGUMENT, "null output pointer");
  *out = nullptr;
  if (!config_text) return fail(CLAWTILE_E_ARGUMENT, "null configuration");
  try {
    auto s = std::make_unique<clawtile_session>();
    s->sim = std::make_unique<clawtile::Simulation>(clawtile::load_config_string(config_text));
    *out = s.release();
    g_last_error.clear();
    return CLAWTILE_OK;
  } catch (const clawtile::ConfigError& e) {
    return fail(CLAWTILE_E_CONFIG, e.what());
  } catch (const clawtile::InvalidArgument& e) {
    return fail(CLAWTILE_E_CONFIG, e.what());
  } catch (const std::exception& e) {
    return fail(CLAWTILE_E_INTERNAL, e.what());
  }
}

void clawtile_session_destroy(clawtile_session* s) { delete s; }

int clawtile_session_evolve(clawtile_session* s, double t_target, clawtile_step_report* report) {
  return guarded(s, [&](clawtile::Simulation& sim) {
    if (!(t_target >= sim.run_state().t))
      throw clawtile::InvalidArgument("evolve: target time " + std::to_string(t_target) +
                                      " is before the current time");
    const auto r = sim.run_until(t_target);
    if (report) {
      report->steps = r.steps;
      report->reverts = r.reverts;
      report->time = sim.run_state().t;
      report->cfl_max = r.cfl_max;
    }
  });
}

int clawtile_session_state_size(clawtile_session* s, size_t* n) {
  return guarded(s, [&](clawtile::Simulation& sim) {
    if (!n) throw clawtile::InvalidArgument("null size pointer");
    const auto& g = sim.grid_spec();
    *n = g.interior_size() * static_cast<size_t>(g.num_states);
  });
}

int clawtile_session_copy_state(clawtile_session* s, double* values, size_t n, double* time) {
  return guarded(s, [&](clawtile::Simulation& sim) {
    const auto v = sim.interior_state();
    if (!values || n != v.size())
      throw clawtile::InvalidArgument("copy_state: buffer must hold exactly " +
                                      std::to_string(v.size()) + " values");
    std::copy(v.begin(), v.end(), values);
    if (time) *time = sim.run_state().t;
  });
}

int clawtile_session_set_state(clawtile_session* s, const double* values, size_t n) {
  return guarded(s, [&](clawtile::Simulation& sim) {
    if (!values) throw clawtile::InvalidArgument("set_state: null buffer");
    sim.set_interior_state(std::span<const double>(values, n));
  });
}

int clawtile_session_shape(clawtile_session* s, int* ndim, int cells[3], int* num_states) {
  return guarded(s, [&](clawtile::Simulation& sim) {
    const auto& g = sim.grid_spec();
    if (ndim) *ndim = g.ndim;
    if (cells)
      for (int a = 0; a < 3; ++a) cells[a] = g.cells[a];
    if (num_states) *num_states = g.num_states;
  });
}

int clawtile_session_bounds(clawtile_session* s, double lower[3], double upper[3]) {
  return guarded(s, [&](clawtile::Simulation& sim) {
    if (!lower || !upper) throw clawtile::InvalidArgument("bounds: null output");
    const auto& g = sim.grid_spec();
    for (int a = 0; a < 3; ++a) {
      lower[a] = g.lower[a];
      upper[a] = g.upper[a];
    }
  });
}

int clawtile_session_close(clawtile_session* s) {
  if (!s) return fail(CLAWTILE_E_ARGUMENT, "null session");
  bool expected = false;
  if (!s->busy.compare_exchange_strong(expected, true))
    return fail(CLAWTILE_E_BUSY, "session is in use by another call");
  s->sim.reset();
  s->busy.store(false);
  return CLAWTILE_OK;
}

const char* clawtile_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
