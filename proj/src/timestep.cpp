#include "clawtile/timestep.hpp"

#include <algorithm>
#include <cmath>

#include "clawtile/errors.hpp"
#include "clawtile/log.hpp"

namespace clawtile {

double estimate_dt(const RunState& state, double min_spacing, double next_output) {
  if (!(min_spacing > 0.0)) throw InvalidArgument("estimate_dt: spacing must be positive");
  double dt;
  if (state.s_prev > 0.0) {
    dt = std::min(state.dt_cap, state.cfl_target * min_spacing / state.s_prev);
  } else {
    dt = state.dt_cap;
    log::info("previous max wave speed is zero; using dt_cap = {}", dt);
  }
  if (next_output > state.t && state.t + dt >= next_output) dt = next_output - state.t;
  if (!std::isfinite(dt) || !(dt > 0.0))
    throw StepControlError("estimate_dt: no finite positive step (set numerics.dt_cap)");
  return dt;
}

}  // namespace clawtile
