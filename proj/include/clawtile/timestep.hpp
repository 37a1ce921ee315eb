#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace clawtile {

/// Controller bookkeeping for an adaptive run.
struct RunState {
  double t = 0.0;
  double dt = 0.0;          // last attempted step size
  double s_prev = 0.0;      // max wave speed of the previous accepted step
  double cfl_target = 0.9;  // C in dt = C * h / s
  double cfl_max = 1.0;     // acceptance limit on the realized CFL number
  double dt_cap = std::numeric_limits<double>::infinity();
  std::uint64_t step_count = 0;
  std::uint64_t revert_count = 0;
};

/// dt = cfl_target * min_spacing / s_prev, capped by dt_cap and clipped so
/// that t + dt does not pass `next_output`. With s_prev == 0 the cap is used.
double estimate_dt(const RunState& state, double min_spacing,
                   double next_output = std::numeric_limits<double>::infinity());

/// nu = dt * s / min_spacing.
inline double realized_cfl(double dt, double s, double min_spacing) {
  return dt * s / min_spacing;
}

struct StepOutcome {
  bool accepted = false;
  double dt = 0.0;        // step size attempted
  double s_step = 0.0;    // max speed measured over all sweeps of the step
  double cfl = 0.0;       // realized CFL number
  double dt_retry = 0.0;  // suggested retry size when reverted
};

struct StepRecord {
  std::uint64_t step = 0;  // accepted-step counter at the time of the attempt
  double t = 0.0;          // time at the start of the attempt
  StepOutcome outcome;
};

struct RunReport {
  std::uint64_t steps = 0;
  std::uint64_t reverts = 0;
  int frames = 0;
  double cfl_min = 0.0;
  double cfl_max = 0.0;
  double cfl_mean = 0.0;
  std::vector<StepRecord> log;
};

}  // namespace clawtile
