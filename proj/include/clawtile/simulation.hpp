#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "clawtile/config.hpp"
#include "clawtile/frame.hpp"
#include "clawtile/perf.hpp"
#include "clawtile/riemann.hpp"
#include "clawtile/sweep.hpp"
#include "clawtile/timestep.hpp"

namespace clawtile {

/// Called after an accepted step lands on a requested frame time.
using FrameCallback = std::function<void(int index, double t, std::uint64_t step)>;

/// A configured solver instance: grid buffers, Riemann solver, limiter,
/// boundary conditions, tile plans and the adaptive step controller.
class Simulation {
 public:
  explicit Simulation(const RunConfig& cfg);
  Simulation(const RunConfig& cfg, const InitialCondition& initial);
  /// A user-registered point-wise solver; requires double precision and a
  /// solver state count matching the configured problem.
  Simulation(const RunConfig& cfg, FunctionSolver<double> solver, const InitialCondition& initial);
  ~Simulation();
  Simulation(Simulation&&) noexcept;
  Simulation& operator=(Simulation&&) noexcept;

  const RunConfig& config() const;
  const GridSpec& grid_spec() const;
  const RunState& run_state() const;
  RunState& run_state();

  /// Applies the boundary conditions to the current state.
  void fill_ghosts();

  /// One attempt of size dt from the current time: fill ghosts, sweep every
  /// axis, then accept (advance) or revert (state untouched).
  StepOutcome attempt_step(double dt);

  /// Advances to t_end with adaptive steps, emitting frames at the requested
  /// times (those in (t, t_end]).
  RunReport run_until(double t_end, std::span<const double> frame_times = {},
                      const FrameCallback& on_frame = {});

  /// Interior values as doubles: per state, x fastest.
  std::vector<double> interior_state() const;
  /// Replaces the interior and recomputes the initial speed estimate.
  void set_interior_state(std::span<const double> values);

  /// Every padded value in native precision, for bitwise comparisons.
  std::vector<std::byte> raw_state() const;

  Frame snapshot() const;

  void set_counting(bool enabled);
  /// Accumulated counters per swept axis (all attempts, accepted or not).
  std::span<const SweepCounters> counters() const;
  PerfReport perf_report() const;

 private:
  struct EngineBase;
  template <typename Real>
  struct Engine;
  std::unique_ptr<EngineBase> engine_;
};

}  // namespace clawtile
