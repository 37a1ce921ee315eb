#include "clawtile/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <variant>

#include "clawtile/boundary.hpp"
#include "clawtile/errors.hpp"
#include "clawtile/log.hpp"
#include "clawtile/problems.hpp"
#include "clawtile/tile_plan.hpp"

namespace clawtile {

struct Simulation::EngineBase {
  explicit EngineBase(const RunConfig& c) : cfg(c) {
    state.cfl_target = c.cfl_target;
    state.cfl_max = c.cfl_max;
    state.dt_cap = c.dt_cap;
  }
  virtual ~EngineBase() = default;

  virtual const GridSpec& spec() const = 0;
  virtual double initial_speed() const = 0;
  // Runs all sweeps of one step of size dt into scratch; returns the max
  // speed and leaves the result pending until commit().
  virtual double sweep_all(double dt) = 0;
  virtual void fill_ghosts() = 0;
  virtual void commit() = 0;
  virtual std::vector<double> interior() const = 0;
  virtual void set_interior(std::span<const double> v) = 0;
  virtual std::vector<std::byte> raw() const = 0;
  virtual Frame snapshot(double t, std::uint64_t step) const = 0;

  RunConfig cfg;
  RunState state;
  bool counting = false;
  std::vector<SweepCounters> counters;
};

template <typename Real>
struct Simulation::Engine final : Simulation::EngineBase {
  using Solvers = std::variant<AcousticsSolver<Real>, ShallowWaterSolver<Real>,
                               AdvectionSolver<Real>, FunctionSolver<Real>>;

  Engine(const RunConfig& c, Solvers s, const InitialCondition& initial)
      : EngineBase(c), solver(std::move(s)), limiter(c.limiter), current(c.grid) {
    const int want = std::visit([](const auto& sv) { return sv.num_states(); }, solver);
    if (want != c.grid.num_states)
      throw InvalidArgument("simulation: solver has " + std::to_string(want) +
                            " states, grid has " + std::to_string(c.grid.num_states));
    scratch[0] = StateGrid<Real>(c.grid);
    scratch[1] = StateGrid<Real>(c.grid);
    fill_initial(current, initial);
    axes = step_order(c.grid.ndim);
    counters.assign(axes.size(), SweepCounters{});
    if (!c.serial)
      for (int axis : axes)
        plans.push_back(plan_tiles(c.grid, axis, c.tiles ? *c.tiles : default_tile_shape(c.grid, axis)));
    state.s_prev = initial_speed();
  }

  const GridSpec& spec() const override { return current.spec(); }

  double initial_speed() const override {
    const int m = current.num_states();
    double s = 0.0;
    Real q[kMaxStates];
    for_each_interior(current.spec(), [&](int i, int j, int k) {
      for (int c = 0; c < m; ++c) q[c] = current.at(c, i, j, k);
      s = std::max(s, std::visit([&](const auto& sv) { return sv.max_speed_bound(q); }, solver));
    });
    return s;
  }

  double sweep_all(double dt) override {
    apply_boundary(current, cfg.boundary);
    StateGrid<Real>* in = &current;
    int target = 0;
    double s = 0.0;
    for (std::size_t n = 0; n < axes.size(); ++n) {
      const int axis = axes[n];
      StateGrid<Real>& out = scratch[target];
      if (n > 0) apply_boundary(*in, cfg.boundary);
      const SweepResult r = std::visit(
          [&](const auto& sv) {
            return cfg.serial ? sweep_axis(*in, out, axis, dt, sv, limiter, counting)
                              : sweep_axis_tiled(*in, out, axis, dt, sv, limiter, plans[n],
                                                 cfg.workers, counting);
          },
          solver);
      counters[n] += r.counters;
      s = std::max(s, r.max_abs_speed);
      in = &out;
      target ^= 1;
    }
    result = target ^ 1;
    return s;
  }

  void fill_ghosts() override { apply_boundary(current, cfg.boundary); }

  void commit() override { std::swap(current, scratch[result]); }

  std::vector<double> interior() const override {
    const GridSpec& g = current.spec();
    std::vector<double> out;
    out.reserve(g.interior_size() * static_cast<std::size_t>(g.num_states));
    for (int s = 0; s < g.num_states; ++s)
      for_each_interior(g, [&](int i, int j, int k) { out.push_back(current.at(s, i, j, k)); });
    return out;
  }

  void set_interior(std::span<const double> v) override {
    const GridSpec& g = current.spec();
    if (v.size() != g.interior_size() * static_cast<std::size_t>(g.num_states))
      throw InvalidArgument("set_interior_state: expected " +
                            std::to_string(g.interior_size() * g.num_states) + " values, got " +
                            std::to_string(v.size()));
    for (double x : v)
      if (!std::isfinite(x)) throw InvalidArgument("set_interior_state: non-finite value");
    std::size_t idx = 0;
    for (int s = 0; s < g.num_states; ++s)
      for_each_interior(g, [&](int i, int j, int k) { current.at(s, i, j, k) = static_cast<Real>(v[idx++]); });
    state.s_prev = initial_speed();
  }

  std::vector<std::byte> raw() const override {
    std::vector<std::byte> out;
    for (int s = 0; s < current.num_states(); ++s) {
      auto bytes = std::as_bytes(current.state(s));
      out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
  }

  Frame snapshot(double t, std::uint64_t step) const override {
    return make_frame(current, t, step);
  }

  Solvers solver;
  Limiter limiter;
  StateGrid<Real> current;
  StateGrid<Real> scratch[2];
  int result = 0;
  std::vector<int> axes;
  std::vector<TilePlan> plans;
};

namespace {

template <typename Real>
auto make_solver(const RunConfig& c)
    -> std::variant<AcousticsSolver<Real>, ShallowWaterSolver<Real>, AdvectionSolver<Real>,
                    FunctionSolver<Real>> {
  switch (c.problem) {
    case Problem::acoustics2d:
    case Problem::acoustics3d:
      return AcousticsSolver<Real>(c.grid.ndim, c.acoustics);
    case Problem::shallow_water2d:
      return ShallowWaterSolver<Real>(c.grid.ndim, c.shallow_water);
    case Problem::advection1d:
      return AdvectionSolver<Real>(c.advection_velocity);
  }
  throw InvalidArgument("simulation: unknown problem");
}

}  // namespace

Simulation::Simulation(const RunConfig& cfg) : Simulation(cfg, make_initial_condition(cfg)) {}

Simulation::Simulation(const RunConfig& cfg, const InitialCondition& initial) {
  cfg.validate();
  if (cfg.precision == Precision::single)
    engine_ = std::make_unique<Engine<float>>(cfg, make_solver<float>(cfg), initial);
  else
    engine_ = std::make_unique<Engine<double>>(cfg, make_solver<double>(cfg), initial);
}

Simulation::Simulation(const RunConfig& cfg, FunctionSolver<double> solver,
                       const InitialCondition& initial) {
  cfg.validate();
  if (cfg.precision != Precision::dbl)
    throw InvalidArgument("simulation: custom solvers run in double precision only");
  engine_ = std::make_unique<Engine<double>>(cfg, std::move(solver), initial);
}

Simulation::~Simulation() = default;
Simulation::Simulation(Simulation&&) noexcept = default;
Simulation& Simulation::operator=(Simulation&&) noexcept = default;

const RunConfig& Simulation::config() const { return engine_->cfg; }
const GridSpec& Simulation::grid_spec() const { return engine_->spec(); }
const RunState& Simulation::run_state() const { return engine_->state; }
RunState& Simulation::run_state() { return engine_->state; }

void Simulation::fill_ghosts() { engine_->fill_ghosts(); }

StepOutcome Simulation::attempt_step(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("attempt_step: dt must be positive");
  EngineBase& e = *engine_;
  const double h = e.spec().min_spacing();
  StepOutcome out;
  out.dt = dt;
  e.state.dt = dt;
  try {
    out.s_step = e.sweep_all(dt);
  } catch (const NumericalBlowup& err) {
    throw NumericalBlowup(std::string(err.what()) + " at step " +
                              std::to_string(e.state.step_count + 1),
                          err.cell_offset(), static_cast<std::int64_t>(e.state.step_count + 1));
  }
  out.cfl = realized_cfl(dt, out.s_step, h);
  if (out.cfl <= e.state.cfl_max) {
    out.accepted = true;
    e.commit();
    e.state.t += dt;
    e.state.s_prev = out.s_step;
    ++e.state.step_count;
  } else {
    out.dt_retry = e.state.cfl_target * h / out.s_step;
    ++e.state.revert_count;
    log::debug("step {} reverted: cfl {} > {}, retry dt {}", e.state.step_count + 1, out.cfl,
               e.state.cfl_max, out.dt_retry);
  }
  return out;
}

RunReport Simulation::run_until(double t_end, std::span<const double> frame_times,
                                const FrameCallback& on_frame) {
  EngineBase& e = *engine_;
  RunReport report;
  if (!(t_end > e.state.t)) return report;

  struct Stop {
    double t;
    bool frame;
  };
  std::vector<Stop> stops;
  for (double t : frame_times)
    if (t > e.state.t && t <= t_end) stops.push_back({t, true});
  std::sort(stops.begin(), stops.end(), [](const Stop& a, const Stop& b) { return a.t < b.t; });
  if (stops.empty() || stops.back().t < t_end) stops.push_back({t_end, false});

  const double h = e.spec().min_spacing();
  std::size_t next = 0;
  double pending_retry = 0.0;
  double last_revert_cfl = -1.0;
  double cfl_sum = 0.0;
  int frame_index = 0;

  while (next < stops.size()) {
    const double target = stops[next].t;
    const double t0 = e.state.t;
    double dt = pending_retry > 0.0 ? pending_retry : estimate_dt(e.state, h, target);
    const bool landing = t0 + dt >= target;
    if (landing) dt = target - t0;

    StepOutcome out = attempt_step(dt);
    report.log.push_back({e.state.step_count - (out.accepted ? 1 : 0), t0, out});
    if (out.accepted) {
      if (landing) e.state.t = target;
      pending_retry = 0.0;
      last_revert_cfl = -1.0;
      ++report.steps;
      cfl_sum += out.cfl;
      report.cfl_min = report.steps == 1 ? out.cfl : std::min(report.cfl_min, out.cfl);
      report.cfl_max = std::max(report.cfl_max, out.cfl);
      if (landing) {
        if (stops[next].frame) {
          ++frame_index;
          ++report.frames;
          if (on_frame) on_frame(frame_index, e.state.t, e.state.step_count);
        }
        ++next;
      }
    } else {
      ++report.reverts;
      if (last_revert_cfl >= 0.0 && out.cfl >= last_revert_cfl)
        throw StepControlError("time step control: repeated reverts without CFL improvement at t=" +
                               std::to_string(t0) + " (cfl " + std::to_string(out.cfl) + ")");
      last_revert_cfl = out.cfl;
      pending_retry = out.dt_retry;
    }
  }
  if (report.steps > 0) report.cfl_mean = cfl_sum / static_cast<double>(report.steps);
  return report;
}

std::vector<double> Simulation::interior_state() const { return engine_->interior(); }

void Simulation::set_interior_state(std::span<const double> values) {
  engine_->set_interior(values);
}

std::vector<std::byte> Simulation::raw_state() const { return engine_->raw(); }

Frame Simulation::snapshot() const {
  return engine_->snapshot(engine_->state.t, engine_->state.step_count);
}

void Simulation::set_counting(bool enabled) { engine_->counting = enabled; }

std::span<const SweepCounters> Simulation::counters() const { return engine_->counters; }

PerfReport Simulation::perf_report() const {
  bool any = false;
  for (const auto& c : engine_->counters) any = any || c.bytes() > 0;
  if (!engine_->counting && !any) return PerfReport{};
  return build_report(engine_->counters, engine_->cfg.machine);
}

}  // namespace clawtile
