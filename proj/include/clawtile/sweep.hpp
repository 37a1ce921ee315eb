#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <string>
#include <vector>

#include "clawtile/grid.hpp"
#include "clawtile/limiter.hpp"
#include "clawtile/riemann.hpp"
#include "clawtile/tile_plan.hpp"

namespace clawtile {

/// Operation and modeled-traffic tallies of one or more sweeps. `special`
/// counts are subsets of the matching `flops`.
struct SweepCounters {
  std::uint64_t riemann_flops = 0;
  std::uint64_t riemann_special = 0;
  std::uint64_t correction_flops = 0;  // fluctuations, limiter, correction fluxes
  std::uint64_t correction_special = 0;
  std::uint64_t update_flops = 0;
  std::uint64_t bytes_read = 0;
  std::uint64_t bytes_written = 0;
  std::uint64_t riemann_solves = 0;

  std::uint64_t flops() const { return riemann_flops + correction_flops + update_flops; }
  std::uint64_t special() const { return riemann_special + correction_special; }
  std::uint64_t bytes() const { return bytes_read + bytes_written; }

  SweepCounters& operator+=(const SweepCounters& o) {
    riemann_flops += o.riemann_flops;
    riemann_special += o.riemann_special;
    correction_flops += o.correction_flops;
    correction_special += o.correction_special;
    update_flops += o.update_flops;
    bytes_read += o.bytes_read;
    bytes_written += o.bytes_written;
    riemann_solves += o.riemann_solves;
    return *this;
  }
  bool operator==(const SweepCounters&) const = default;
};

struct SweepResult {
  double max_abs_speed = 0.0;
  SweepCounters counters;
};

namespace detail {

struct BlockResult {
  double max_abs_speed = 0.0;
  SweepCounters counters;
  std::int64_t first_bad = -1;  // padded offset of the first non-finite cell
  std::exception_ptr error;
};

// Computes the two update terms of interface `idx` in `fans`:
// left = A-dQ + F~ (for the cell on its left), right = A+dQ - F~.
template <typename Real>
inline void interface_terms(const std::vector<WaveFan<Real>>& fans, std::size_t idx, Real lambda,
                            const Limiter& limiter, int m, Real* left, Real* right) {
  const WaveFan<Real>& fan = fans[idx];
  Real amdq[kMaxStates] = {};
  Real apdq[kMaxStates] = {};
  Real corr[kMaxStates] = {};
  Real limited[kMaxStates];
  for (int p = 0; p < fan.num_waves; ++p) {
    const Real s = fan.speeds[p];
    if (s == Real(0)) continue;
    const auto& w = fan.waves[p];
    if (s < Real(0)) {
      for (int c = 0; c < m; ++c) amdq[c] += s * w[c];
    } else {
      for (int c = 0; c < m; ++c) apdq[c] += s * w[c];
    }
    const auto& upwind = s > Real(0) ? fans[idx - 1].waves[p] : fans[idx + 1].waves[p];
    limit_wave<Real>(std::span<const Real>(w.data(), m), std::span<const Real>(upwind.data(), m),
                     limiter, std::span<Real>(limited, m));
    const Real abs_s = std::abs(s);
    const Real coef = Real(0.5) * abs_s * (Real(1) - lambda * abs_s);
    for (int c = 0; c < m; ++c) corr[c] += coef * limited[c];
  }
  for (int c = 0; c < m; ++c) {
    left[c] = amdq[c] + corr[c];
    right[c] = apdq[c] - corr[c];
  }
}

// Updates the owned box [lo, hi) along `axis`, one pencil at a time. Each
// pencil solves its interfaces once into block-local scratch, then applies the
// fused single-pass update: the right-cell term of an interface is carried to
// the next interface, which adds its own left-cell term and writes one cell.
template <typename Real, typename Solver>
BlockResult sweep_block(const StateGrid<Real>& in, StateGrid<Real>& out, int axis, Real lambda,
                        const Solver& solver, const Limiter& limiter, const Coords& lo,
                        const Coords& hi, bool count) {
  BlockResult result;
  const int m = in.num_states();
  const int len = hi[axis] - lo[axis];
  const std::ptrdiff_t stride = in.stride(axis);
  std::vector<WaveFan<Real>> fans(static_cast<std::size_t>(len) + 3);

  Coords tlo = lo, thi = hi;
  tlo[axis] = 0;
  thi[axis] = 1;
  std::uint64_t pencils = 0;
  Real ql[kMaxStates], qr[kMaxStates];
  Real left[kMaxStates], right[kMaxStates], carry[kMaxStates];

  for (int k = tlo[2]; k < thi[2]; ++k)
    for (int j = tlo[1]; j < thi[1]; ++j)
      for (int i = tlo[0]; i < thi[0]; ++i) {
        Coords c{i, j, k};
        c[axis] = lo[axis];
        const std::ptrdiff_t first = in.offset(c[0], c[1], c[2]);
        ++pencils;

        // Interfaces lo-1 .. hi; interface idx sits between cells
        // (lo + idx - 2) and (lo + idx - 1).
        for (int s = 0; s < m; ++s) qr[s] = in.state(s)[first - 2 * stride];
        for (std::size_t idx = 0; idx < fans.size(); ++idx) {
          const std::ptrdiff_t right_cell = first + (static_cast<std::ptrdiff_t>(idx) - 1) * stride;
          for (int s = 0; s < m; ++s) {
            ql[s] = qr[s];
            qr[s] = in.state(s)[right_cell];
          }
          solver.solve(ql, qr, axis, fans[idx]);
        }
        for (std::size_t idx = 1; idx + 1 < fans.size(); ++idx)
          for (int p = 0; p < fans[idx].num_waves; ++p)
            result.max_abs_speed =
                std::max(result.max_abs_speed, static_cast<double>(std::abs(fans[idx].speeds[p])));

        interface_terms(fans, 1, lambda, limiter, m, left, carry);
        for (std::size_t idx = 2; idx + 1 < fans.size(); ++idx) {
          interface_terms(fans, idx, lambda, limiter, m, left, right);
          const std::ptrdiff_t cell = first + (static_cast<std::ptrdiff_t>(idx) - 2) * stride;
          for (int s = 0; s < m; ++s) {
            const Real v = in.state(s)[cell] - lambda * (carry[s] + left[s]);
            out.state(s)[cell] = v;
            if (!std::isfinite(v) && (result.first_bad < 0 || cell < result.first_bad))
              result.first_bad = cell;
            carry[s] = right[s];
          }
        }
      }

  if (count) {
    const auto nw = static_cast<std::uint64_t>(solver.num_waves());
    const auto mm = static_cast<std::uint64_t>(m);
    const auto n = static_cast<std::uint64_t>(len);
    const OpCount sc = solver.cost();
    const OpCount wc = limiter.wave_cost(m);
    const std::uint64_t solves = pencils * (n + 3);
    const std::uint64_t faces = pencils * (n + 1);
    SweepCounters& ct = result.counters;
    ct.riemann_solves = solves;
    ct.riemann_flops = solves * static_cast<std::uint64_t>(sc.flops);
    ct.riemann_special = solves * static_cast<std::uint64_t>(sc.special);
    // per wave: fluctuation 2m, limited wave, coefficient 4, accumulate 2m;
    // per face: left and right terms 2m
    ct.correction_flops =
        faces * (nw * (4 * mm + 4 + static_cast<std::uint64_t>(wc.flops)) + 2 * mm);
    ct.correction_special = faces * nw * static_cast<std::uint64_t>(wc.special);
    ct.update_flops = pencils * n * 3 * mm;
    ct.bytes_read = pencils * (n + 2 * kHaloWidth) * mm * sizeof(Real);
    ct.bytes_written = pencils * n * mm * sizeof(Real);
  }
  return result;
}

[[noreturn]] void throw_blowup(const GridSpec& spec, int axis, std::int64_t offset);

template <typename Real>
void check_sweep_args(const StateGrid<Real>& in, const StateGrid<Real>& out, int axis, double dt,
                      int solver_states) {
  if (&in == &out) throw InvalidArgument("sweep: input and output must be distinct grids");
  if (!(in.spec() == out.spec())) throw InvalidArgument("sweep: grid specs differ");
  if (axis < 0 || axis >= in.spec().ndim) throw InvalidArgument("sweep: axis not active");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("sweep: dt must be positive");
  if (solver_states != in.num_states())
    throw InvalidArgument("sweep: solver expects " + std::to_string(solver_states) +
                          " states, grid has " + std::to_string(in.num_states()));
}

}  // namespace detail

/// One directional sweep over the whole interior as a single block. Requires
/// filled ghost cells in `in`; writes interior cells of `out`.
template <typename Real, typename Solver>
  requires PointwiseSolver<Solver, Real>
SweepResult sweep_axis(const StateGrid<Real>& in, StateGrid<Real>& out, int axis, double dt,
                       const Solver& solver, const Limiter& limiter, bool count = false) {
  detail::check_sweep_args(in, out, axis, dt, solver.num_states());
  const Real lambda = static_cast<Real>(dt / in.spec().spacing(axis));
  const Coords lo{0, 0, 0};
  const Coords hi = in.spec().cells;
  detail::BlockResult r =
      detail::sweep_block(in, out, axis, lambda, solver, limiter, lo, hi, count);
  if (r.error) std::rethrow_exception(r.error);
  if (r.first_bad >= 0) detail::throw_blowup(in.spec(), axis, r.first_bad);
  return {r.max_abs_speed, r.counters};
}

/// Same contract as sweep_axis, over independent tiles on `workers` threads.
/// Each tile recomputes its halo interfaces; per-tile maxima and counters are
/// folded in tile order.
template <typename Real, typename Solver>
  requires PointwiseSolver<Solver, Real>
SweepResult sweep_axis_tiled(const StateGrid<Real>& in, StateGrid<Real>& out, int axis, double dt,
                             const Solver& solver, const Limiter& limiter, const TilePlan& plan,
                             int workers, bool count = false) {
  detail::check_sweep_args(in, out, axis, dt, solver.num_states());
  if (plan.axis != axis) throw InvalidArgument("sweep_axis_tiled: plan built for another axis");
  if (workers < 1) throw InvalidArgument("sweep_axis_tiled: workers must be >= 1");
  const Real lambda = static_cast<Real>(dt / in.spec().spacing(axis));
  const auto ntiles = static_cast<std::ptrdiff_t>(plan.tiles.size());
  std::vector<detail::BlockResult> partial(plan.tiles.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::ptrdiff_t t = 0; t < ntiles; ++t) {
    const Tile& tile = plan.tiles[static_cast<std::size_t>(t)];
    try {
      partial[static_cast<std::size_t>(t)] =
          detail::sweep_block(in, out, axis, lambda, solver, limiter, tile.lo, tile.hi, count);
    } catch (...) {
      partial[static_cast<std::size_t>(t)].error = std::current_exception();
    }
  }

  SweepResult result;
  std::int64_t first_bad = -1;
  for (const auto& r : partial) {
    if (r.error) std::rethrow_exception(r.error);
    result.max_abs_speed = std::max(result.max_abs_speed, r.max_abs_speed);
    result.counters += r.counters;
    if (r.first_bad >= 0 && (first_bad < 0 || r.first_bad < first_bad)) first_bad = r.first_bad;
  }
  if (first_bad >= 0) detail::throw_blowup(in.spec(), axis, first_bad);
  return result;
}

/// Global max of per-tile maxima.
inline double fold_max_speed(std::span<const double> tile_maxima) {
  double s = 0.0;
  for (double v : tile_maxima) s = std::max(s, v);
  return s;
}

}  // namespace clawtile
