#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "clawtile/boundary.hpp"
#include "clawtile/sweep.hpp"

using namespace clawtile;

namespace {

// Textbook wave-propagation step for scalar advection with periodic
// boundaries, written directly on a plain vector.
std::vector<double> reference_advection_step(const std::vector<double>& q, double u,
                                             double nu, double (*limiter)(double)) {
  const int n = static_cast<int>(q.size());
  auto at = [&](int i) { return q[static_cast<std::size_t>((i % n + n) % n)]; };
  // interface i-1/2 between cells i-1 and i, for i = 0..n
  auto wave = [&](int i) { return at(i) - at(i - 1); };
  std::vector<double> out(q.size());
  auto flux = [&](int i) {
    const double w = wave(i);
    const double w_up = u > 0 ? wave(i - 1) : wave(i + 1);
    const double theta = w != 0.0 ? w_up / w : 0.0;
    const double wl = w != 0.0 ? limiter(theta) * w : 0.0;
    return 0.5 * std::abs(u) * (1.0 - nu * std::abs(u)) * wl;
  };
  for (int i = 0; i < n; ++i) {
    const double apdq_left = std::max(u, 0.0) * wave(i);
    const double amdq_right = std::min(u, 0.0) * wave(i + 1);
    out[static_cast<std::size_t>(i)] =
        at(i) - nu * (apdq_left + amdq_right) - nu * (flux(i + 1) - flux(i));
  }
  return out;
}

double minmod(double t) { return std::max(0.0, std::min(1.0, t)); }

GridSpec spec(int ndim, Coords cells, int m) {
  GridSpec g;
  g.ndim = ndim;
  g.cells = cells;
  g.num_states = m;
  return g;
}

template <typename Real>
void fill_random_wet(StateGrid<Real>& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> h(1.0, 2.0), v(-0.5, 0.5);
  for_each_interior(g.spec(), [&](int i, int j, int k) {
    g.at(0, i, j, k) = static_cast<Real>(h(rng));
    for (int s = 1; s < g.num_states(); ++s) g.at(s, i, j, k) = static_cast<Real>(v(rng));
  });
}

}  // namespace

TEST_CASE("constant state is preserved bitwise") {
  auto in = create_grid<double>(spec(2, {12, 9, 1}, 3));
  fill_initial(in, [](auto, std::span<double> q) {
    q[0] = 0.7;
    q[1] = -0.2;
    q[2] = 0.1;
  });
  apply_boundary(in, BoundarySpec::uniform(BoundaryKind::outflow));
  auto out = create_grid<double>(in.spec());
  out.copy_from(in);
  const AcousticsSolver<double> solver(2, {2.5, 1.0});
  for (int axis = 0; axis < 2; ++axis) {
    const auto r = sweep_axis(in, out, axis, 0.01, solver, Limiter(LimiterKind::mc));
    CHECK(r.max_abs_speed == 2.5);
    CHECK(out == in);
  }
}

TEST_CASE("correction flux of a single right-going wave") {
  std::vector<WaveFan<double>> fans(3);
  for (auto& f : fans) {
    f.num_waves = 2;
    f.num_states = 3;
    f.speeds = {-1.0, 1.0};
  }
  fans[1].waves[1] = {1, 0, 0};
  double left[3], right[3];
  detail::interface_terms(fans, 1, 0.5, Limiter(LimiterKind::none), 3, left, right);
  // F~ = 0.5 * |s| * (1 - 0.5 |s|) * W = 0.25 W
  CHECK(left[0] == 0.25);
  CHECK(right[0] == 0.75);
  CHECK(left[1] == 0.0);
}

TEST_CASE("1D advection matches an independent reference update") {
  const int n = 40;
  auto grid = create_grid<double>(spec(1, {n, 1, 1}, 1));
  fill_initial(grid, [](std::span<const double, 3> x, std::span<double> q) {
    q[0] = (x[0] >= 0.25 && x[0] < 0.5) ? 1.0 : 0.0;
  });
  std::vector<double> ref(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ref[static_cast<std::size_t>(i)] = grid.at(0, i);
  auto next = create_grid<double>(grid.spec());
  const AdvectionSolver<double> solver({1.0, 0.0, 0.0});
  const double dx = 1.0 / n, dt = 0.8 * dx;
  for (int step = 0; step < 10; ++step) {
    apply_boundary(grid, BoundarySpec::uniform(BoundaryKind::periodic));
    sweep_axis(grid, next, 0, dt, solver, Limiter(LimiterKind::minmod));
    std::swap(grid, next);
    ref = reference_advection_step(ref, 1.0, 0.8, minmod);
  }
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    CHECK(grid.at(0, i) == doctest::Approx(ref[static_cast<std::size_t>(i)]).epsilon(1e-12));
    total += grid.at(0, i);
  }
  CHECK(total == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("negative advection speed uses the right-hand upwind wave") {
  const int n = 24;
  auto grid = create_grid<double>(spec(1, {n, 1, 1}, 1));
  fill_initial(grid, [](std::span<const double, 3> x, std::span<double> q) {
    q[0] = std::sin(6.283185307179586 * x[0]) + (x[0] > 0.5 ? 1.0 : 0.0);
  });
  std::vector<double> ref(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ref[static_cast<std::size_t>(i)] = grid.at(0, i);
  apply_boundary(grid, BoundarySpec::uniform(BoundaryKind::periodic));
  auto next = create_grid<double>(grid.spec());
  const double dx = 1.0 / n;
  sweep_axis(grid, next, 0, 0.3 * dx, AdvectionSolver<double>({-1.5, 0, 0}),
             Limiter(LimiterKind::minmod));
  ref = reference_advection_step(ref, -1.5, 0.3, minmod);
  for (int i = 0; i < n; ++i)
    CHECK(next.at(0, i) == doctest::Approx(ref[static_cast<std::size_t>(i)]).epsilon(1e-12));
}

TEST_CASE("tiled sweep is bitwise identical to the monolithic sweep") {
  const GridSpec g = spec(2, {37, 29, 1}, 3);
  auto in = create_grid<double>(g);
  fill_random_wet(in, 3);
  BoundarySpec walls = BoundarySpec::uniform(BoundaryKind::reflective);
  for (int e = 0; e < 4; ++e) walls.edges[e].velocity_component = 1 + e / 2;
  apply_boundary(in, walls);
  const ShallowWaterSolver<double> solver(2, {9.81});
  for (int axis = 0; axis < 2; ++axis) {
    auto mono = create_grid<double>(g);
    const auto rm = sweep_axis(in, mono, axis, 1e-3, solver, Limiter(LimiterKind::mc), true);
    for (Coords shape : {Coords{100, 100, 1}, Coords{8, 4, 1}, Coords{5, 7, 1}, Coords{1, 1, 1}})
      for (int workers : {1, 3, 8}) {
        auto tiled = create_grid<double>(g);
        const TilePlan plan = plan_tiles(g, axis, shape);
        const auto rt = sweep_axis_tiled(in, tiled, axis, 1e-3, solver, Limiter(LimiterKind::mc),
                                         plan, workers, true);
        CHECK(tiled == mono);
        CHECK(rt.max_abs_speed == rm.max_abs_speed);
        CHECK(rt.counters.riemann_flops >= rm.counters.riemann_flops);
        CHECK(rt.counters.update_flops == rm.counters.update_flops);
        // modeled traffic grows by exactly the redundant halo re-reads
        CHECK(rt.counters.bytes() - rm.counters.bytes() ==
              plan.redundant_halo_cells(g) * 3 * sizeof(double));
      }
  }
}

TEST_CASE("tiled 3D single-precision sweep matches monolithic") {
  const GridSpec g = spec(3, {9, 10, 11}, 4);
  auto in = create_grid<float>(g);
  fill_random_wet(in, 5);
  apply_boundary(in, BoundarySpec::uniform(BoundaryKind::periodic));
  const AcousticsSolver<float> solver(3, {1.0, 2.0});
  for (int axis = 0; axis < 3; ++axis) {
    auto mono = create_grid<float>(g);
    auto tiled = create_grid<float>(g);
    sweep_axis(in, mono, axis, 0.01, solver, Limiter(LimiterKind::superbee));
    sweep_axis_tiled(in, tiled, axis, 0.01, solver, Limiter(LimiterKind::superbee),
                     plan_tiles(g, axis, {4, 3, 2}), 4);
    CHECK(tiled == mono);
  }
}

TEST_CASE("errors from tiles propagate") {
  const GridSpec g = spec(2, {16, 16, 1}, 3);
  auto in = create_grid<double>(g);
  fill_random_wet(in, 9);
  in.at(0, 12, 5) = -1.0;
  apply_boundary(in, BoundarySpec::uniform(BoundaryKind::outflow));
  auto out = create_grid<double>(g);
  const ShallowWaterSolver<double> solver(2, {1.0});
  CHECK_THROWS_AS(sweep_axis_tiled(in, out, 0, 1e-3, solver, Limiter(), plan_tiles(g, 0, {4, 4, 1}), 4),
                  DryStateError);
}

TEST_CASE("non-finite results raise NumericalBlowup at the first bad cell") {
  const GridSpec g = spec(1, {10, 1, 1}, 1);
  auto in = create_grid<double>(g);
  fill_initial(in, [](auto, std::span<double> q) { q[0] = 1.0; });
  in.at(0, 6) = 1e308;
  in.at(0, 7) = -1e308;
  apply_boundary(in, BoundarySpec::uniform(BoundaryKind::outflow));
  auto out = create_grid<double>(g);
  try {
    sweep_axis(in, out, 0, 0.09, AdvectionSolver<double>({1.0, 0, 0}), Limiter(LimiterKind::none));
    FAIL("expected NumericalBlowup");
  } catch (const NumericalBlowup& e) {
    CHECK(e.cell_offset() >= in.offset(6));
    CHECK(e.cell_offset() <= in.offset(8));
  }
}

TEST_CASE("argument checks") {
  const GridSpec g = spec(2, {4, 4, 1}, 3);
  auto a = create_grid<double>(g);
  auto b = create_grid<double>(g);
  const AcousticsSolver<double> solver(2, {1, 1});
  CHECK_THROWS_AS(sweep_axis(a, a, 0, 0.1, solver, Limiter()), InvalidArgument);
  CHECK_THROWS_AS(sweep_axis(a, b, 2, 0.1, solver, Limiter()), InvalidArgument);
  CHECK_THROWS_AS(sweep_axis(a, b, 0, -0.1, solver, Limiter()), InvalidArgument);
  CHECK_THROWS_AS(sweep_axis(a, b, 0, 0.1, AdvectionSolver<double>({1, 0, 0}), Limiter()),
                  InvalidArgument);
  CHECK_THROWS_AS(sweep_axis_tiled(a, b, 1, 0.1, solver, Limiter(), plan_tiles(g, 0, {2, 2, 1}), 2),
                  InvalidArgument);
}

TEST_CASE("max speed fold") {
  const std::vector<double> maxima{1.2, 0.7, 1.5};
  CHECK(fold_max_speed(maxima) == 1.5);
  CHECK(fold_max_speed({}) == 0.0);
}
