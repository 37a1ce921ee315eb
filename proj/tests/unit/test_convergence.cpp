#include <doctest.h>

#include <cmath>
#include <vector>

#include "clawtile/convergence.hpp"
#include "clawtile/errors.hpp"

using namespace clawtile;

namespace {

GridSpec line(int n) {
  GridSpec g;
  g.ndim = 1;
  g.cells = {n, 1, 1};
  return g;
}

}  // namespace

TEST_CASE("restriction averages fine blocks") {
  const std::vector<double> coarse{1.0, 2.0};
  const std::vector<double> fine{0.5, 1.5, 2.0, 2.0};
  CHECK(l1_against_restricted(line(2), coarse, line(4), fine) == 0.0);
  const std::vector<double> off{1.0, 3.0};
  // |3 - 2| over a cell of width 0.5
  CHECK(l1_against_restricted(line(2), off, line(4), fine) == doctest::Approx(0.5));
}

TEST_CASE("restriction rejects non-nested grids") {
  const std::vector<double> a(3), b(4);
  CHECK_THROWS_AS(l1_against_restricted(line(3), a, line(4), b), InvalidArgument);
  CHECK_THROWS_AS(l1_against_restricted(line(2), b, line(4), b), InvalidArgument);
}

TEST_CASE("advection study is close to second order") {
  RunConfig cfg = load_config_string(R"(
[problem]
name = advection1d
[grid]
cells = 25
[initial]
kind = sine
[boundary]
all = periodic
[numerics]
limiter = none
[output]
t_end = 1
)");
  const ConvergenceStudy s = run_convergence(cfg, 4);
  REQUIRE(s.levels.size() == 3);
  CHECK(s.finest[0] == 200);
  CHECK(std::isnan(s.levels[0].order));
  CHECK(s.levels[0].l1_error > s.levels[1].l1_error);
  CHECK(s.levels[1].l1_error > s.levels[2].l1_error);
  CHECK(s.fitted_order > 1.8);
  CHECK(s.fitted_order < 2.5);
  CHECK_THROWS_AS(run_convergence(cfg, 2), InvalidArgument);
}
