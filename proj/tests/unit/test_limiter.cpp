#include <doctest.h>

#include <array>
#include <vector>

#include "clawtile/limiter.hpp"

using namespace clawtile;

namespace {

constexpr std::array kLimited{LimiterKind::minmod, LimiterKind::superbee, LimiterKind::mc,
                              LimiterKind::vanleer};

std::vector<double> limited(std::vector<double> w, std::vector<double> up, const Limiter& l) {
  std::vector<double> out(w.size());
  limit_wave<double>(w, up, l, out);
  return out;
}

}  // namespace

TEST_CASE("phi is 1 on smooth data for every kind") {
  for (auto k : {LimiterKind::none, LimiterKind::minmod, LimiterKind::superbee, LimiterKind::mc,
                 LimiterKind::vanleer})
    CHECK(phi(1.0, k) == 1.0);
}

TEST_CASE("phi vanishes on opposite-sign jumps") {
  for (auto k : kLimited) CHECK(phi(-0.5, k) == 0.0);
  CHECK(phi(-0.5, LimiterKind::none) == 1.0);
}

TEST_CASE("phi values") {
  CHECK(phi(2.0, LimiterKind::mc) == 1.5);
  CHECK(phi(10.0, LimiterKind::mc) == 2.0);
  CHECK(phi(0.25, LimiterKind::mc) == 0.5);
  CHECK(phi(0.5, LimiterKind::minmod) == 0.5);
  CHECK(phi(3.0, LimiterKind::minmod) == 1.0);
  CHECK(phi(0.25, LimiterKind::superbee) == 0.5);
  CHECK(phi(0.75, LimiterKind::superbee) == 1.0);
  CHECK(phi(1.5, LimiterKind::superbee) == 1.5);
  CHECK(phi(3.0, LimiterKind::superbee) == 2.0);
  CHECK(phi(3.0, LimiterKind::vanleer) == doctest::Approx(1.5));
}

TEST_CASE("limited waves") {
  for (auto k : kLimited) {
    const Limiter l(k);
    CHECK(limited({1, -2}, {1, -2}, l) == std::vector<double>{1, -2});
    CHECK(limited({1, -2}, {0, 0}, l) == std::vector<double>{0, -0.0});
  }
  CHECK(limited({1, 0}, {2, 0}, Limiter(LimiterKind::mc)) == std::vector<double>{1.5, 0});
  CHECK(limited({0, 0}, {5, 1}, Limiter(LimiterKind::minmod)) == std::vector<double>{0, 0});
  CHECK(limited({2, 0}, {-7, 3}, Limiter(LimiterKind::none)) == std::vector<double>{2, 0});
}

TEST_CASE("names parse both ways") {
  for (auto k : {LimiterKind::none, LimiterKind::minmod, LimiterKind::superbee, LimiterKind::mc,
                 LimiterKind::vanleer})
    CHECK(parse_limiter(limiter_name(k)) == k);
  CHECK_THROWS_AS(parse_limiter("albada"), InvalidArgument);
}

TEST_CASE("custom limiter") {
  const Limiter l("half", [](double) { return 0.5; }, {1, 0});
  CHECK(l.is_custom());
  CHECK(l.name() == "half");
  CHECK(l(7.0) == 0.5);
  CHECK(limited({2, 4}, {1, 1}, l) == std::vector<double>{1, 2});
  CHECK(l.wave_cost(3).flops == 5 * 3 + 1 + 1);
}
