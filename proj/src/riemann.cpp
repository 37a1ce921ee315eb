#include "clawtile/riemann.hpp"

#include <cmath>

namespace clawtile {

namespace {

void require_finite(std::span<const double> q, const char* who) {
  for (double v : q)
    if (!std::isfinite(v)) throw InvalidArgument(std::string(who) + ": non-finite input state");
}

void require_axis(int dir, int ndim, const char* who) {
  if (dir < 0 || dir >= ndim)
    throw InvalidArgument(std::string(who) + ": direction " + std::to_string(dir) +
                          " outside a " + std::to_string(ndim) + "D state");
}

}  // namespace

void AcousticsParams::validate() const {
  if (!(sound_speed > 0.0) || !std::isfinite(sound_speed))
    throw InvalidArgument("acoustics: sound speed must be positive");
  if (!(impedance > 0.0) || !std::isfinite(impedance))
    throw InvalidArgument("acoustics: impedance must be positive");
}

void ShallowWaterParams::validate() const {
  if (!(gravity > 0.0) || !std::isfinite(gravity))
    throw InvalidArgument("shallow water: gravity must be positive");
}

WaveFan<double> acoustics_normal(std::span<const double> q_l, std::span<const double> q_r,
                                 int dir, const AcousticsParams& p) {
  if (q_l.size() != q_r.size() || q_l.size() < 2 || q_l.size() > 4)
    throw InvalidArgument("acoustics_normal: states must have 2 to 4 components");
  const int ndim = static_cast<int>(q_l.size()) - 1;
  require_axis(dir, ndim, "acoustics_normal");
  require_finite(q_l, "acoustics_normal");
  require_finite(q_r, "acoustics_normal");
  WaveFan<double> fan;
  AcousticsSolver<double>(ndim, p).solve(q_l.data(), q_r.data(), dir, fan);
  return fan;
}

WaveFan<double> shallow_water_normal(std::span<const double> q_l,
                                     std::span<const double> q_r, int dir,
                                     const ShallowWaterParams& p) {
  if (q_l.size() != q_r.size() || q_l.size() < 2 || q_l.size() > 3)
    throw InvalidArgument("shallow_water_normal: states must have 2 or 3 components");
  const int ndim = static_cast<int>(q_l.size()) - 1;
  require_axis(dir, ndim, "shallow_water_normal");
  require_finite(q_l, "shallow_water_normal");
  require_finite(q_r, "shallow_water_normal");
  WaveFan<double> fan;
  ShallowWaterSolver<double>(ndim, p).solve(q_l.data(), q_r.data(), dir, fan);
  return fan;
}

WaveFan<double> advection_normal(double q_l, double q_r, int dir, double speed) {
  if (dir < 0 || dir >= 3) throw InvalidArgument("advection_normal: bad direction");
  std::array<double, 3> velocity{};
  velocity[dir] = speed;
  WaveFan<double> fan;
  AdvectionSolver<double>(velocity).solve(&q_l, &q_r, dir, fan);
  return fan;
}

}  // namespace clawtile
