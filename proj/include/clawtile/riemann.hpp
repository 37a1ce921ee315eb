#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <functional>
#include <span>
#include <string>

#include "clawtile/errors.hpp"

namespace clawtile {

inline constexpr int kMaxStates = 8;
inline constexpr int kMaxWaves = 8;

/// Waves and speeds produced by one Riemann solve.
template <typename Real>
struct WaveFan {
  int num_waves = 0;
  int num_states = 0;
  std::array<std::array<Real, kMaxStates>, kMaxWaves> waves{};
  std::array<Real, kMaxWaves> speeds{};
};

/// Left- and right-going fluctuations A-dQ, A+dQ at one interface.
template <typename Real>
struct Fluctuations {
  int num_states = 0;
  std::array<Real, kMaxStates> amdq{};
  std::array<Real, kMaxStates> apdq{};
};

/// Floating-point operations of one call, `special` (sqrt, division) is a
/// subset of `flops`.
struct OpCount {
  long flops = 0;
  long special = 0;
};

/// A point-wise solver: solve(q_l, q_r, axis, fan) for two neighboring cell
/// states plus the layout metadata the sweep needs.
template <typename S, typename Real>
concept PointwiseSolver = requires(const S& s, const Real* q, int axis, WaveFan<Real>& fan) {
  { s.num_states() } -> std::convertible_to<int>;
  { s.num_waves() } -> std::convertible_to<int>;
  { s.cost() } -> std::convertible_to<OpCount>;
  s.solve(q, q, axis, fan);
  { s.max_speed_bound(q) } -> std::convertible_to<double>;
};

struct AcousticsParams {
  double sound_speed = 1.0;
  double impedance = 1.0;
  void validate() const;
};

struct ShallowWaterParams {
  double gravity = 1.0;
  void validate() const;
};

/// Linear acoustics, state (p, u[, v[, w]]). Two waves with speeds -c, +c.
template <typename Real>
class AcousticsSolver {
 public:
  AcousticsSolver(int ndim, const AcousticsParams& p)
      : ndim_(ndim),
        c_(static_cast<Real>(p.sound_speed)),
        z_(static_cast<Real>(p.impedance)),
        inv_2z_(static_cast<Real>(0.5 / p.impedance)) {
    p.validate();
  }

  int num_states() const { return 1 + ndim_; }
  int num_waves() const { return 2; }
  OpCount cost() const { return {9, 0}; }
  double max_speed_bound(const Real*) const { return static_cast<double>(c_); }

  void solve(const Real* ql, const Real* qr, int axis, WaveFan<Real>& fan) const {
    const int n = 1 + axis;
    const int m = num_states();
    const Real dp = qr[0] - ql[0];
    const Real zdu = z_ * (qr[n] - ql[n]);
    const Real beta1 = (zdu - dp) * inv_2z_;
    const Real beta2 = (zdu + dp) * inv_2z_;
    fan.num_waves = 2;
    fan.num_states = m;
    fan.waves[0].fill(Real(0));
    fan.waves[1].fill(Real(0));
    fan.waves[0][0] = -z_ * beta1;
    fan.waves[0][n] = beta1;
    fan.waves[1][0] = z_ * beta2;
    fan.waves[1][n] = beta2;
    fan.speeds[0] = -c_;
    fan.speeds[1] = c_;
  }

 private:
  int ndim_;
  Real c_, z_, inv_2z_;
};

/// Roe solver for shallow water, state (h, hu[, hv]). Three waves with speeds
/// u-c, u, u+c from Roe averages; no entropy fix.
template <typename Real>
class ShallowWaterSolver {
 public:
  ShallowWaterSolver(int ndim, const ShallowWaterParams& p)
      : ndim_(ndim), g_(static_cast<Real>(p.gravity)) {
    p.validate();
  }

  int num_states() const { return 1 + ndim_; }
  int num_waves() const { return 3; }
  OpCount cost() const { return ndim_ > 1 ? OpCount{43, 9} : OpCount{32, 7}; }

  double max_speed_bound(const Real* q) const {
    const double h = q[0];
    if (!(h > 0.0)) throw DryStateError("shallow water: non-positive depth in initial data");
    const double c = std::sqrt(static_cast<double>(g_) * h);
    double s = 0.0;
    for (int a = 0; a < ndim_; ++a) s = std::max(s, std::abs(q[1 + a] / h) + c);
    return s;
  }

  void solve(const Real* ql, const Real* qr, int axis, WaveFan<Real>& fan) const {
    const Real hl = ql[0];
    const Real hr = qr[0];
    if (!(hl > Real(0)) || !(hr > Real(0)))
      throw DryStateError("shallow water: non-positive depth (h_l=" + std::to_string(hl) +
                          ", h_r=" + std::to_string(hr) + ")");
    const int n = 1 + axis;
    const int t = 2 - axis;  // transverse momentum, 2D only
    const Real sl = std::sqrt(hl);
    const Real sr = std::sqrt(hr);
    const Real inv_sum = Real(1) / (sl + sr);
    const Real ul = ql[n] / hl;
    const Real ur = qr[n] / hr;
    const Real u_hat = (sl * ul + sr * ur) * inv_sum;
    const Real c_hat = std::sqrt(g_ * (hl + hr) * Real(0.5));
    const Real dh = hr - hl;
    const Real dhu = qr[n] - ql[n];
    const Real inv_2c = Real(1) / (Real(2) * c_hat);
    const Real a1 = ((u_hat + c_hat) * dh - dhu) * inv_2c;
    const Real a3 = (dhu - (u_hat - c_hat) * dh) * inv_2c;

    fan.num_waves = 3;
    fan.num_states = num_states();
    for (auto& w : fan.waves) w.fill(Real(0));
    fan.waves[0][0] = a1;
    fan.waves[0][n] = a1 * (u_hat - c_hat);
    fan.waves[2][0] = a3;
    fan.waves[2][n] = a3 * (u_hat + c_hat);
    if (ndim_ > 1) {
      const Real vl = ql[t] / hl;
      const Real vr = qr[t] / hr;
      const Real v_hat = (sl * vl + sr * vr) * inv_sum;
      fan.waves[0][t] = a1 * v_hat;
      fan.waves[2][t] = a3 * v_hat;
      fan.waves[1][t] = (qr[t] - ql[t]) - v_hat * dh;
    }
    fan.speeds[0] = u_hat - c_hat;
    fan.speeds[1] = u_hat;
    fan.speeds[2] = u_hat + c_hat;
  }

 private:
  int ndim_;
  Real g_;
};

/// Scalar advection q_t + u q_x = 0 with constant velocity per axis.
template <typename Real>
class AdvectionSolver {
 public:
  explicit AdvectionSolver(std::array<double, 3> velocity)
      : velocity_{static_cast<Real>(velocity[0]), static_cast<Real>(velocity[1]),
                  static_cast<Real>(velocity[2])} {}

  int num_states() const { return 1; }
  int num_waves() const { return 1; }
  OpCount cost() const { return {1, 0}; }
  double max_speed_bound(const Real*) const {
    double s = 0.0;
    for (Real u : velocity_) s = std::max(s, std::abs(static_cast<double>(u)));
    return s;
  }

  void solve(const Real* ql, const Real* qr, int axis, WaveFan<Real>& fan) const {
    fan.num_waves = 1;
    fan.num_states = 1;
    fan.waves[0][0] = qr[0] - ql[0];
    fan.speeds[0] = velocity_[axis];
  }

 private:
  std::array<Real, 3> velocity_;
};

/// Adapts any callable with the point-wise signature into a solver.
template <typename Real>
class FunctionSolver {
 public:
  using Fn = std::function<void(std::span<const Real> ql, std::span<const Real> qr,
                                int axis, WaveFan<Real>& fan)>;
  using SpeedFn = std::function<double(std::span<const Real> q)>;

  FunctionSolver(int num_states, int num_waves, Fn fn, SpeedFn speed_bound = {},
                 OpCount cost = {})
      : num_states_(num_states),
        num_waves_(num_waves),
        fn_(std::move(fn)),
        speed_bound_(std::move(speed_bound)),
        cost_(cost) {
    if (num_states < 1 || num_states > kMaxStates || num_waves < 1 || num_waves > kMaxWaves)
      throw InvalidArgument("FunctionSolver: state/wave count out of range");
    if (!fn_) throw InvalidArgument("FunctionSolver: empty solver function");
  }

  int num_states() const { return num_states_; }
  int num_waves() const { return num_waves_; }
  OpCount cost() const { return cost_; }
  double max_speed_bound(const Real* q) const {
    return speed_bound_ ? speed_bound_(std::span<const Real>(q, num_states_)) : 0.0;
  }
  void solve(const Real* ql, const Real* qr, int axis, WaveFan<Real>& fan) const {
    fn_(std::span<const Real>(ql, num_states_), std::span<const Real>(qr, num_states_),
        axis, fan);
  }

 private:
  int num_states_;
  int num_waves_;
  Fn fn_;
  SpeedFn speed_bound_;
  OpCount cost_;
};

/// Sums s_p W_p by sign of the speed; zero-speed waves go to neither side.
template <typename Real>
Fluctuations<Real> fluctuations(const WaveFan<Real>& fan) {
  Fluctuations<Real> f;
  f.num_states = fan.num_states;
  for (int p = 0; p < fan.num_waves; ++p) {
    const Real s = fan.speeds[p];
    if (s < Real(0)) {
      for (int m = 0; m < fan.num_states; ++m) f.amdq[m] += s * fan.waves[p][m];
    } else if (s > Real(0)) {
      for (int m = 0; m < fan.num_states; ++m) f.apdq[m] += s * fan.waves[p][m];
    }
  }
  return f;
}

// Checked free-function entry points over double-precision states.

WaveFan<double> acoustics_normal(std::span<const double> q_l, std::span<const double> q_r,
                                 int dir, const AcousticsParams& p);
WaveFan<double> shallow_water_normal(std::span<const double> q_l,
                                     std::span<const double> q_r, int dir,
                                     const ShallowWaterParams& p);
WaveFan<double> advection_normal(double q_l, double q_r, int dir, double speed);

}  // namespace clawtile
