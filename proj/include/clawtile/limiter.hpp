#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "clawtile/riemann.hpp"

namespace clawtile {

enum class LimiterKind { none, minmod, superbee, mc, vanleer };

LimiterKind parse_limiter(std::string_view name);
std::string_view limiter_name(LimiterKind kind);

inline double phi(double theta, LimiterKind kind) {
  switch (kind) {
    case LimiterKind::none:
      return 1.0;
    case LimiterKind::minmod:
      return std::max(0.0, std::min(1.0, theta));
    case LimiterKind::superbee:
      return std::max({0.0, std::min(1.0, 2.0 * theta), std::min(2.0, theta)});
    case LimiterKind::mc:
      return std::max(0.0, std::min({(1.0 + theta) / 2.0, 2.0, 2.0 * theta}));
    case LimiterKind::vanleer:
      return (theta + std::abs(theta)) / (1.0 + std::abs(theta));
  }
  return 1.0;
}

/// A wave limiter: one of the built-in kinds, or a programmatically
/// registered function of theta.
class Limiter {
 public:
  using Custom = std::function<double(double)>;

  Limiter(LimiterKind kind = LimiterKind::mc) : kind_(kind) {}
  Limiter(std::string name, Custom fn, OpCount cost = {})
      : kind_(LimiterKind::none), custom_(std::move(fn)), name_(std::move(name)), cost_(cost) {}

  bool is_custom() const { return static_cast<bool>(custom_); }
  LimiterKind kind() const { return kind_; }
  std::string name() const;

  double operator()(double theta) const { return custom_ ? custom_(theta) : phi(theta, kind_); }

  /// Operations per phi evaluation (comparisons are not counted).
  OpCount phi_cost() const;

  /// Operations per limited wave with `m` components: two dot products, the
  /// ratio, phi, and the rescale.
  OpCount wave_cost(int m) const {
    const OpCount p = phi_cost();
    return {5L * m + 1 + p.flops, 1 + p.special};
  }

 private:
  LimiterKind kind_;
  Custom custom_;
  std::string name_;
  OpCount cost_{};
};

/// theta = <w_upwind, w> / <w, w>, returns phi(theta) * w. A zero wave passes
/// through unchanged.
template <typename Real>
void limit_wave(std::span<const Real> w, std::span<const Real> w_upwind, const Limiter& limiter,
                std::span<Real> out) {
  Real dot_up = 0, dot_self = 0;
  for (std::size_t m = 0; m < w.size(); ++m) {
    dot_up += w_upwind[m] * w[m];
    dot_self += w[m] * w[m];
  }
  if (dot_self == Real(0)) {
    std::copy(w.begin(), w.end(), out.begin());
    return;
  }
  const Real scale = static_cast<Real>(limiter(static_cast<double>(dot_up / dot_self)));
  for (std::size_t m = 0; m < w.size(); ++m) out[m] = scale * w[m];
}

}  // namespace clawtile
