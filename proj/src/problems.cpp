#include "clawtile/problems.hpp"

#include <cmath>
#include <numbers>

#include "clawtile/errors.hpp"

namespace clawtile {

namespace {

void require_keys(const InitialSpec& init, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : init.values) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok)
      throw ConfigError("initial." + key + ": not a parameter of kind '" + init.kind + "'");
  }
}

}  // namespace

InitialCondition make_initial_condition(const RunConfig& cfg) {
  const InitialSpec& init = cfg.initial;
  const int ndim = cfg.grid.ndim;
  const int m = cfg.grid.num_states;

  std::vector<double> base(static_cast<std::size_t>(m), 0.0);
  if (cfg.problem == Problem::shallow_water2d) base[0] = 1.0;
  if (auto it = init.values.find("state"); it != init.values.end()) {
    if (static_cast<int>(it->second.size()) != m)
      throw ConfigError("initial.state: expected " + std::to_string(m) + " components");
    base = it->second;
  }
  const double background = init.scalar("background", base[0]);
  base[0] = background;

  std::vector<double> center(static_cast<std::size_t>(ndim));
  for (int a = 0; a < ndim; ++a) center[a] = 0.5 * (cfg.grid.lower[a] + cfg.grid.upper[a]);

  if (init.kind == "constant") {
    require_keys(init, {"state"});
    return [base](std::span<const double, kMaxDims>, std::span<double> q) {
      std::copy(base.begin(), base.end(), q.begin());
    };
  }
  if (init.kind == "gaussian") {
    require_keys(init, {"state", "background", "center", "width", "amplitude"});
    center = init.vector("center", center);
    if (static_cast<int>(center.size()) != ndim)
      throw ConfigError("initial.center: expected " + std::to_string(ndim) + " values");
    const double width = init.scalar("width", 0.1);
    const double amp = init.scalar("amplitude", 1.0);
    if (!(width > 0.0)) throw ConfigError("initial.width: must be positive");
    return [=](std::span<const double, kMaxDims> x, std::span<double> q) {
      double r2 = 0.0;
      for (int a = 0; a < ndim; ++a) r2 += (x[a] - center[a]) * (x[a] - center[a]);
      std::copy(base.begin(), base.end(), q.begin());
      q[0] += amp * std::exp(-r2 / (width * width));
    };
  }
  if (init.kind == "sine") {
    require_keys(init, {"state", "background", "wavenumber", "amplitude", "phase"});
    auto k = init.vector("wavenumber", std::vector<double>(static_cast<std::size_t>(ndim), 1.0));
    if (static_cast<int>(k.size()) != ndim)
      throw ConfigError("initial.wavenumber: expected " + std::to_string(ndim) + " values");
    const double amp = init.scalar("amplitude", 1.0);
    const double phase = init.scalar("phase", 0.0);
    const auto lower = cfg.grid.lower;
    const auto upper = cfg.grid.upper;
    return [=](std::span<const double, kMaxDims> x, std::span<double> q) {
      double arg = phase;
      for (int a = 0; a < ndim; ++a)
        arg += 2.0 * std::numbers::pi * k[a] * (x[a] - lower[a]) / (upper[a] - lower[a]);
      std::copy(base.begin(), base.end(), q.begin());
      q[0] += amp * std::sin(arg);
    };
  }
  if (init.kind == "square") {
    require_keys(init, {"state", "background", "position", "amplitude"});
    const double lo0 = cfg.grid.lower[0], hi0 = cfg.grid.upper[0];
    auto pos = init.vector("position", {lo0 + 0.25 * (hi0 - lo0), lo0 + 0.5 * (hi0 - lo0)});
    if (pos.size() != 2 || !(pos[0] < pos[1]))
      throw ConfigError("initial.position: expected two increasing x values");
    const double amp = init.scalar("amplitude", 1.0);
    return [=](std::span<const double, kMaxDims> x, std::span<double> q) {
      std::copy(base.begin(), base.end(), q.begin());
      if (x[0] >= pos[0] && x[0] < pos[1]) q[0] = amp;
    };
  }
  if (init.kind == "dam_break") {
    require_keys(init, {"state", "background", "position", "h_left", "h_right"});
    const double pos = init.scalar("position", center[0]);
    const double hl = init.scalar("h_left", 2.0);
    const double hr = init.scalar("h_right", 1.0);
    return [=](std::span<const double, kMaxDims> x, std::span<double> q) {
      std::copy(base.begin(), base.end(), q.begin());
      q[0] = x[0] < pos ? hl : hr;
    };
  }
  throw ConfigError("initial.kind: unknown kind '" + init.kind +
                    "' (expected constant, gaussian, sine, square or dam_break)");
}

}  // namespace clawtile
