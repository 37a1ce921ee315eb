#include "clawtile/boundary.hpp"

#include <algorithm>

#include "clawtile/errors.hpp"

namespace clawtile {

BoundaryKind parse_boundary(std::string_view name) {
  if (name == "outflow" || name == "transmissive" || name == "extrap") return BoundaryKind::outflow;
  if (name == "reflective" || name == "wall") return BoundaryKind::reflective;
  if (name == "periodic") return BoundaryKind::periodic;
  throw ConfigError("unknown boundary condition '" + std::string(name) +
                    "' (expected outflow, reflective or periodic)");
}

std::string_view boundary_name(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::outflow: return "outflow";
    case BoundaryKind::reflective: return "reflective";
    case BoundaryKind::periodic: return "periodic";
  }
  return "outflow";
}

void BoundarySpec::validate(const GridSpec& grid) const {
  static constexpr const char* kAxis[] = {"x", "y", "z"};
  for (int a = 0; a < grid.ndim; ++a) {
    const bool lo = edge(a, 0).kind == BoundaryKind::periodic;
    const bool hi = edge(a, 1).kind == BoundaryKind::periodic;
    if (lo != hi)
      throw ConfigError(std::string("boundary: periodic must be set on both ") + kAxis[a] +
                        " sides or neither");
    for (int side = 0; side < 2; ++side) {
      const EdgeCondition& e = edge(a, side);
      if (e.kind != BoundaryKind::reflective) continue;
      if (e.velocity_component < 0 || e.velocity_component >= grid.num_states)
        throw ConfigError(std::string("boundary: reflective ") + kAxis[a] +
                          (side ? "_upper" : "_lower") +
                          " needs a normal-velocity component, state has " +
                          std::to_string(grid.num_states) + " components");
    }
  }
}

namespace {

// Source interior index for ghost layer g (0 = nearest the wall).
int source_index(BoundaryKind kind, int side, int g, int n) {
  switch (kind) {
    case BoundaryKind::outflow:
      return side == 0 ? 0 : n - 1;
    case BoundaryKind::reflective: {
      const int mirror = std::min(g, n - 1);
      return side == 0 ? mirror : n - 1 - mirror;
    }
    case BoundaryKind::periodic: {
      const int ghost = side == 0 ? -1 - g : n + g;
      return ((ghost % n) + n) % n;
    }
  }
  return 0;
}

}  // namespace

template <typename Real>
void apply_boundary(StateGrid<Real>& grid, const BoundarySpec& spec) {
  const GridSpec& gs = grid.spec();
  spec.validate(gs);
  const int m = gs.num_states;

  for (int axis = 0; axis < gs.ndim; ++axis) {
    // Transverse ranges: earlier axes include their ghosts, later ones do not.
    std::array<int, kMaxDims> lo{}, hi{};
    for (int b = 0; b < kMaxDims; ++b) {
      const int gb = b < axis ? gs.ghost(b) : 0;
      lo[b] = -gb;
      hi[b] = gs.cells[b] + gb;
    }
    lo[axis] = 0;
    hi[axis] = 1;
    const int n = gs.cells[axis];
    const std::ptrdiff_t stride = grid.stride(axis);

    for (int side = 0; side < 2; ++side) {
      const EdgeCondition& e = spec.edge(axis, side);
      for (int k = lo[2]; k < hi[2]; ++k)
        for (int j = lo[1]; j < hi[1]; ++j)
          for (int i = lo[0]; i < hi[0]; ++i) {
            const std::ptrdiff_t base = grid.offset(i, j, k);  // axis coordinate is 0
            for (int g = 0; g < kGhost; ++g) {
              const int dst = side == 0 ? -1 - g : n + g;
              const int src = source_index(e.kind, side, g, n);
              for (int s = 0; s < m; ++s) {
                auto q = grid.state(s);
                Real v = q[base + src * stride];
                if (e.kind == BoundaryKind::reflective && s == e.velocity_component) v = -v;
                q[base + dst * stride] = v;
              }
            }
          }
    }
  }
}

template void apply_boundary(StateGrid<float>&, const BoundarySpec&);
template void apply_boundary(StateGrid<double>&, const BoundarySpec&);

}  // namespace clawtile
