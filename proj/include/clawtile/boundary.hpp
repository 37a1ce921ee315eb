#pragma once

#include <array>
#include <string>
#include <string_view>

#include "clawtile/grid.hpp"

namespace clawtile {

enum class BoundaryKind { outflow, reflective, periodic };

BoundaryKind parse_boundary(std::string_view name);
std::string_view boundary_name(BoundaryKind kind);

struct EdgeCondition {
  BoundaryKind kind = BoundaryKind::outflow;
  /// State component negated at a reflective wall; -1 when unset.
  int velocity_component = -1;
};

/// One condition per axis side, indexed 2*axis + (0 lower, 1 upper).
struct BoundarySpec {
  std::array<EdgeCondition, 2 * kMaxDims> edges{};

  EdgeCondition& edge(int axis, int side) { return edges[2 * axis + side]; }
  const EdgeCondition& edge(int axis, int side) const { return edges[2 * axis + side]; }

  static BoundarySpec uniform(BoundaryKind kind) {
    BoundarySpec b;
    for (auto& e : b.edges) e.kind = kind;
    return b;
  }

  /// Periodic pairing and reflective component checks; throws ConfigError.
  void validate(const GridSpec& grid) const;
};

/// Fills every ghost cell. Faces are processed x, then y, then z; later faces
/// span the ghost layers of earlier axes so corners are defined.
template <typename Real>
void apply_boundary(StateGrid<Real>& grid, const BoundarySpec& spec);

extern template void apply_boundary(StateGrid<float>&, const BoundarySpec&);
extern template void apply_boundary(StateGrid<double>&, const BoundarySpec&);

}  // namespace clawtile
