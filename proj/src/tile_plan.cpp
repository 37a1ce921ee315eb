#include "clawtile/tile_plan.hpp"

#include <algorithm>
#include <string>

#include "clawtile/errors.hpp"

namespace clawtile {

std::size_t Tile::owned_cells() const {
  std::size_t n = 1;
  for (int a = 0; a < kMaxDims; ++a) n *= static_cast<std::size_t>(hi[a] - lo[a]);
  return n;
}

std::size_t Tile::halo_cells() const {
  std::size_t n = 1;
  for (int a = 0; a < kMaxDims; ++a) n *= static_cast<std::size_t>(halo_hi[a] - halo_lo[a]);
  return n - owned_cells();
}

std::size_t TilePlan::halo_cells() const {
  std::size_t n = 0;
  for (const Tile& t : tiles) n += t.halo_cells();
  return n;
}

std::size_t TilePlan::redundant_halo_cells(const GridSpec& spec) const {
  std::size_t cross = 1;
  for (int a = 0; a < kMaxDims; ++a)
    if (a != axis) cross *= static_cast<std::size_t>(spec.cells[a]);
  return halo_cells() - 2 * kHaloWidth * cross;
}

TilePlan plan_tiles(const GridSpec& spec, int axis, Coords tile_shape) {
  spec.validate();
  if (axis < 0 || axis >= spec.ndim)
    throw InvalidArgument("plan_tiles: axis " + std::to_string(axis) + " not active");
  TilePlan plan;
  plan.axis = axis;
  for (int a = 0; a < kMaxDims; ++a) {
    if (a >= spec.ndim) tile_shape[a] = 1;
    if (tile_shape[a] < 1) throw InvalidArgument("plan_tiles: tile shape must be positive");
    plan.tile_shape[a] = std::min(tile_shape[a], spec.cells[a]);
  }
  const Coords& shape = plan.tile_shape;
  for (int k = 0; k < spec.cells[2]; k += shape[2])
    for (int j = 0; j < spec.cells[1]; j += shape[1])
      for (int i = 0; i < spec.cells[0]; i += shape[0]) {
        Tile t;
        t.lo = {i, j, k};
        for (int a = 0; a < kMaxDims; ++a) t.hi[a] = std::min(t.lo[a] + shape[a], spec.cells[a]);
        t.halo_lo = t.lo;
        t.halo_hi = t.hi;
        t.halo_lo[axis] -= kHaloWidth;
        t.halo_hi[axis] += kHaloWidth;
        plan.tiles.push_back(t);
      }
  return plan;
}

Coords default_tile_shape(const GridSpec& spec, int axis) {
  Coords shape{1, 1, 1};
  for (int a = 0; a < spec.ndim; ++a) shape[a] = a == axis ? 64 : 4;
  return shape;
}

std::vector<int> step_order(int ndim) {
  if (ndim < 1 || ndim > kMaxDims) throw InvalidArgument("step_order: ndim must be 1, 2 or 3");
  std::vector<int> axes(static_cast<std::size_t>(ndim));
  for (int a = 0; a < ndim; ++a) axes[a] = a;
  return axes;
}

}  // namespace clawtile
