#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "clawtile/grid.hpp"

namespace clawtile {

/// Width of the redundant halo read on each side of a tile along the sweep
/// axis: one cell for the extra interface and one for the upwind wave.
inline constexpr int kHaloWidth = 2;

struct Tile {
  Coords lo{};       // owned cells, interior-relative, [lo, hi)
  Coords hi{};
  Coords halo_lo{};  // cells read, [halo_lo, halo_hi)
  Coords halo_hi{};

  std::size_t owned_cells() const;
  std::size_t halo_cells() const;
};

/// Independent tiles covering the interior exactly once for one sweep axis.
struct TilePlan {
  int axis = 0;
  Coords tile_shape{1, 1, 1};
  std::vector<Tile> tiles;

  /// Sum over tiles of (cells read - cells owned).
  std::size_t halo_cells() const;
  /// Cells read beyond the monolithic sweep's own halo; the redundant volume
  /// re-read because tiles are independent.
  std::size_t redundant_halo_cells(const GridSpec& spec) const;
};

/// Tiles of `tile_shape` owned cells (clamped to the interior). Halos extend
/// kHaloWidth cells along `axis` only.
TilePlan plan_tiles(const GridSpec& spec, int axis, Coords tile_shape);

/// 64 cells along the sweep axis by 4 rows across it.
Coords default_tile_shape(const GridSpec& spec, int axis);

/// Axes swept in one step, in order; each consumes the previous output.
std::vector<int> step_order(int ndim);

}  // namespace clawtile
