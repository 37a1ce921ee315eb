#include <doctest.h>

#include <set>

#include "clawtile/tile_plan.hpp"

using namespace clawtile;

namespace {

GridSpec grid(int ndim, Coords cells) {
  GridSpec g;
  g.ndim = ndim;
  g.cells = cells;
  return g;
}

// Every interior cell is owned by exactly one tile.
void check_cover(const GridSpec& g, const TilePlan& plan) {
  std::vector<int> owner(g.interior_size(), 0);
  for (const auto& t : plan.tiles)
    for (int k = t.lo[2]; k < t.hi[2]; ++k)
      for (int j = t.lo[1]; j < t.hi[1]; ++j)
        for (int i = t.lo[0]; i < t.hi[0]; ++i)
          ++owner[static_cast<std::size_t>((k * g.cells[1] + j) * g.cells[0] + i)];
  for (int c : owner) CHECK(c == 1);
}

}  // namespace

TEST_CASE("1D tiles with halos") {
  const GridSpec g = grid(1, {16, 1, 1});
  const TilePlan p = plan_tiles(g, 0, {8, 1, 1});
  REQUIRE(p.tiles.size() == 2);
  CHECK(p.tiles[0].lo[0] == 0);
  CHECK(p.tiles[0].hi[0] == 8);
  CHECK(p.tiles[1].lo[0] == 8);
  CHECK(p.tiles[1].hi[0] == 16);
  CHECK(p.tiles[0].halo_lo[0] == -2);
  CHECK(p.tiles[0].halo_hi[0] == 10);
  CHECK(p.tiles[1].halo_lo[0] == 6);
  CHECK(p.tiles[1].halo_hi[0] == 18);
  check_cover(g, p);
}

TEST_CASE("2D tiles carry halos along the sweep axis only") {
  const GridSpec g = grid(2, {6, 4, 1});
  const TilePlan p = plan_tiles(g, 0, {3, 2, 1});
  CHECK(p.tiles.size() == 4);
  for (const auto& t : p.tiles) {
    CHECK(t.halo_lo[0] == t.lo[0] - 2);
    CHECK(t.halo_hi[0] == t.hi[0] + 2);
    CHECK(t.halo_lo[1] == t.lo[1]);
    CHECK(t.halo_hi[1] == t.hi[1]);
    CHECK(t.owned_cells() == 6);
    CHECK(t.halo_cells() == 4 * 2);
  }
  check_cover(g, p);
}

TEST_CASE("oversized tiles clamp to one tile") {
  const GridSpec g = grid(1, {16, 1, 1});
  const TilePlan p = plan_tiles(g, 0, {100, 1, 1});
  CHECK(p.tiles.size() == 1);
  CHECK(p.redundant_halo_cells(g) == 0);
}

TEST_CASE("ragged tiles still cover the interior") {
  const GridSpec g = grid(3, {10, 7, 5});
  for (int axis = 0; axis < 3; ++axis) {
    const TilePlan p = plan_tiles(g, axis, {4, 3, 2});
    check_cover(g, p);
    for (const auto& t : p.tiles) {
      CHECK(t.halo_lo[axis] >= -2);
      CHECK(t.halo_hi[axis] <= g.cells[axis] + 2);
    }
  }
}

TEST_CASE("redundant halo volume") {
  const GridSpec g = grid(2, {64, 32, 1});
  // 4 tiles along x: 3 internal cuts, each re-reading 4 cells per row
  const TilePlan p = plan_tiles(g, 0, {16, 8, 1});
  CHECK(p.halo_cells() == 16 * 4 * 8);
  CHECK(p.redundant_halo_cells(g) == 3 * 4 * 32);
  const TilePlan py = plan_tiles(g, 1, {16, 8, 1});
  CHECK(py.redundant_halo_cells(g) == 3 * 4 * 64);
}

TEST_CASE("invalid plans") {
  const GridSpec g = grid(2, {8, 8, 1});
  CHECK_THROWS_AS(plan_tiles(g, 2, {4, 4, 1}), InvalidArgument);
  CHECK_THROWS_AS(plan_tiles(g, 0, {0, 4, 1}), InvalidArgument);
}

TEST_CASE("default tile shape and step order") {
  const GridSpec g = grid(2, {256, 256, 1});
  const Coords s = default_tile_shape(g, 0);
  CHECK(s[0] == 64);
  CHECK(s[1] == 4);
  CHECK(default_tile_shape(g, 1)[1] == 64);
  CHECK(step_order(1) == std::vector<int>{0});
  CHECK(step_order(2) == std::vector<int>{0, 1});
  CHECK(step_order(3) == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(step_order(0), InvalidArgument);
}
