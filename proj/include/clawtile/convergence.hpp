#pragma once

#include <vector>

#include "clawtile/config.hpp"
#include "clawtile/grid.hpp"

namespace clawtile {

struct ConvergenceLevel {
  Coords cells{1, 1, 1};
  double l1_error = 0.0;  // against the finest level, averaged down
  double order = 0.0;     // log2(e_coarser / e_this); NaN on the first level
};

struct ConvergenceStudy {
  std::vector<ConvergenceLevel> levels;  // every level but the finest
  Coords finest{1, 1, 1};
  /// Least-squares slope of -log2(error) against level index.
  double fitted_order = 0.0;
};

/// Runs `cfg` on `levels` grids, doubling the cell counts from cfg.grid.cells,
/// and compares each coarse solution with the finest one restricted by cell
/// averaging. L1 norm over every state component, weighted by cell volume.
ConvergenceStudy run_convergence(RunConfig cfg, int levels);

/// Volume-weighted L1 distance between a coarse interior state and a fine
/// one restricted onto it. Both use the per-state x-fastest layout.
double l1_against_restricted(const GridSpec& coarse, std::span<const double> coarse_values,
                             const GridSpec& fine, std::span<const double> fine_values);

}  // namespace clawtile
