#include "clawtile/convergence.hpp"

#include <cmath>
#include <limits>

#include "clawtile/errors.hpp"
#include "clawtile/simulation.hpp"

namespace clawtile {

double l1_against_restricted(const GridSpec& coarse, std::span<const double> coarse_values,
                             const GridSpec& fine, std::span<const double> fine_values) {
  Coords ratio{1, 1, 1};
  for (int a = 0; a < kMaxDims; ++a) {
    if (fine.cells[a] % coarse.cells[a] != 0)
      throw InvalidArgument("convergence: fine grid is not a refinement of the coarse grid");
    ratio[a] = fine.cells[a] / coarse.cells[a];
  }
  const std::size_t nc = coarse.interior_size();
  const std::size_t nf = fine.interior_size();
  const auto m = static_cast<std::size_t>(coarse.num_states);
  if (coarse_values.size() != nc * m || fine_values.size() != nf * m)
    throw InvalidArgument("convergence: value arrays do not match their grids");
  const double per_block = static_cast<double>(ratio[0]) * ratio[1] * ratio[2];

  double err = 0.0;
  for (std::size_t s = 0; s < m; ++s) {
    const double* c = coarse_values.data() + s * nc;
    const double* f = fine_values.data() + s * nf;
    for_each_interior(coarse, [&](int i, int j, int k) {
      double sum = 0.0;
      for (int kk = 0; kk < ratio[2]; ++kk)
        for (int jj = 0; jj < ratio[1]; ++jj)
          for (int ii = 0; ii < ratio[0]; ++ii) {
            const std::size_t fi = static_cast<std::size_t>(i * ratio[0] + ii);
            const std::size_t fj = static_cast<std::size_t>(j * ratio[1] + jj);
            const std::size_t fk = static_cast<std::size_t>(k * ratio[2] + kk);
            sum += f[(fk * fine.cells[1] + fj) * fine.cells[0] + fi];
          }
      const std::size_t ci = (static_cast<std::size_t>(k) * coarse.cells[1] + j) * coarse.cells[0] + i;
      err += std::abs(c[ci] - sum / per_block);
    });
  }
  return err * coarse.cell_volume();
}

ConvergenceStudy run_convergence(RunConfig cfg, int levels) {
  if (levels < 3) throw InvalidArgument("convergence: need at least 3 levels");
  const Coords base = cfg.grid.cells;
  std::vector<std::vector<double>> solutions;
  std::vector<GridSpec> grids;
  for (int l = 0; l < levels; ++l) {
    RunConfig c = cfg;
    for (int a = 0; a < c.grid.ndim; ++a) c.grid.cells[a] = base[a] << l;
    Simulation sim(c);
    const double t_end = c.t_end;
    sim.run_until(t_end);
    solutions.push_back(sim.interior_state());
    grids.push_back(c.grid);
  }

  ConvergenceStudy study;
  study.finest = grids.back().cells;
  const auto& fine = solutions.back();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int l = 0; l + 1 < levels; ++l) {
    ConvergenceLevel lv;
    lv.cells = grids[l].cells;
    lv.l1_error = l1_against_restricted(grids[l], solutions[l], grids.back(), fine);
    lv.order = l == 0 ? std::numeric_limits<double>::quiet_NaN()
                      : std::log2(study.levels.back().l1_error / lv.l1_error);
    study.levels.push_back(lv);
    const double y = -std::log2(lv.l1_error);
    sx += l;
    sy += y;
    sxx += double(l) * l;
    sxy += l * y;
  }
  const double n = levels - 1;
  study.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return study;
}

}  // namespace clawtile
