#include "clawtile/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace clawtile {

double GridSpec::min_spacing() const {
  double h = spacing(0);
  for (int a = 1; a < ndim; ++a) h = std::min(h, spacing(a));
  return h;
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < ndim; ++a) v *= spacing(a);
  return v;
}

std::size_t GridSpec::padded_size() const {
  std::size_t n = 1;
  for (int a = 0; a < kMaxDims; ++a) n *= static_cast<std::size_t>(padded(a));
  return n;
}

std::size_t GridSpec::interior_size() const {
  std::size_t n = 1;
  for (int a = 0; a < kMaxDims; ++a) n *= static_cast<std::size_t>(cells[a]);
  return n;
}

void GridSpec::validate() const {
  if (ndim < 1 || ndim > kMaxDims)
    throw InvalidArgument("grid: ndim must be 1, 2 or 3, got " + std::to_string(ndim));
  if (num_states < 1) throw InvalidArgument("grid: num_states must be >= 1");
  for (int a = 0; a < kMaxDims; ++a) {
    if (cells[a] < 1)
      throw InvalidArgument("grid: axis " + std::to_string(a) + " has " +
                            std::to_string(cells[a]) + " cells");
    if (a >= ndim) {
      if (cells[a] != 1)
        throw InvalidArgument("grid: inactive axis " + std::to_string(a) +
                              " must have exactly one cell");
      continue;
    }
    const double h = spacing(a);
    if (!std::isfinite(h) || h <= 0.0)
      throw InvalidArgument("grid: axis " + std::to_string(a) +
                            " has non-positive extent");
  }
}

std::size_t linear_index(const GridSpec& spec, const Coords& padded) {
  std::size_t offset = 0;
  std::size_t stride = 1;
  for (int a = 0; a < kMaxDims; ++a) {
    if (padded[a] < 0 || padded[a] >= spec.padded(a))
      throw InvalidArgument("linear_index: coordinate " + std::to_string(padded[a]) +
                            " out of bounds on axis " + std::to_string(a));
    offset += static_cast<std::size_t>(padded[a]) * stride;
    stride *= static_cast<std::size_t>(spec.padded(a));
  }
  return offset;
}

Coords padded_coords(const GridSpec& spec, std::size_t offset) {
  if (offset >= spec.padded_size())
    throw InvalidArgument("padded_coords: offset out of bounds");
  Coords c{};
  for (int a = 0; a < kMaxDims; ++a) {
    const auto n = static_cast<std::size_t>(spec.padded(a));
    c[a] = static_cast<int>(offset % n);
    offset /= n;
  }
  return c;
}

template <typename Real>
StateGrid<Real>::StateGrid(const GridSpec& spec) : spec_(spec) {
  spec_.validate();
  strides_[0] = 1;
  strides_[1] = spec_.padded(0);
  strides_[2] = strides_[1] * spec_.padded(1);
  data_.assign(static_cast<std::size_t>(spec_.num_states),
               std::vector<Real>(spec_.padded_size(), Real(0)));
}

template <typename Real>
void StateGrid<Real>::copy_from(const StateGrid& other) {
  if (!(spec_ == other.spec_)) throw InvalidArgument("copy_from: grid specs differ");
  for (std::size_t s = 0; s < data_.size(); ++s)
    std::copy(other.data_[s].begin(), other.data_[s].end(), data_[s].begin());
}

template <typename Real>
void fill_initial(StateGrid<Real>& grid, const InitialCondition& f) {
  const GridSpec& spec = grid.spec();
  std::array<double, kMaxDims> x{};
  std::vector<double> q(static_cast<std::size_t>(spec.num_states));
  for_each_interior(spec, [&](int i, int j, int k) {
    x = {grid.center(0, i), grid.center(1, j), grid.center(2, k)};
    std::fill(q.begin(), q.end(), 0.0);
    f(std::span<const double, kMaxDims>(x), q);
    for (int s = 0; s < spec.num_states; ++s) {
      if (!std::isfinite(q[s]))
        throw InvalidArgument("fill_initial: non-finite value for state " +
                              std::to_string(s) + " at cell (" + std::to_string(i) +
                              "," + std::to_string(j) + "," + std::to_string(k) + ")");
      grid.at(s, i, j, k) = static_cast<Real>(q[s]);
    }
  });
}

template class StateGrid<float>;
template class StateGrid<double>;
template void fill_initial(StateGrid<float>&, const InitialCondition&);
template void fill_initial(StateGrid<double>&, const InitialCondition&);

}  // namespace clawtile
