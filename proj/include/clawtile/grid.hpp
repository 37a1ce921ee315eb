#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "clawtile/errors.hpp"

namespace clawtile {

inline constexpr int kMaxDims = 3;
inline constexpr int kGhost = 2;

/// Discretized domain description. Axes beyond `ndim` are inactive: they have
/// one cell and no ghost layers.
struct GridSpec {
  int ndim = 2;
  std::array<int, kMaxDims> cells{1, 1, 1};
  std::array<double, kMaxDims> lower{0.0, 0.0, 0.0};
  std::array<double, kMaxDims> upper{1.0, 1.0, 1.0};
  int num_states = 1;

  double spacing(int axis) const {
    return (upper[axis] - lower[axis]) / cells[axis];
  }
  double min_spacing() const;
  double cell_volume() const;

  /// Ghost layers on each side of `axis` (0 for inactive axes).
  int ghost(int axis) const { return axis < ndim ? kGhost : 0; }
  int padded(int axis) const { return cells[axis] + 2 * ghost(axis); }
  std::size_t padded_size() const;
  std::size_t interior_size() const;

  /// Throws InvalidArgument when the spec is unusable.
  void validate() const;

  bool operator==(const GridSpec&) const = default;
};

using Coords = std::array<int, kMaxDims>;

/// Row-major offset of padded coordinates (x fastest). Throws when out of
/// the padded bounds.
std::size_t linear_index(const GridSpec& spec, const Coords& padded);

/// Inverse of linear_index.
Coords padded_coords(const GridSpec& spec, std::size_t offset);

/// Structure-of-arrays storage of cell averages: one contiguous padded array
/// per conserved variable.
template <typename Real>
class StateGrid {
 public:
  using value_type = Real;

  StateGrid() = default;
  explicit StateGrid(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  int num_states() const { return spec_.num_states; }

  std::span<Real> state(int s) { return data_[s]; }
  std::span<const Real> state(int s) const { return data_[s]; }

  std::ptrdiff_t stride(int axis) const { return strides_[axis]; }

  /// Offset of interior-relative coordinates; ghosts are at -2, -1, n, n+1.
  std::ptrdiff_t offset(int i, int j = 0, int k = 0) const {
    return (i + spec_.ghost(0)) + (j + spec_.ghost(1)) * strides_[1] +
           (k + spec_.ghost(2)) * strides_[2];
  }

  Real& at(int s, int i, int j = 0, int k = 0) {
    return data_[s][static_cast<std::size_t>(offset(i, j, k))];
  }
  Real at(int s, int i, int j = 0, int k = 0) const {
    return data_[s][static_cast<std::size_t>(offset(i, j, k))];
  }

  /// Cell-center coordinate along `axis` of interior index `i`.
  double center(int axis, int i) const {
    return spec_.lower[axis] + (i + 0.5) * spec_.spacing(axis);
  }

  /// Copies every padded value from `other`, which must share the spec.
  void copy_from(const StateGrid& other);

  bool operator==(const StateGrid& other) const {
    return spec_ == other.spec_ && data_ == other.data_;
  }

 private:
  GridSpec spec_;
  std::array<std::ptrdiff_t, kMaxDims> strides_{};
  std::vector<std::vector<Real>> data_;
};

template <typename Real>
StateGrid<Real> create_grid(const GridSpec& spec) {
  return StateGrid<Real>(spec);
}

/// Initial-condition callback: writes the state at cell center `x`.
using InitialCondition =
    std::function<void(std::span<const double, kMaxDims> x, std::span<double> q)>;

/// Evaluates `f` at every interior cell center. Ghost cells are untouched.
template <typename Real>
void fill_initial(StateGrid<Real>& grid, const InitialCondition& f);

/// Calls fn(i, j, k) for every interior cell, x fastest.
template <typename Fn>
void for_each_interior(const GridSpec& spec, Fn&& fn) {
  for (int k = 0; k < spec.cells[2]; ++k)
    for (int j = 0; j < spec.cells[1]; ++j)
      for (int i = 0; i < spec.cells[0]; ++i) fn(i, j, k);
}

extern template class StateGrid<float>;
extern template class StateGrid<double>;

}  // namespace clawtile
