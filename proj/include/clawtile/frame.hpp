#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "clawtile/config.hpp"
#include "clawtile/grid.hpp"

namespace clawtile {

/// Binary snapshot of the interior cells. On disk (all little-endian):
///
///   magic "CLAWFRM1" (8 bytes), version u32, ndim u32, dims u32 x ndim,
///   num_states u32, precision u32 (0 single, 1 double), time f64, step u64,
///   payload: per state, interior values row-major with x fastest.
struct Frame {
  static constexpr std::uint32_t kVersion = 1;

  std::uint32_t version = kVersion;
  std::vector<std::uint32_t> dims;
  std::uint32_t num_states = 0;
  Precision precision = Precision::dbl;
  double time = 0.0;
  std::uint64_t step = 0;
  std::vector<std::byte> payload;

  std::size_t value_size() const { return precision == Precision::single ? 4 : 8; }
  std::size_t cells() const;
  std::size_t expected_payload_bytes() const { return num_states * cells() * value_size(); }
  /// Payload decoded to doubles.
  std::vector<double> values() const;

  bool operator==(const Frame&) const = default;
};

std::vector<std::byte> encode_frame(const Frame& frame);
/// Throws FrameError on a bad magic or header, TruncatedFrame on short data.
Frame decode_frame(std::span<const std::byte> bytes);

void write_frame(const Frame& frame, const std::filesystem::path& path);
Frame read_frame(const std::filesystem::path& path);

template <typename Real>
Frame make_frame(const StateGrid<Real>& grid, double time, std::uint64_t step);

/// Copies the payload into the interior of `grid`; dims, state count and
/// precision must match.
template <typename Real>
void read_frame_into(const Frame& frame, StateGrid<Real>& grid);

/// "frame_0007.clw"
std::string frame_file_name(int index);

}  // namespace clawtile
