#include "clawtile/frame.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>

#include "clawtile/errors.hpp"

namespace clawtile {

namespace {

constexpr char kMagic[8] = {'C', 'L', 'A', 'W', 'F', 'R', 'M', '1'};

template <typename U>
void put_le(std::vector<std::byte>& out, U v) {
  for (std::size_t b = 0; b < sizeof(U); ++b)
    out.push_back(static_cast<std::byte>((v >> (8 * b)) & 0xFF));
}

template <typename U>
U get_le(std::span<const std::byte> in, std::size_t& pos) {
  if (pos + sizeof(U) > in.size()) throw TruncatedFrame("frame: truncated header");
  U v = 0;
  for (std::size_t b = 0; b < sizeof(U); ++b)
    v |= static_cast<U>(std::to_integer<unsigned>(in[pos + b])) << (8 * b);
  pos += sizeof(U);
  return v;
}

template <typename Real>
void put_value(std::vector<std::byte>& out, Real v) {
  if constexpr (sizeof(Real) == 4)
    put_le(out, std::bit_cast<std::uint32_t>(v));
  else
    put_le(out, std::bit_cast<std::uint64_t>(v));
}

}  // namespace

std::size_t Frame::cells() const {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

std::vector<double> Frame::values() const {
  const std::size_t count = num_states * cells();
  if (payload.size() != count * value_size()) throw TruncatedFrame("frame: payload size mismatch");
  std::vector<double> out(count);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (precision == Precision::single)
      out[i] = std::bit_cast<float>(get_le<std::uint32_t>(payload, pos));
    else
      out[i] = std::bit_cast<double>(get_le<std::uint64_t>(payload, pos));
  }
  return out;
}

std::vector<std::byte> encode_frame(const Frame& f) {
  if (f.payload.size() != f.expected_payload_bytes())
    throw FrameError("frame: payload length does not match header");
  std::vector<std::byte> out;
  out.reserve(64 + f.payload.size());
  for (char c : kMagic) out.push_back(static_cast<std::byte>(c));
  put_le(out, f.version);
  put_le(out, static_cast<std::uint32_t>(f.dims.size()));
  for (auto d : f.dims) put_le(out, d);
  put_le(out, f.num_states);
  put_le(out, static_cast<std::uint32_t>(f.precision == Precision::single ? 0 : 1));
  put_le(out, std::bit_cast<std::uint64_t>(f.time));
  put_le(out, f.step);
  out.insert(out.end(), f.payload.begin(), f.payload.end());
  return out;
}

Frame decode_frame(std::span<const std::byte> in) {
  if (in.size() < sizeof(kMagic)) throw TruncatedFrame("frame: file shorter than magic");
  if (std::memcmp(in.data(), kMagic, sizeof(kMagic)) != 0)
    throw FrameError("frame: bad magic (not a CLAWFRM1 file)");
  std::size_t pos = sizeof(kMagic);
  Frame f;
  f.version = get_le<std::uint32_t>(in, pos);
  if (f.version != Frame::kVersion)
    throw FrameError("frame: unsupported version " + std::to_string(f.version));
  const auto ndim = get_le<std::uint32_t>(in, pos);
  if (ndim < 1 || ndim > kMaxDims) throw FrameError("frame: bad ndim " + std::to_string(ndim));
  for (std::uint32_t a = 0; a < ndim; ++a) {
    f.dims.push_back(get_le<std::uint32_t>(in, pos));
    if (f.dims.back() == 0) throw FrameError("frame: zero-length dimension");
  }
  f.num_states = get_le<std::uint32_t>(in, pos);
  if (f.num_states == 0) throw FrameError("frame: zero states");
  const auto flag = get_le<std::uint32_t>(in, pos);
  if (flag > 1) throw FrameError("frame: bad precision flag " + std::to_string(flag));
  f.precision = flag == 0 ? Precision::single : Precision::dbl;
  f.time = std::bit_cast<double>(get_le<std::uint64_t>(in, pos));
  f.step = get_le<std::uint64_t>(in, pos);
  const std::size_t need = f.expected_payload_bytes();
  const std::size_t have = in.size() - pos;
  if (have < need)
    throw TruncatedFrame("frame: payload truncated (" + std::to_string(have) + " of " +
                         std::to_string(need) + " bytes)");
  if (have > need) throw FrameError("frame: trailing bytes after payload");
  f.payload.assign(in.begin() + static_cast<std::ptrdiff_t>(pos), in.end());
  return f;
}

void write_frame(const Frame& frame, const std::filesystem::path& path) {
  const auto bytes = encode_frame(frame);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FrameError("frame: cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FrameError("frame: write failed for '" + path.string() + "'");
}

Frame read_frame(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FrameError("frame: cannot open '" + path.string() + "'");
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_frame(std::as_bytes(std::span<const char>(raw)));
}

template <typename Real>
Frame make_frame(const StateGrid<Real>& grid, double time, std::uint64_t step) {
  const GridSpec& spec = grid.spec();
  Frame f;
  for (int a = 0; a < spec.ndim; ++a) f.dims.push_back(static_cast<std::uint32_t>(spec.cells[a]));
  f.num_states = static_cast<std::uint32_t>(spec.num_states);
  f.precision = sizeof(Real) == 4 ? Precision::single : Precision::dbl;
  f.time = time;
  f.step = step;
  f.payload.reserve(f.expected_payload_bytes());
  for (int s = 0; s < spec.num_states; ++s)
    for_each_interior(spec, [&](int i, int j, int k) { put_value(f.payload, grid.at(s, i, j, k)); });
  return f;
}

template <typename Real>
void read_frame_into(const Frame& frame, StateGrid<Real>& grid) {
  const GridSpec& spec = grid.spec();
  bool match = static_cast<int>(frame.dims.size()) == spec.ndim &&
               static_cast<int>(frame.num_states) == spec.num_states &&
               frame.value_size() == sizeof(Real);
  for (int a = 0; match && a < spec.ndim; ++a)
    match = static_cast<int>(frame.dims[a]) == spec.cells[a];
  if (!match) throw FrameError("frame: dimensions, state count or precision differ from grid");
  const auto values = frame.values();
  std::size_t idx = 0;
  for (int s = 0; s < spec.num_states; ++s)
    for_each_interior(spec, [&](int i, int j, int k) {
      grid.at(s, i, j, k) = static_cast<Real>(values[idx++]);
    });
}

std::string frame_file_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%04d.clw", index);
  return buf;
}

template Frame make_frame(const StateGrid<float>&, double, std::uint64_t);
template Frame make_frame(const StateGrid<double>&, double, std::uint64_t);
template void read_frame_into(const Frame&, StateGrid<float>&);
template void read_frame_into(const Frame&, StateGrid<double>&);

}  // namespace clawtile
