#include "clawtile/sweep.hpp"

namespace clawtile::detail {

void throw_blowup(const GridSpec& spec, int axis, std::int64_t offset) {
  const Coords p = padded_coords(spec, static_cast<std::size_t>(offset));
  std::string where = "(";
  for (int a = 0; a < spec.ndim; ++a) {
    if (a) where += ",";
    where += std::to_string(p[a] - spec.ghost(a));
  }
  where += ")";
  static constexpr const char* kAxis[] = {"x", "y", "z"};
  throw NumericalBlowup(std::string("non-finite state at cell ") + where + " during " +
                            kAxis[axis] + " sweep",
                        offset);
}

}  // namespace clawtile::detail
