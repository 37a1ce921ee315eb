#pragma once

#include "clawtile/config.hpp"
#include "clawtile/grid.hpp"

namespace clawtile {

/// Initial condition described by `cfg.initial`. The first state component
/// (pressure, depth or the advected scalar) carries the profile; the others
/// come from `initial.state` (zero by default, depth 1 for shallow water).
///
///   constant   the `state` vector everywhere
///   gaussian   + amplitude * exp(-|x - center|^2 / width^2)
///   sine       + amplitude * sin(2 pi sum_a k_a (x_a - lower_a) / L_a + phase)
///   square     amplitude on position[0] <= x < position[1], else background
///   dam_break  h_left for x < position, h_right beyond
InitialCondition make_initial_condition(const RunConfig& cfg);

}  // namespace clawtile
