#include "clawtile/limiter.hpp"

#include "clawtile/errors.hpp"

namespace clawtile {

LimiterKind parse_limiter(std::string_view name) {
  if (name == "none") return LimiterKind::none;
  if (name == "minmod") return LimiterKind::minmod;
  if (name == "superbee") return LimiterKind::superbee;
  if (name == "mc") return LimiterKind::mc;
  if (name == "vanleer") return LimiterKind::vanleer;
  throw InvalidArgument("unknown limiter '" + std::string(name) +
                        "' (expected none, minmod, superbee, mc or vanleer)");
}

std::string_view limiter_name(LimiterKind kind) {
  switch (kind) {
    case LimiterKind::none: return "none";
    case LimiterKind::minmod: return "minmod";
    case LimiterKind::superbee: return "superbee";
    case LimiterKind::mc: return "mc";
    case LimiterKind::vanleer: return "vanleer";
  }
  return "none";
}

std::string Limiter::name() const {
  return custom_ ? name_ : std::string(limiter_name(kind_));
}

OpCount Limiter::phi_cost() const {
  if (custom_) return cost_;
  switch (kind_) {
    case LimiterKind::none: return {0, 0};
    case LimiterKind::minmod: return {0, 0};
    case LimiterKind::superbee: return {2, 0};
    case LimiterKind::mc: return {3, 0};
    case LimiterKind::vanleer: return {3, 1};
  }
  return {};
}

}  // namespace clawtile
