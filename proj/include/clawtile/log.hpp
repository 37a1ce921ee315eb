#pragma once

#include <spdlog/spdlog.h>

namespace clawtile::log {

/// Sets the level from CLAWTILE_LOG (trace, debug, info, warn, error, off).
/// Defaults to warn.
void init_from_env();

template <typename... Args>
void debug(const char* fmt, Args&&... args) {
  spdlog::debug(fmt::runtime(fmt), std::forward<Args>(args)...);
}
template <typename... Args>
void info(const char* fmt, Args&&... args) {
  spdlog::info(fmt::runtime(fmt), std::forward<Args>(args)...);
}
template <typename... Args>
void warn(const char* fmt, Args&&... args) {
  spdlog::warn(fmt::runtime(fmt), std::forward<Args>(args)...);
}

}  // namespace clawtile::log
