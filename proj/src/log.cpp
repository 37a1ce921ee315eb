#include "clawtile/log.hpp"

#include <cstdlib>
#include <spdlog/sinks/stdout_color_sinks.h>

namespace clawtile::log {

void init_from_env() {
  static const bool once = [] {
    auto logger = spdlog::stderr_color_mt("clawtile");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("CLAWTILE_LOG"))
      spdlog::set_level(spdlog::level::from_str(env));
    return true;
  }();
  (void)once;
}

}  // namespace clawtile::log
