#pragma once

#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clawtile/boundary.hpp"
#include "clawtile/grid.hpp"
#include "clawtile/limiter.hpp"
#include "clawtile/perf.hpp"
#include "clawtile/riemann.hpp"

namespace clawtile {

enum class Problem { acoustics2d, acoustics3d, shallow_water2d, advection1d };
enum class Precision { single, dbl };

Problem parse_problem(std::string_view name);
std::string_view problem_name(Problem p);
int problem_ndim(Problem p);
int problem_num_states(Problem p);
/// State component holding the velocity (or momentum) normal to `axis`, or
/// -1 when the problem has none.
int problem_normal_velocity(Problem p, int axis);

Precision parse_precision(std::string_view name);
std::string_view precision_name(Precision p);

/// Initial condition selector plus its numeric parameters.
struct InitialSpec {
  std::string kind;
  std::map<std::string, std::vector<double>> values;

  double scalar(const std::string& key, double fallback) const;
  std::vector<double> vector(const std::string& key, std::vector<double> fallback) const;
};

struct RunConfig {
  Problem problem = Problem::acoustics2d;
  GridSpec grid;
  AcousticsParams acoustics;
  ShallowWaterParams shallow_water;
  std::array<double, 3> advection_velocity{1.0, 0.0, 0.0};
  LimiterKind limiter = LimiterKind::mc;
  BoundarySpec boundary;
  InitialSpec initial;

  double cfl_target = 0.9;
  double cfl_max = 1.0;
  double dt_cap = std::numeric_limits<double>::infinity();
  Precision precision = Precision::dbl;

  double t_end = 1.0;
  int num_frames = 1;
  std::vector<double> frame_times;  // overrides num_frames when non-empty
  std::string output_dir = "frames";

  int workers = 1;
  std::optional<Coords> tiles;
  bool serial = false;

  bool counters = false;
  MachineModel machine;

  /// Output times after t=0, ascending, ending at t_end.
  std::vector<double> output_times() const;

  /// Cross-field validation; throws ConfigError naming the offending key.
  void validate() const;
};

/// One `section.key = value` assignment with its source line (0 if none).
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

std::vector<ConfigEntry> parse_config_text(std::string_view text);
RunConfig config_from_entries(const std::vector<ConfigEntry>& entries);
RunConfig load_config_string(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Renders a config back to the text format (round-trips through
/// load_config_string).
std::string to_config_text(const RunConfig& cfg);

/// Parses "64x4" or "64x4x2".
Coords parse_tile_shape(std::string_view text);

}  // namespace clawtile
