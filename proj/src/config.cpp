#include "clawtile/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "clawtile/errors.hpp"

namespace clawtile {

Problem parse_problem(std::string_view name) {
  if (name == "acoustics2d") return Problem::acoustics2d;
  if (name == "acoustics3d") return Problem::acoustics3d;
  if (name == "shallow_water2d") return Problem::shallow_water2d;
  if (name == "advection1d") return Problem::advection1d;
  throw ConfigError("problem.name: unknown problem '" + std::string(name) +
                    "' (expected acoustics2d, acoustics3d, shallow_water2d or advection1d)");
}

std::string_view problem_name(Problem p) {
  switch (p) {
    case Problem::acoustics2d: return "acoustics2d";
    case Problem::acoustics3d: return "acoustics3d";
    case Problem::shallow_water2d: return "shallow_water2d";
    case Problem::advection1d: return "advection1d";
  }
  return "";
}

int problem_ndim(Problem p) {
  switch (p) {
    case Problem::acoustics2d: return 2;
    case Problem::acoustics3d: return 3;
    case Problem::shallow_water2d: return 2;
    case Problem::advection1d: return 1;
  }
  return 0;
}

int problem_num_states(Problem p) {
  return p == Problem::advection1d ? 1 : 1 + problem_ndim(p);
}

int problem_normal_velocity(Problem p, int axis) {
  return p == Problem::advection1d ? -1 : 1 + axis;
}

Precision parse_precision(std::string_view name) {
  if (name == "double") return Precision::dbl;
  if (name == "single" || name == "float") return Precision::single;
  throw ConfigError("numerics.precision: expected single or double, got '" +
                    std::string(name) + "'");
}

std::string_view precision_name(Precision p) { return p == Precision::single ? "single" : "double"; }

double InitialSpec::scalar(const std::string& key, double fallback) const {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  if (it->second.size() != 1) throw ConfigError("initial." + key + ": expected one number");
  return it->second.front();
}

std::vector<double> InitialSpec::vector(const std::string& key, std::vector<double> fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

std::vector<double> RunConfig::output_times() const {
  std::vector<double> times;
  if (!frame_times.empty()) {
    for (double t : frame_times)
      if (t > 0.0 && t < t_end) times.push_back(t);
  } else {
    for (int f = 1; f < num_frames; ++f) times.push_back(t_end * f / num_frames);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  times.push_back(t_end);
  return times;
}

void RunConfig::validate() const {
  const int ndim = problem_ndim(problem);
  if (grid.ndim != ndim)
    throw ConfigError("grid.cells: " + std::string(problem_name(problem)) + " needs " +
                      std::to_string(ndim) + " cell counts");
  if (grid.num_states != problem_num_states(problem))
    throw ConfigError("problem.name: state count mismatch");
  try {
    grid.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("grid: ") + e.what());
  }
  try {
    acoustics.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("physics: ") + e.what());
  }
  try {
    shallow_water.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("physics.gravity: ") + e.what());
  }
  for (double v : advection_velocity)
    if (!std::isfinite(v)) throw ConfigError("physics.velocity: must be finite");
  boundary.validate(grid);
  if (!(cfl_target > 0.0) || !(cfl_target <= cfl_max))
    throw ConfigError("numerics.cfl_target: need 0 < cfl_target <= cfl_max");
  if (!(cfl_max <= 1.0)) throw ConfigError("numerics.cfl_max: must be <= 1");
  if (!(dt_cap > 0.0)) throw ConfigError("numerics.dt_cap: must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("output.t_end: must be >= 0");
  if (num_frames < 1) throw ConfigError("output.num_frames: must be >= 1");
  for (double t : frame_times)
    if (!std::isfinite(t) || t < 0.0) throw ConfigError("output.frame_times: must be >= 0");
  if (workers < 1) throw ConfigError("parallel.workers: must be >= 1");
  if (tiles)
    for (int a = 0; a < ndim; ++a)
      if ((*tiles)[a] < 1) throw ConfigError("parallel.tiles: extents must be positive");
  try {
    machine.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("perf: ") + e.what());
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

[[noreturn]] void fail(const ConfigEntry& e, const std::string& msg) {
  std::string where = e.line > 0 ? "line " + std::to_string(e.line) + ": " : "";
  throw ConfigError(where + e.key + ": " + msg);
}

double to_double(const ConfigEntry& e, const std::string& tok) {
  double v = 0.0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) fail(e, "'" + tok + "' is not a number");
  return v;
}

std::vector<double> numbers(const ConfigEntry& e) {
  std::vector<double> out;
  for (const auto& tok : split_list(e.value)) out.push_back(to_double(e, tok));
  if (out.empty()) fail(e, "expected at least one number");
  return out;
}

double number(const ConfigEntry& e) {
  auto v = numbers(e);
  if (v.size() != 1) fail(e, "expected one number");
  return v.front();
}

int integer(const ConfigEntry& e) {
  const double v = number(e);
  if (v != std::floor(v) || std::abs(v) > 1e9) fail(e, "expected an integer");
  return static_cast<int>(v);
}

bool boolean(const ConfigEntry& e) {
  const auto v = trim(e.value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  fail(e, "expected true or false");
}

const std::set<std::string> kInitialKeys = {"kind",   "center",  "width",    "amplitude",
                                            "state",  "h_left",  "h_right",  "position",
                                            "wavenumber", "background", "phase"};

}  // namespace

Coords parse_tile_shape(std::string_view text) {
  Coords shape{1, 1, 1};
  int axis = 0;
  std::size_t start = 0;
  const std::string s(trim(text));
  while (true) {
    const std::size_t pos = s.find('x', start);
    const std::string tok = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 1 || axis >= kMaxDims)
      throw ConfigError("tiles: expected a shape like 64x4, got '" + s + "'");
    shape[axis++] = v;
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return shape;
}

std::vector<ConfigEntry> parse_config_text(std::string_view text) {
  std::vector<ConfigEntry> entries;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section.empty())
        throw ConfigError("line " + std::to_string(line_no) + ": empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": missing key");
    if (section.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": key '" + key +
                        "' appears before any [section]");
    entries.push_back({section + "." + key, std::string(trim(line.substr(eq + 1))), line_no});
  }
  return entries;
}

RunConfig config_from_entries(const std::vector<ConfigEntry>& entries) {
  RunConfig cfg;
  std::set<std::string> seen;
  const ConfigEntry* name = nullptr;
  for (const auto& e : entries) {
    if (!seen.insert(e.key).second) fail(e, "duplicate key");
    if (e.key == "problem.name") name = &e;
  }
  if (!name) throw ConfigError("problem.name: missing (required)");
  cfg.problem = parse_problem(trim(name->value));
  const int ndim = problem_ndim(cfg.problem);
  cfg.grid.ndim = ndim;
  cfg.grid.num_states = problem_num_states(cfg.problem);
  for (int a = 0; a < kMaxDims; ++a) {
    cfg.grid.cells[a] = a < ndim ? 100 : 1;
    cfg.grid.lower[a] = 0.0;
    cfg.grid.upper[a] = 1.0;
  }
  bool have_cells = false;
  std::array<bool, 2 * kMaxDims> edge_set{};
  std::optional<BoundaryKind> all_edges;

  auto per_axis = [&](const ConfigEntry& e) {
    auto v = numbers(e);
    if (static_cast<int>(v.size()) != ndim)
      fail(e, "expected " + std::to_string(ndim) + " values for " +
                  std::string(problem_name(cfg.problem)));
    return v;
  };

  static const char* kEdges[] = {"x_lower", "x_upper", "y_lower", "y_upper", "z_lower", "z_upper"};

  for (const auto& e : entries) {
    const auto& k = e.key;
    if (k == "problem.name") continue;
    if (k == "grid.cells") {
      auto v = per_axis(e);
      for (int a = 0; a < ndim; ++a) {
        if (v[a] != std::floor(v[a]) || v[a] < 1) fail(e, "cell counts must be positive integers");
        cfg.grid.cells[a] = static_cast<int>(v[a]);
      }
      have_cells = true;
    } else if (k == "grid.lower") {
      auto v = per_axis(e);
      std::copy(v.begin(), v.end(), cfg.grid.lower.begin());
    } else if (k == "grid.upper") {
      auto v = per_axis(e);
      std::copy(v.begin(), v.end(), cfg.grid.upper.begin());
    } else if (k == "physics.sound_speed") {
      cfg.acoustics.sound_speed = number(e);
    } else if (k == "physics.impedance") {
      cfg.acoustics.impedance = number(e);
    } else if (k == "physics.gravity") {
      cfg.shallow_water.gravity = number(e);
    } else if (k == "physics.velocity") {
      auto v = per_axis(e);
      std::copy(v.begin(), v.end(), cfg.advection_velocity.begin());
    } else if (k.starts_with("initial.")) {
      const std::string sub = k.substr(8);
      if (!kInitialKeys.count(sub)) fail(e, "unknown key");
      if (sub == "kind")
        cfg.initial.kind = std::string(trim(e.value));
      else
        cfg.initial.values[sub] = numbers(e);
    } else if (k.starts_with("boundary.")) {
      const std::string sub = k.substr(9);
      BoundaryKind kind;
      try {
        kind = parse_boundary(trim(e.value));
      } catch (const ConfigError& err) {
        fail(e, err.what());
      }
      if (sub == "all") {
        all_edges = kind;
        continue;
      }
      auto it = std::find(std::begin(kEdges), std::end(kEdges), sub);
      if (it == std::end(kEdges)) fail(e, "unknown key");
      const int idx = static_cast<int>(it - std::begin(kEdges));
      if (idx / 2 >= ndim) fail(e, "axis not present in this problem");
      cfg.boundary.edges[idx].kind = kind;
      edge_set[idx] = true;
    } else if (k == "numerics.limiter") {
      try {
        cfg.limiter = parse_limiter(trim(e.value));
      } catch (const InvalidArgument& err) {
        fail(e, err.what());
      }
    } else if (k == "numerics.cfl_target") {
      cfg.cfl_target = number(e);
    } else if (k == "numerics.cfl_max") {
      cfg.cfl_max = number(e);
    } else if (k == "numerics.dt_cap") {
      cfg.dt_cap = number(e);
    } else if (k == "numerics.precision") {
      cfg.precision = parse_precision(trim(e.value));
    } else if (k == "output.t_end") {
      cfg.t_end = number(e);
    } else if (k == "output.num_frames") {
      cfg.num_frames = integer(e);
    } else if (k == "output.frame_times") {
      cfg.frame_times = numbers(e);
    } else if (k == "output.directory") {
      cfg.output_dir = std::string(trim(e.value));
    } else if (k == "parallel.workers") {
      cfg.workers = integer(e);
    } else if (k == "parallel.tiles") {
      try {
        cfg.tiles = parse_tile_shape(e.value);
      } catch (const ConfigError& err) {
        fail(e, err.what());
      }
    } else if (k == "parallel.serial") {
      cfg.serial = boolean(e);
    } else if (k == "perf.counters") {
      cfg.counters = boolean(e);
    } else if (k == "perf.peak_flops") {
      cfg.machine.peak_flops = number(e);
    } else if (k == "perf.peak_bandwidth") {
      cfg.machine.peak_bandwidth = number(e);
    } else if (k == "perf.special_function_peak") {
      cfg.machine.special_function_peak = number(e);
    } else {
      fail(e, "unknown key");
    }
  }
  if (!have_cells) throw ConfigError("grid.cells: missing (required)");

  for (int idx = 0; idx < 2 * ndim; ++idx) {
    if (all_edges && !edge_set[idx]) cfg.boundary.edges[idx].kind = *all_edges;
    cfg.boundary.edges[idx].velocity_component = problem_normal_velocity(cfg.problem, idx / 2);
  }
  if (cfg.initial.kind.empty())
    cfg.initial.kind = cfg.problem == Problem::shallow_water2d ? "dam_break"
                       : cfg.problem == Problem::advection1d   ? "sine"
                                                               : "gaussian";
  cfg.validate();
  return cfg;
}

RunConfig load_config_string(std::string_view text) {
  return config_from_entries(parse_config_text(text));
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_config_string(ss.str());
}

std::string to_config_text(const RunConfig& c) {
  std::ostringstream os;
  os << std::setprecision(17);
  const int ndim = c.grid.ndim;
  auto list = [&](auto&& arr, int n) {
    std::string s;
    for (int a = 0; a < n; ++a) {
      std::ostringstream v;
      v << std::setprecision(17) << arr[a];
      s += (a ? " " : "") + v.str();
    }
    return s;
  };
  os << "[problem]\nname = " << problem_name(c.problem) << "\n\n[grid]\n"
     << "cells = " << list(c.grid.cells, ndim) << "\nlower = " << list(c.grid.lower, ndim)
     << "\nupper = " << list(c.grid.upper, ndim) << "\n\n[physics]\n"
     << "sound_speed = " << c.acoustics.sound_speed << "\nimpedance = " << c.acoustics.impedance
     << "\ngravity = " << c.shallow_water.gravity
     << "\nvelocity = " << list(c.advection_velocity, ndim) << "\n\n[initial]\n"
     << "kind = " << c.initial.kind << '\n';
  for (const auto& [k, v] : c.initial.values)
    os << k << " = " << list(v, static_cast<int>(v.size())) << '\n';
  os << "\n[boundary]\n";
  static const char* kEdges[] = {"x_lower", "x_upper", "y_lower", "y_upper", "z_lower", "z_upper"};
  for (int i = 0; i < 2 * ndim; ++i)
    os << kEdges[i] << " = " << boundary_name(c.boundary.edges[i].kind) << '\n';
  os << "\n[numerics]\nlimiter = " << limiter_name(c.limiter) << "\ncfl_target = " << c.cfl_target
     << "\ncfl_max = " << c.cfl_max << '\n';
  if (std::isfinite(c.dt_cap)) os << "dt_cap = " << c.dt_cap << '\n';
  os << "precision = " << precision_name(c.precision) << "\n\n[output]\nt_end = " << c.t_end
     << "\nnum_frames = " << c.num_frames << '\n';
  if (!c.frame_times.empty())
    os << "frame_times = " << list(c.frame_times, static_cast<int>(c.frame_times.size())) << '\n';
  os << "directory = " << c.output_dir << "\n\n[parallel]\nworkers = " << c.workers << '\n';
  if (c.tiles) os << "tiles = " << (*c.tiles)[0] << 'x' << (*c.tiles)[1] << 'x' << (*c.tiles)[2] << '\n';
  os << "serial = " << (c.serial ? "true" : "false") << "\n\n[perf]\ncounters = "
     << (c.counters ? "true" : "false") << "\npeak_flops = " << c.machine.peak_flops
     << "\npeak_bandwidth = " << c.machine.peak_bandwidth
     << "\nspecial_function_peak = " << c.machine.special_function_peak << '\n';
  return os.str();
}

}  // namespace clawtile
