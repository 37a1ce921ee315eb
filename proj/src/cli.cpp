#include "clawtile/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "clawtile/config.hpp"
#include "clawtile/convergence.hpp"
#include "clawtile/errors.hpp"
#include "clawtile/frame.hpp"
#include "clawtile/log.hpp"
#include "clawtile/simulation.hpp"

namespace clawtile {

namespace {

namespace fs = std::filesystem;

struct Overrides {
  std::string config;
  std::string frames;
  int workers = 0;
  std::string tiles;
  bool serial = false;
  std::string precision;
  bool counters = false;
};

void add_overrides(CLI::App* app, Overrides& o, bool frames) {
  app->add_option("--config", o.config, "Run configuration file")->required();
  if (frames) app->add_option("--frames", o.frames, "Output directory for frames");
  app->add_option("--workers", o.workers, "Worker threads for tiled sweeps")
      ->check(CLI::PositiveNumber);
  app->add_option("--tiles", o.tiles, "Tile shape, e.g. 64x4");
  app->add_flag("--serial", o.serial, "Use the monolithic (untiled) sweep");
  app->add_option("--precision", o.precision, "single or double")
      ->check(CLI::IsMember({"single", "double"}));
  app->add_flag("--counters", o.counters, "Collect flop and traffic counters");
}

RunConfig resolve(const Overrides& o) {
  RunConfig cfg = load_config(o.config);
  if (!o.frames.empty()) cfg.output_dir = o.frames;
  if (o.workers > 0) cfg.workers = o.workers;
  if (!o.tiles.empty()) cfg.tiles = parse_tile_shape(o.tiles);
  if (o.serial) cfg.serial = true;
  if (!o.precision.empty()) cfg.precision = parse_precision(o.precision);
  if (o.counters) cfg.counters = true;
  cfg.validate();
  return cfg;
}

void print_summary(std::ostream& out, const Simulation& sim, const RunReport& r) {
  out << "steps " << r.steps << ", reverts " << r.reverts << ", frames " << r.frames
      << ", t = " << std::setprecision(10) << sim.run_state().t;
  if (r.steps > 0)
    out << ", cfl min/mean/max " << std::setprecision(4) << r.cfl_min << '/' << r.cfl_mean << '/'
        << r.cfl_max;
  out << '\n';
}

int cmd_run(const Overrides& o, std::ostream& out) {
  const RunConfig cfg = resolve(o);
  Simulation sim(cfg);
  sim.set_counting(cfg.counters);
  const fs::path dir = cfg.output_dir;
  fs::create_directories(dir);
  std::ofstream manifest(dir / "manifest.csv");
  if (!manifest) throw FrameError("cannot write manifest in '" + dir.string() + "'");
  manifest << "index,time,step\n" << std::setprecision(17);

  auto emit = [&](int index, double t, std::uint64_t step) {
    write_frame(sim.snapshot(), dir / frame_file_name(index));
    manifest << index << ',' << t << ',' << step << '\n';
  };
  emit(0, sim.run_state().t, 0);
  const auto times = cfg.output_times();
  const RunReport report = sim.run_until(cfg.t_end, times, emit);
  print_summary(out, sim, report);
  if (cfg.counters) sim.perf_report().print(out);
  return 0;
}

int cmd_perf(const Overrides& o, const std::string& csv, std::ostream& out) {
  RunConfig cfg = resolve(o);
  Simulation sim(cfg);
  sim.set_counting(true);
  const RunReport report = sim.run_until(cfg.t_end);
  print_summary(out, sim, report);
  const PerfReport perf = sim.perf_report();
  perf.print(out);
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) throw Error("cannot write '" + csv + "'");
    perf.write_csv(f);
  }
  return 0;
}

int cmd_convergence(const Overrides& o, int levels, std::ostream& out) {
  const RunConfig cfg = resolve(o);
  const ConvergenceStudy study = run_convergence(cfg, levels);
  auto cells = [&](const Coords& c) {
    std::string s;
    for (int a = 0; a < cfg.grid.ndim; ++a) s += (a ? "x" : "") + std::to_string(c[a]);
    return s;
  };
  out << "reference " << cells(study.finest) << '\n';
  out << std::left << std::setw(14) << "cells" << std::right << std::setw(16) << "L1 error"
      << std::setw(10) << "order" << '\n';
  for (const auto& lv : study.levels) {
    out << std::left << std::setw(14) << cells(lv.cells) << std::right << std::scientific
        << std::setprecision(6) << std::setw(16) << lv.l1_error << std::fixed
        << std::setprecision(3) << std::setw(10);
    if (std::isnan(lv.order))
      out << "-";
    else
      out << lv.order;
    out << '\n';
  }
  out << "fitted order " << std::fixed << std::setprecision(3) << study.fitted_order << '\n';
  return 0;
}

int cmd_dump(const std::string& path, const std::string& csv, char delimiter, std::ostream& out) {
  const Frame f = read_frame(path);
  const auto values = f.values();
  if (csv.empty()) {
    out << "frame " << path << "\n  version " << f.version << "\n  dims";
    for (auto d : f.dims) out << ' ' << d;
    out << "\n  states " << f.num_states << "\n  precision " << precision_name(f.precision)
        << "\n  time " << std::setprecision(17) << f.time << "\n  step " << f.step << '\n';
    const std::size_t n = f.cells();
    for (std::uint32_t s = 0; s < f.num_states; ++s) {
      double lo = values[s * n], hi = lo, sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double v = values[s * n + i];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
      }
      out << "  q" << s << ": min " << std::setprecision(10) << lo << " max " << hi << " sum "
          << sum << '\n';
    }
    return 0;
  }
  std::ofstream file;
  std::ostream* dst = &out;
  if (csv != "-") {
    file.open(csv);
    if (!file) throw Error("cannot write '" + csv + "'");
    dst = &file;
  }
  static constexpr const char* kIdx[] = {"i", "j", "k"};
  for (std::size_t a = 0; a < f.dims.size(); ++a) *dst << kIdx[a] << delimiter;
  for (std::uint32_t s = 0; s < f.num_states; ++s)
    *dst << 'q' << s << (s + 1 < f.num_states ? std::string(1, delimiter) : "\n");
  *dst << std::setprecision(17);
  const std::size_t n = f.cells();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t rest = c;
    for (std::size_t a = 0; a < f.dims.size(); ++a) {
      *dst << rest % f.dims[a] << delimiter;
      rest /= f.dims[a];
    }
    for (std::uint32_t s = 0; s < f.num_states; ++s)
      *dst << values[s * n + c] << (s + 1 < f.num_states ? std::string(1, delimiter) : "\n");
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  log::init_from_env();
  CLI::App app{"clawtile: tiled wave-propagation solver for hyperbolic conservation laws"};
  app.require_subcommand(1);

  Overrides run_o, perf_o, conv_o;
  std::string perf_csv, dump_path, dump_csv;
  std::string delimiter = ",";
  int levels = 4;

  auto* run = app.add_subcommand("run", "Run a configuration and write frames");
  add_overrides(run, run_o, true);
  auto* perf = app.add_subcommand("perf", "Run with counters and print the roofline report");
  add_overrides(perf, perf_o, false);
  perf->add_option("--csv", perf_csv, "Also write the report as delimiter-separated text");
  auto* conv = app.add_subcommand("convergence", "Refinement study against the finest level");
  add_overrides(conv, conv_o, false);
  conv->add_option("--levels", levels, "Number of grids, doubling each time")
      ->check(CLI::Range(3, 12));
  auto* dump = app.add_subcommand("dump", "Print a frame or convert it to text");
  dump->add_option("frame", dump_path, "Frame file")->required();
  dump->add_option("--csv", dump_csv, "Write cell values as text ('-' for stdout)");
  dump->add_option("--delimiter", delimiter, "Field delimiter for --csv");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();  // program name
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*run) return cmd_run(run_o, out);
    if (*perf) return cmd_perf(perf_o, perf_csv, out);
    if (*conv) return cmd_convergence(conv_o, levels, out);
    if (*dump) {
      if (delimiter.size() != 1) throw ConfigError("--delimiter must be a single character");
      return cmd_dump(dump_path, dump_csv, delimiter[0], out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace clawtile
