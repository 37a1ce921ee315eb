#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace clawtile {

struct SweepCounters;

inline constexpr double kMiB = 1024.0 * 1024.0;

/// Flops and modeled global traffic of one kernel. `special` (sqrt,
/// division) is a subset of `flops`.
struct KernelCounters {
  double flops = 0.0;
  double special = 0.0;
  double bytes = 0.0;
};

struct MachineModel {
  double peak_flops = 515e9;      // per second
  double peak_bandwidth = 144e9;  // bytes per second
  double special_function_peak = 0.0;  // optional, 0 when unknown

  void validate() const;
};

/// Sum of flops over sum of bytes. Throws InvalidArgument when the byte
/// total is not positive.
double operational_intensity(std::span<const KernelCounters> kernels);

/// Fixture helper: per-kernel MFlops (1e6) and memory in MiB.
double operational_intensity_mflops_mib(std::span<const double> mflops,
                                        std::span<const double> mib);

/// min(peak_flops, oi * peak_bandwidth).
double roofline_bound(double oi, const MachineModel& m);

struct PerfRow {
  std::string kernel;  // "x", "y", "z" or "all"
  std::string stage;   // "riemann" or "full"
  KernelCounters counters;
  double oi = 0.0;
  double bound = 0.0;
};

struct PerfReport {
  bool collected = false;
  std::vector<PerfRow> rows;

  const PerfRow* find(const std::string& kernel, const std::string& stage) const;
  void print(std::ostream& os) const;
  /// Delimiter-separated rows with a header line.
  void write_csv(std::ostream& os, char delimiter = ',') const;
};

/// Rows per axis and stage plus a weighted "all" row per stage. The Riemann
/// stage counts the solves and the cell update against the same traffic.
PerfReport build_report(std::span<const SweepCounters> per_axis, const MachineModel& m);

KernelCounters full_kernel(const SweepCounters& c);
KernelCounters riemann_stage(const SweepCounters& c);

}  // namespace clawtile
