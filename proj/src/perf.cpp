#include "clawtile/perf.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "clawtile/errors.hpp"
#include "clawtile/sweep.hpp"

namespace clawtile {

void MachineModel::validate() const {
  if (!(peak_flops > 0.0) || !(peak_bandwidth > 0.0))
    throw InvalidArgument("machine model: peaks must be positive");
  if (special_function_peak < 0.0)
    throw InvalidArgument("machine model: special_function_peak must be >= 0");
}

double operational_intensity(std::span<const KernelCounters> kernels) {
  double flops = 0.0, bytes = 0.0;
  for (const auto& k : kernels) {
    if (k.flops < 0.0 || k.bytes < 0.0)
      throw InvalidArgument("operational_intensity: negative counter");
    flops += k.flops;
    bytes += k.bytes;
  }
  if (!(bytes > 0.0)) throw InvalidArgument("operational_intensity: zero bytes");
  return flops / bytes;
}

double operational_intensity_mflops_mib(std::span<const double> mflops,
                                        std::span<const double> mib) {
  if (mflops.size() != mib.size())
    throw InvalidArgument("operational_intensity: column lengths differ");
  std::vector<KernelCounters> k(mflops.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    k[i].flops = mflops[i] * 1e6;
    k[i].bytes = mib[i] * kMiB;
  }
  return operational_intensity(k);
}

double roofline_bound(double oi, const MachineModel& m) {
  m.validate();
  if (oi < 0.0 || std::isnan(oi)) throw InvalidArgument("roofline_bound: negative intensity");
  return std::min(m.peak_flops, oi * m.peak_bandwidth);
}

KernelCounters full_kernel(const SweepCounters& c) {
  return {static_cast<double>(c.flops()), static_cast<double>(c.special()),
          static_cast<double>(c.bytes())};
}

KernelCounters riemann_stage(const SweepCounters& c) {
  return {static_cast<double>(c.riemann_flops + c.update_flops),
          static_cast<double>(c.riemann_special), static_cast<double>(c.bytes())};
}

const PerfRow* PerfReport::find(const std::string& kernel, const std::string& stage) const {
  for (const auto& r : rows)
    if (r.kernel == kernel && r.stage == stage) return &r;
  return nullptr;
}

PerfReport build_report(std::span<const SweepCounters> per_axis, const MachineModel& m) {
  static constexpr const char* kAxis[] = {"x", "y", "z"};
  PerfReport report;
  report.collected = true;
  for (const char* stage : {"riemann", "full"}) {
    const bool full = stage[0] == 'f';
    std::vector<KernelCounters> parts;
    for (std::size_t a = 0; a < per_axis.size(); ++a) {
      PerfRow row;
      row.kernel = kAxis[a];
      row.stage = stage;
      row.counters = full ? full_kernel(per_axis[a]) : riemann_stage(per_axis[a]);
      if (row.counters.bytes > 0.0) {
        row.oi = operational_intensity(std::span(&row.counters, 1));
        row.bound = roofline_bound(row.oi, m);
      }
      parts.push_back(row.counters);
      report.rows.push_back(row);
    }
    PerfRow all;
    all.kernel = "all";
    all.stage = stage;
    for (const auto& k : parts) {
      all.counters.flops += k.flops;
      all.counters.special += k.special;
      all.counters.bytes += k.bytes;
    }
    if (all.counters.bytes > 0.0) {
      all.oi = operational_intensity(parts);
      all.bound = roofline_bound(all.oi, m);
    }
    report.rows.push_back(all);
  }
  return report;
}

void PerfReport::print(std::ostream& os) const {
  if (!collected) {
    os << "performance counters: not collected (run with --counters)\n";
    return;
  }
  os << std::left << std::setw(8) << "kernel" << std::setw(9) << "stage" << std::right
     << std::setw(14) << "MFlops" << std::setw(12) << "special%" << std::setw(14) << "MiB"
     << std::setw(10) << "OI" << std::setw(14) << "bound GF/s" << '\n';
  for (const auto& r : rows) {
    const double special_pct =
        r.counters.flops > 0.0 ? 100.0 * r.counters.special / r.counters.flops : 0.0;
    os << std::left << std::setw(8) << r.kernel << std::setw(9) << r.stage << std::right
       << std::fixed << std::setprecision(3) << std::setw(14) << r.counters.flops / 1e6
       << std::setprecision(1) << std::setw(12) << special_pct << std::setprecision(3)
       << std::setw(14) << r.counters.bytes / kMiB << std::setw(10) << r.oi
       << std::setprecision(2) << std::setw(14) << r.bound / 1e9 << '\n';
  }
  os.unsetf(std::ios::floatfield);
}

void PerfReport::write_csv(std::ostream& os, char d) const {
  os << "kernel" << d << "stage" << d << "flops" << d << "special" << d << "bytes" << d << "oi"
     << d << "bound_flops_per_s\n";
  if (!collected) {
    os << "# not collected\n";
    return;
  }
  os << std::setprecision(17);
  for (const auto& r : rows)
    os << r.kernel << d << r.stage << d << r.counters.flops << d << r.counters.special << d
       << r.counters.bytes << d << r.oi << d << r.bound << '\n';
}

}  // namespace clawtile
