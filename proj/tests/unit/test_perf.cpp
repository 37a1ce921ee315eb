#include <doctest.h>

#include <sstream>
#include <vector>

#include "clawtile/errors.hpp"
#include "clawtile/perf.hpp"
#include "clawtile/sweep.hpp"

using namespace clawtile;

TEST_CASE("operational intensity of table columns") {
  // MFlops over MiB, per kernel then summed
  const std::vector<double> mflops{103, 118}, mib{35.1, 41.4};
  const double expected = (103 + 118) * 1e6 / ((35.1 + 41.4) * 1024.0 * 1024.0);
  CHECK(operational_intensity_mflops_mib(mflops, mib) == doctest::Approx(expected));
  CHECK(operational_intensity_mflops_mib(mflops, mib) == doctest::Approx(2.77).epsilon(0.01));
  const std::vector<double> mf2{153, 175}, mb2{27.0, 37.0};
  CHECK(operational_intensity_mflops_mib(mf2, mb2) == doctest::Approx(4.90).epsilon(0.01));
  CHECK_THROWS_AS(operational_intensity_mflops_mib(mf2, std::vector<double>{1.0}), InvalidArgument);
}

TEST_CASE("operational intensity sums before dividing") {
  const std::vector<KernelCounters> k{{100, 0, 10}, {300, 0, 90}};
  CHECK(operational_intensity(k) == 4.0);
  const std::vector<KernelCounters> empty{{5, 0, 0}};
  CHECK_THROWS_AS(operational_intensity(empty), InvalidArgument);
}

TEST_CASE("roofline bound") {
  MachineModel m;
  m.peak_flops = 1000e9;
  m.peak_bandwidth = 100e9;
  CHECK(roofline_bound(2.0, m) == doctest::Approx(200e9));
  CHECK(roofline_bound(1e6, m) == 1000e9);
  CHECK(roofline_bound(0.0, m) == 0.0);
  CHECK(roofline_bound(10.0, m) == doctest::Approx(1000e9));
  CHECK_THROWS_AS(roofline_bound(-1.0, m), InvalidArgument);
  m.peak_bandwidth = 0;
  CHECK_THROWS_AS(roofline_bound(1.0, m), InvalidArgument);
}

TEST_CASE("report rows per axis and stage") {
  SweepCounters x, y;
  x.riemann_flops = 100;
  x.correction_flops = 300;
  x.update_flops = 20;
  x.bytes_read = 80;
  x.bytes_written = 40;
  y = x;
  y.bytes_read = 160;
  const std::vector<SweepCounters> axes{x, y};
  const PerfReport r = build_report(axes, MachineModel{});
  CHECK(r.collected);
  CHECK(r.rows.size() == 6);
  CHECK(r.find("x", "full")->oi == doctest::Approx(420.0 / 120.0));
  CHECK(r.find("x", "riemann")->oi == doctest::Approx(120.0 / 120.0));
  CHECK(r.find("all", "full")->oi == doctest::Approx(840.0 / 320.0));
  CHECK(r.find("z", "full") == nullptr);
  std::ostringstream table, csv;
  r.print(table);
  r.write_csv(csv);
  CHECK(table.str().find("riemann") != std::string::npos);
  CHECK(csv.str().rfind("kernel,stage,flops", 0) == 0);
}

TEST_CASE("uncollected report says so") {
  std::ostringstream os;
  PerfReport{}.print(os);
  CHECK(os.str().find("not collected") != std::string::npos);
}
