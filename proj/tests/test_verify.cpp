#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <string>

#include "hypgeo/error.hpp"
#include "hypgeo/random.hpp"
#include "hypgeo/verify.hpp"

namespace hypgeo {
namespace {

TEST(MetricStats, TracksExtremesAndSkipsNaN) {
  MetricStats s;
  s.add(0.5, 0);
  s.add(std::numeric_limits<double>::quiet_NaN(), 1);
  s.add(-2.0, 2);
  s.add(3.0, 3);
  EXPECT_EQ(s.count, 3u);
  EXPECT_EQ(s.max, 3.0);
  EXPECT_EQ(s.argmax, 3u);
  EXPECT_EQ(s.min, -2.0);
  EXPECT_EQ(s.argmin, 2u);
  EXPECT_EQ(s.positive, 2u);
}

TEST(MetricStats, MergeKeepsLowestIndexOnTies) {
  MetricStats a, b;
  a.add(1.0, 7);
  b.add(1.0, 4);
  MetricStats ab = a, ba = b;
  ab.merge(b);
  ba.merge(a);
  EXPECT_EQ(ab.argmax, 4u);
  EXPECT_EQ(ba.argmax, 4u);
  EXPECT_EQ(ab.argmin, 4u);
  EXPECT_EQ(ab.count, 2u);
  MetricStats empty;
  empty.merge(a);
  EXPECT_EQ(empty.max, 1.0);
  EXPECT_EQ(empty.argmax, 7u);
}

TEST(Sweep, SerialAndParallelAgree) {
  const SweepKernel f = [](std::size_t i, std::span<double> out) {
    SplitMix64 rng = stream(99, i);
    out[0] = rng.uniform(-1.0, 1.0);
    out[1] = std::floor(rng.uniform(0.0, 4.0));  // many ties
  };
  const auto serial = sweep(50000, 2, f, Execution::Serial);
  const auto parallel = sweep(50000, 2, f, Execution::Parallel);
  ASSERT_EQ(serial.size(), 2u);
  for (std::size_t m = 0; m < 2; ++m) {
    EXPECT_EQ(serial[m].count, parallel[m].count);
    EXPECT_EQ(serial[m].max, parallel[m].max);
    EXPECT_EQ(serial[m].argmax, parallel[m].argmax);
    EXPECT_EQ(serial[m].min, parallel[m].min);
    EXPECT_EQ(serial[m].argmin, parallel[m].argmin);
    EXPECT_EQ(serial[m].positive, parallel[m].positive);
  }
}

TEST(Check, Bounds) {
  Check c;
  c.stats.add(0.5, 0);
  c.lower = 0.0;
  c.upper = 1.0;
  EXPECT_TRUE(c.passed());
  c.upper = 0.4;
  EXPECT_FALSE(c.passed());
  c.asserted = false;
  EXPECT_TRUE(c.passed());
}

TEST(RunSuite, UnknownSuite) {
  try {
    (void)run_suite("nonsense", {});
    ADD_FAILURE();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
}

TEST(RunSuite, EveryNamedSuiteRuns) {
  VerifyOptions opts;
  opts.samples = 200;
  for (std::string_view name : suite_names()) {
    if (name == "all") continue;
    SCOPED_TRACE(std::string(name));
    const auto results = run_suite(name, opts);
    ASSERT_FALSE(results.empty());
    for (const auto& r : results) {
      EXPECT_FALSE(r.title.empty());
      EXPECT_FALSE(r.checks.empty());
    }
  }
}

TEST(RunSuite, ReportIsIndependentOfExecution) {
  VerifyOptions serial;
  serial.samples = 3000;
  serial.seed = 7;
  serial.execution = Execution::Serial;
  VerifyOptions parallel = serial;
  parallel.execution = Execution::Parallel;
  for (std::string_view name : {"bounds", "midpoint", "mobius", "remark"}) {
    SCOPED_TRACE(std::string(name));
    EXPECT_EQ(format_report(run_suite(name, serial)), format_report(run_suite(name, parallel)));
  }
}

TEST(RunSuite, SeedChangesSamples) {
  VerifyOptions a;
  a.samples = 500;
  VerifyOptions b = a;
  b.seed = a.seed + 1;
  EXPECT_NE(format_report(run_suite("bounds", a)), format_report(run_suite("bounds", b)));
}

}  // namespace
}  // namespace hypgeo
