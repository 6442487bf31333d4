#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypgeo {

enum class Execution { Serial, Parallel };

/// Running max/min of one metric over a sweep. NaN samples are skipped.
/// Ties keep the lowest sample index, so the merged result does not depend on
/// how indices were split across threads.
struct MetricStats {
  std::size_t count = 0;
  double max = -std::numeric_limits<double>::infinity();
  std::size_t argmax = 0;
  double min = std::numeric_limits<double>::infinity();
  std::size_t argmin = 0;
  std::size_t positive = 0;  // samples with value > 0

  void add(double value, std::size_t index);
  void merge(const MetricStats& other);
};

/// Evaluates f(i, out) for i in [0, n); f writes one value per metric into out.
using SweepKernel = std::function<void(std::size_t, std::span<double>)>;
std::vector<MetricStats> sweep(std::size_t n, std::size_t metrics, const SweepKernel& f, Execution exec);

/// One checked quantity: passes when every sample lies in [lower, upper].
struct Check {
  std::string label;
  MetricStats stats;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  bool asserted = true;  // false: reported only

  bool passed() const;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Overrides the number of random pairs per sweep; 0 keeps the defaults.
  /// The quadrature and Apollonian oracles never exceed their default of 100.
  std::size_t samples = 0;
  Execution execution = Execution::Parallel;
};

/// Suite names: golden, quadrature, midpoint, orthogonality, apollonian,
/// bounds, chord, mobius, remark, all.
std::span<const std::string_view> suite_names();
std::vector<CriterionResult> run_suite(std::string_view name, const VerifyOptions& opts);

/// Fixed-format text report; byte-identical for identical results.
std::string format_report(const std::vector<CriterionResult>& results);

}  // namespace hypgeo
