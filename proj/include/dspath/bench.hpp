#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dspath {

struct BenchSample {
  std::size_t n = 0;
  double seconds_per_call = 0.0;
  std::size_t calls = 0;
  /// spt_star of the timed path, so the work cannot be elided.
  double value = 0.0;
};

struct BenchResult {
  std::vector<BenchSample> samples;
  /// Least-squares slope of log2(seconds) against n.
  double slope = 0.0;
};

/// Times spt_star on the all-vertex path (every vertex internal except the
/// endpoints, the worst case for the statement enumeration) of a random
/// graph for each n in [n_min, n_max]. Each n is timed in several batches of
/// at least `min_seconds / 5`; the fastest batch's per-call time is kept.
BenchResult run_scaling_bench(std::size_t n_min, std::size_t n_max, std::uint64_t seed, double min_seconds = 0.1);

double fit_log2_slope(std::span<const BenchSample> samples);

}  // namespace dspath
