#include "dspath/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "dspath/error.hpp"
#include "dspath/support.hpp"
#include "dspath/verify.hpp"

namespace dspath {
namespace {

constexpr int kBatches = 5;

}  // namespace

BenchResult run_scaling_bench(std::size_t n_min, std::size_t n_max, std::uint64_t seed, double min_seconds) {
  if (n_min < 2 || n_min > n_max) throw InputError("bench needs 2 <= n-min <= n-max");
  if (n_max > 40) throw InputError("bench n-max above 40 would not finish");
  using clock = std::chrono::steady_clock;

  std::mt19937_64 rng(seed);
  BenchResult result;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const EvidenceGraph g = random_graph(n, rng);
    const CompletePath path(n, (VertexMask{1} << n) - 1);
    BenchSample sample{n};
    sample.value = spt_star(g, path);

    double best = INFINITY;
    for (int batch = 0; batch < kBatches; ++batch) {
      std::size_t calls = 0;
      double sink = 0.0;
      const auto start = clock::now();
      double elapsed = 0.0;
      do {
        sink += spt_star(g, path);
        ++calls;
        elapsed = std::chrono::duration<double>(clock::now() - start).count();
      } while (elapsed < min_seconds / kBatches);
      if (sink != sink) throw Error("benchmark produced NaN");
      best = std::min(best, elapsed / static_cast<double>(calls));
      sample.calls += calls;
    }
    sample.seconds_per_call = best;
    result.samples.push_back(sample);
  }
  result.slope = fit_log2_slope(result.samples);
  return result;
}

double fit_log2_slope(std::span<const BenchSample> samples) {
  if (samples.size() < 2) return 0.0;
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& s : samples) {
    mean_x += static_cast<double>(s.n);
    mean_y += std::log2(s.seconds_per_call);
  }
  mean_x /= static_cast<double>(samples.size());
  mean_y /= static_cast<double>(samples.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& s : samples) {
    const double dx = static_cast<double>(s.n) - mean_x;
    sxy += dx * (std::log2(s.seconds_per_call) - mean_y);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace dspath
