#include "dspath/verify.hpp"

#include <algorithm>
#include <cmath>

#include "dspath/support.hpp"

namespace dspath {

EvidenceGraph random_graph(std::size_t n, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> draw(lo, hi);
  std::vector<double> p(n);
  for (auto& x : p) x = draw(rng);
  std::vector<double> q(n * (n - 1) / 2);
  for (auto& x : q) x = draw(rng);
  return EvidenceGraph(std::move(p), std::move(q));
}

double Deviation::max() const {
  return std::max({conflict, support_unnormalized, support, plausibility_unnormalized, plausibility});
}

void Deviation::absorb(const Deviation& other) {
  conflict = std::max(conflict, other.conflict);
  support_unnormalized = std::max(support_unnormalized, other.support_unnormalized);
  support = std::max(support, other.support);
  plausibility_unnormalized = std::max(plausibility_unnormalized, other.plausibility_unnormalized);
  plausibility = std::max(plausibility, other.plausibility);
}

Deviation compare_with_oracle(const EvidenceGraph& g, const VerifyOptions& options) {
  const BeliefReport expected = oracle_report(oracle_combine(g, options.oracle));
  BeliefReport actual = fast_report(g, options.oracle.max_vertices);
  if (options.inject_fault != 0.0) {
    PathBelief& victim = actual.paths.back();
    victim.support_unnormalized += options.inject_fault;
    normalize(victim, actual.conflict);
  }

  Deviation d;
  d.conflict = std::abs(actual.conflict - expected.conflict);
  for (std::size_t mask = 0; mask < expected.paths.size(); ++mask) {
    const PathBelief& a = actual.paths[mask];
    const PathBelief& e = expected.paths[mask];
    d.support_unnormalized = std::max(d.support_unnormalized, std::abs(a.support_unnormalized - e.support_unnormalized));
    d.support = std::max(d.support, std::abs(a.support - e.support));
    d.plausibility_unnormalized =
        std::max(d.plausibility_unnormalized, std::abs(a.plausibility_unnormalized - e.plausibility_unnormalized));
    d.plausibility = std::max(d.plausibility, std::abs(a.plausibility - e.plausibility));
  }
  return d;
}

}  // namespace dspath
