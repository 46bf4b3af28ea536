#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "dspath/graph.hpp"
#include "dspath/oracle.hpp"

namespace dspath {

/// Independent draws of every p and q from uniform [lo, hi].
EvidenceGraph random_graph(std::size_t n, std::mt19937_64& rng, double lo = 0.05, double hi = 0.95);

struct Deviation {
  double conflict = 0.0;
  double support_unnormalized = 0.0;
  double support = 0.0;
  double plausibility_unnormalized = 0.0;
  double plausibility = 0.0;

  double max() const;
  void absorb(const Deviation& other);
};

struct VerifyOptions {
  OracleOptions oracle;
  /// Test hook: added to the fast unnormalized support of the all-vertex
  /// path before comparing, to prove that mismatches are caught.
  double inject_fault = 0.0;
};

/// Largest absolute differences between the direct formulas and the
/// brute-force combination, over k and all 2^n paths.
Deviation compare_with_oracle(const EvidenceGraph& g, const VerifyOptions& options = {});

}  // namespace dspath
