#pragma once

#include <cstddef>
#include <vector>

#include "dspath/path.hpp"

namespace dspath {

/// Conflict at or above this value is treated as total conflict.
inline constexpr double kTotalConflictThreshold = 1.0 - 1e-12;

inline bool is_total_conflict(double k) { return k >= kTotalConflictThreshold; }

struct PathBelief {
  CompletePath path;
  double support_unnormalized = 0.0;
  double support = 0.0;
  double plausibility_unnormalized = 0.0;
  double plausibility = 0.0;
};

/// Support and plausibility for every complete path of an n-vertex graph,
/// indexed by path mask, together with the conflict k.
struct BeliefReport {
  std::size_t vertex_count = 0;
  double conflict = 0.0;
  std::vector<PathBelief> paths;

  const PathBelief& at(VertexMask mask) const { return paths.at(mask); }
};

/// Fills the normalized fields of `belief` from the unnormalized ones.
/// Throws TotalConflictError when k is total.
void normalize(PathBelief& belief, double conflict);

}  // namespace dspath
