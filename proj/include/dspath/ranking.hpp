#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dspath/belief.hpp"
#include "dspath/graph.hpp"
#include "dspath/support.hpp"

namespace dspath {

struct RankOptions {
  /// Keep only the best `top` paths; all paths when unset.
  std::optional<std::size_t> top;
  std::size_t max_vertices = kDefaultEnumerationCap;
};

struct Ranking {
  double conflict = 0.0;
  std::vector<PathBelief> paths;
};

/// Total order used for ranking: support descending, then plausibility
/// descending, then path mask ascending.
bool ranks_before(const PathBelief& a, const PathBelief& b);

/// Ranks the complete paths of the frame.
///
/// With `top` set, paths are visited in decreasing order of unnormalized
/// plausibility, an upper bound on their support, and evaluation stops once
/// no remaining path can displace the current top entries. The result is
/// always a prefix of the full ranking.
Ranking rank_paths(const EvidenceGraph& g, const RankOptions& options = {});

}  // namespace dspath
