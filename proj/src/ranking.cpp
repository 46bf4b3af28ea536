#include "dspath/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dspath/error.hpp"

namespace dspath {
namespace {

// Rounding can put a computed support a few ulps above the computed
// plausibility bound; stop only when the bound is clearly beaten.
constexpr double kBoundSlack = 1e-9;

}  // namespace

bool ranks_before(const PathBelief& a, const PathBelief& b) {
  if (a.support != b.support) return a.support > b.support;
  if (a.plausibility != b.plausibility) return a.plausibility > b.plausibility;
  return a.path.bits() < b.path.bits();
}

Ranking rank_paths(const EvidenceGraph& g, const RankOptions& options) {
  const std::size_t n = g.size();
  if (n > options.max_vertices) {
    throw InputError("ranking enumerates all 2^n paths and is capped at " + std::to_string(options.max_vertices) +
                     " vertices; use single-path queries instead");
  }
  const ConflictTable table = conflict(g);
  if (table.is_total()) throw TotalConflictError();

  Ranking ranking;
  ranking.conflict = table.total;
  const VertexMask frame = VertexMask{1} << n;

  if (!options.top) {
    ranking.paths.reserve(frame);
    for (VertexMask mask = 0; mask < frame; ++mask) {
      ranking.paths.push_back(evaluate_path(g, CompletePath(n, mask), table));
    }
    std::sort(ranking.paths.begin(), ranking.paths.end(), ranks_before);
    return ranking;
  }

  const std::size_t top = std::min<std::size_t>(*options.top, frame);
  if (top == 0) return ranking;

  std::vector<double> bound(frame);
  for (VertexMask mask = 0; mask < frame; ++mask) bound[mask] = pls_star(g, CompletePath(n, mask));
  std::vector<VertexMask> order(frame);
  std::iota(order.begin(), order.end(), VertexMask{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexMask a, VertexMask b) { return bound[a] > bound[b]; });

  // `best` holds the current top entries as a heap whose front is the worst.
  std::vector<PathBelief> best;
  for (VertexMask mask : order) {
    if (best.size() == top && best.front().support_unnormalized > bound[mask] * (1.0 + kBoundSlack)) break;
    PathBelief belief = evaluate_path(g, CompletePath(n, mask), table);
    if (best.size() < top) {
      best.push_back(belief);
      std::push_heap(best.begin(), best.end(), ranks_before);
    } else if (ranks_before(belief, best.front())) {
      std::pop_heap(best.begin(), best.end(), ranks_before);
      best.back() = belief;
      std::push_heap(best.begin(), best.end(), ranks_before);
    }
  }
  std::sort(best.begin(), best.end(), ranks_before);
  ranking.paths = std::move(best);
  return ranking;
}

}  // namespace dspath
