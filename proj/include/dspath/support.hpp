#pragma once

#include <cstddef>

#include "dspath/belief.hpp"
#include "dspath/conflict.hpp"
#include "dspath/graph.hpp"
#include "dspath/path.hpp"

namespace dspath {

/// Unnormalized plausibility: the mass not committed against the path, i.e.
/// prod over skipped vertices of (1 - p) times prod over consecutive path
/// vertices of (1 - q). Linear time.
double pls_star(const EvidenceGraph& g, const CompletePath& path);

/// Unnormalized support: the mass the combined evidence commits to exactly
/// this path.
///
/// The first and last vertex must be stated (p), every skipped vertex must
/// not be (1 - p), all edges into the first vertex and out of the last are
/// blocked, and consecutive path edges are open. Internal path vertices are
/// enumerated as stated or not stated. Between two consecutive stated
/// vertices a and b the path segment must be the only open route from a to
/// b: edges skipping path vertices are blocked, and every non-path vertex in
/// the segment is either unreachable (all edges into it from reachable
/// vertices blocked) or reachable with every edge onward to the segment's
/// path vertices blocked.
///
/// Cost is O(n * 2^I) for I internal path vertices plus, per segment,
/// O(n * 2^N) for N non-path vertices inside it. The empty path has support 0.
double spt_star(const EvidenceGraph& g, const CompletePath& path);

/// Normalized values. Throw TotalConflictError on total conflict.
double support(const EvidenceGraph& g, const CompletePath& path);
double support(const EvidenceGraph& g, const CompletePath& path, const ConflictTable& table);
double plausibility(const EvidenceGraph& g, const CompletePath& path);
double plausibility(const EvidenceGraph& g, const CompletePath& path, const ConflictTable& table);

/// All four values for one path.
PathBelief evaluate_path(const EvidenceGraph& g, const CompletePath& path, const ConflictTable& table);

/// Largest n for which whole-frame evaluation is attempted by default.
inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// Evaluates every path of the frame.
BeliefReport fast_report(const EvidenceGraph& g, std::size_t max_vertices = kDefaultEnumerationCap);

}  // namespace dspath
