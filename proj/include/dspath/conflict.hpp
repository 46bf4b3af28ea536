#pragma once

#include <cstddef>
#include <vector>

#include "dspath/graph.hpp"

namespace dspath {

/// Conflict of the full combination, split into the contribution k_ij that
/// each edge evidence adds when evidences are brought in the order
/// e_1, e_2, e_12, e_3, e_23, e_13, e_4, ...
struct ConflictTable {
  std::size_t vertex_count = 0;
  /// k_ij packed like EvidenceGraph::edge_doubts().
  std::vector<double> contributions;
  double total = 0.0;
  /// p_i after the rescaling used for windows that start at vertex i: the
  /// mass of "e_i holds and vertices 1..i are not yet in conflict".
  std::vector<double> rescaled_p;

  double contribution(std::size_t i, std::size_t j) const;
  bool is_total() const;
};

/// k_1j comes from the unnormalized support of the j-vertex prefix path that
/// visits only its endpoints, evaluated without e_1j and multiplied by q_1j.
/// k_ij for i > 1 is the same computation on the window i..j, with p_i
/// replaced by its rescaled value. q_ij = 1 is accepted: no division occurs.
ConflictTable conflict(const EvidenceGraph& g);

}  // namespace dspath
