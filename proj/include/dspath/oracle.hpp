#pragma once

// Brute-force Dempster combination of every vertex and edge evidence over the
// explicit path frame. Exponential in the number of evidences; used as ground
// truth for the direct formulas in support.hpp.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dspath/belief.hpp"
#include "dspath/frame.hpp"
#include "dspath/graph.hpp"

namespace dspath {

inline constexpr std::size_t kDefaultOracleCap = 6;

/// A simple support function: `mass` on `focus`, the rest on the whole frame.
struct SimpleSupport {
  FrameSubset focus;
  double mass;
};

/// The n vertex evidences in vertex order, then the edge evidences in
/// lexicographic (i, j) order.
std::vector<SimpleSupport> graph_evidences(const EvidenceGraph& g);

/// Unnormalized basic probability assignment. Mass landing on the empty set
/// is kept apart as the conflict.
class MassTable {
 public:
  using Entry = std::pair<FrameSubset, double>;

  /// Merges duplicate keys and moves any empty-set mass into the conflict.
  MassTable(std::size_t n, std::vector<Entry> entries, double conflict_mass);

  static MassTable vacuous(std::size_t n);
  static MassTable from_simple_support(std::size_t n, const SimpleSupport& evidence);

  std::size_t vertex_count() const { return n_; }
  /// Sorted by key.
  std::span<const Entry> entries() const { return entries_; }
  double conflict_mass() const { return conflict_; }
  double total_mass() const;

  /// Mass committed exactly to `set` (0 when it is not focal).
  double mass_of(const FrameSubset& set) const;
  /// Sum of the masses of focal sets contained in `set`.
  double belief(const FrameSubset& set) const;
  /// Sum of the masses of focal sets meeting `set`.
  double plausibility(const FrameSubset& set) const;

 private:
  std::size_t n_;
  std::vector<Entry> entries_;
  double conflict_;
};

/// Unnormalized conjunctive combination of two tables over the same frame.
MassTable combine(const MassTable& a, const MassTable& b);

struct OracleOptions {
  std::size_t max_vertices = kDefaultOracleCap;
  /// Worker count for partitioning the expansion; 1 runs inline.
  unsigned threads = 1;
};

/// Expands the product of all evidences: every subset of evidences is either
/// activated (its focus, its mass) or not (the frame, one minus its mass).
MassTable oracle_combine(const EvidenceGraph& g, const OracleOptions& options = {});
MassTable oracle_combine(std::size_t n, std::span<const SimpleSupport> evidences,
                         const OracleOptions& options = {});

/// Support and plausibility of every complete path read off a combined table.
/// Throws TotalConflictError if all mass is conflict.
BeliefReport oracle_report(const MassTable& table);

}  // namespace dspath
