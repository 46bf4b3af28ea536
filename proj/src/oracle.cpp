#include "dspath/oracle.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <unordered_map>

#include "dspath/error.hpp"

namespace dspath {
namespace {

using Accumulator = std::unordered_map<FrameSubset, double, FrameSubsetHash>;

// Depth-first expansion of the activation tree. A node whose intersection is
// already empty sends its whole weight to the conflict: the weights of its
// subtree sum to the node weight.
class Expansion {
 public:
  explicit Expansion(std::span<const SimpleSupport> evidences)
      : evidences_(evidences), scratch_(evidences.size() + 1, FrameSubset::none(0)) {}

  void run(std::size_t depth, const FrameSubset& current, double weight) {
    if (weight == 0.0) return;
    if (current.is_empty()) {
      conflict_ += weight;
      return;
    }
    if (depth == evidences_.size()) {
      acc_[current] += weight;
      return;
    }
    const SimpleSupport& ev = evidences_[depth];
    FrameSubset& next = scratch_[depth + 1];
    next.assign_intersection(current, ev.focus);
    run(depth + 1, next, weight * ev.mass);
    run(depth + 1, current, weight * (1.0 - ev.mass));
  }

  Accumulator& accumulator() { return acc_; }
  double conflict() const { return conflict_; }

 private:
  std::span<const SimpleSupport> evidences_;
  std::vector<FrameSubset> scratch_;
  Accumulator acc_;
  double conflict_ = 0.0;
};

struct Partition {
  FrameSubset start;
  double weight;
};

std::size_t split_depth(unsigned threads, std::size_t evidence_count) {
  std::size_t depth = 0;
  while ((std::size_t{1} << depth) < 4 * static_cast<std::size_t>(threads)) ++depth;
  return std::min(depth, evidence_count);
}

}  // namespace

std::vector<SimpleSupport> graph_evidences(const EvidenceGraph& g) {
  std::vector<SimpleSupport> out;
  out.reserve(g.size() + g.edge_count());
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back({focus_of_vertex_evidence(g, i), g.p(i)});
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) out.push_back({focus_of_edge_evidence(g, i, j), g.q(i, j)});
  }
  return out;
}

MassTable::MassTable(std::size_t n, std::vector<Entry> entries, double conflict_mass)
    : n_(n), conflict_(conflict_mass) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [set, mass] : entries) {
    if (set.vertex_count() != n) throw InputError("mass table entry over a different frame");
    if (set.is_empty()) {
      conflict_ += mass;
    } else if (!entries_.empty() && entries_.back().first == set) {
      entries_.back().second += mass;
    } else {
      entries_.emplace_back(std::move(set), mass);
    }
  }
}

MassTable MassTable::vacuous(std::size_t n) { return MassTable(n, {{FrameSubset::all(n), 1.0}}, 0.0); }

MassTable MassTable::from_simple_support(std::size_t n, const SimpleSupport& evidence) {
  std::vector<Entry> entries;
  if (evidence.mass != 0.0) entries.emplace_back(evidence.focus, evidence.mass);
  if (evidence.mass != 1.0) entries.emplace_back(FrameSubset::all(n), 1.0 - evidence.mass);
  return MassTable(n, std::move(entries), 0.0);
}

double MassTable::total_mass() const {
  double total = conflict_;
  for (const auto& [set, mass] : entries_) total += mass;
  return total;
}

double MassTable::mass_of(const FrameSubset& set) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), set,
                             [](const Entry& e, const FrameSubset& key) { return e.first < key; });
  return (it != entries_.end() && it->first == set) ? it->second : 0.0;
}

double MassTable::belief(const FrameSubset& set) const {
  double total = 0.0;
  for (const auto& [focal, mass] : entries_) {
    if (focal.is_subset_of(set)) total += mass;
  }
  return total;
}

double MassTable::plausibility(const FrameSubset& set) const {
  double total = 0.0;
  for (const auto& [focal, mass] : entries_) {
    if (!(focal & set).is_empty()) total += mass;
  }
  return total;
}

MassTable combine(const MassTable& a, const MassTable& b) {
  if (a.vertex_count() != b.vertex_count()) throw InputError("cannot combine tables over different frames");
  Accumulator acc;
  // Empty set meets anything in the empty set.
  double conflict = a.conflict_mass() * b.total_mass() + a.total_mass() * b.conflict_mass() -
                    a.conflict_mass() * b.conflict_mass();
  for (const auto& [set_a, mass_a] : a.entries()) {
    for (const auto& [set_b, mass_b] : b.entries()) {
      FrameSubset meet = set_a & set_b;
      if (meet.is_empty()) {
        conflict += mass_a * mass_b;
      } else {
        acc[std::move(meet)] += mass_a * mass_b;
      }
    }
  }
  return MassTable(a.vertex_count(), {acc.begin(), acc.end()}, conflict);
}

MassTable oracle_combine(const EvidenceGraph& g, const OracleOptions& options) {
  if (g.size() > options.max_vertices) {
    throw OracleInfeasibleError("oracle infeasible: n = " + std::to_string(g.size()) + " exceeds the cap of " +
                                std::to_string(options.max_vertices) + " vertices");
  }
  const auto evidences = graph_evidences(g);
  return oracle_combine(g.size(), evidences, options);
}

MassTable oracle_combine(std::size_t n, std::span<const SimpleSupport> evidences, const OracleOptions& options) {
  if (n > options.max_vertices) {
    throw OracleInfeasibleError("oracle infeasible: n = " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(options.max_vertices) + " vertices");
  }
  for (const auto& ev : evidences) {
    if (ev.focus.vertex_count() != n) throw InputError("evidence focus over a different frame");
  }

  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    Expansion expansion(evidences);
    expansion.run(0, FrameSubset::all(n), 1.0);
    auto& acc = expansion.accumulator();
    return MassTable(n, {acc.begin(), acc.end()}, expansion.conflict());
  }

  // Enumerate the activation choices of the first `depth` evidences serially,
  // then expand each prefix independently.
  const std::size_t depth = split_depth(threads, evidences.size());
  std::vector<Partition> partitions{{FrameSubset::all(n), 1.0}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Partition> next;
    next.reserve(partitions.size() * 2);
    for (const auto& part : partitions) {
      next.push_back({part.start & evidences[d].focus, part.weight * evidences[d].mass});
      next.push_back({part.start, part.weight * (1.0 - evidences[d].mass)});
    }
    partitions = std::move(next);
  }

  const auto tail = evidences.subspan(depth);
  std::vector<std::future<Expansion>> results;
  results.reserve(partitions.size());
  for (const auto& part : partitions) {
    results.push_back(std::async(std::launch::async, [tail, &part] {
      Expansion expansion(tail);
      expansion.run(0, part.start, part.weight);
      return expansion;
    }));
  }

  Accumulator merged;
  double conflict = 0.0;
  for (auto& result : results) {
    Expansion expansion = result.get();
    conflict += expansion.conflict();
    for (auto& [set, mass] : expansion.accumulator()) merged[set] += mass;
  }
  return MassTable(n, {merged.begin(), merged.end()}, conflict);
}

BeliefReport oracle_report(const MassTable& table) {
  if (is_total_conflict(table.conflict_mass())) throw TotalConflictError();
  const std::size_t n = table.vertex_count();
  BeliefReport report;
  report.vertex_count = n;
  report.conflict = table.conflict_mass();
  report.paths.reserve(std::size_t{1} << n);
  for (VertexMask mask = 0; mask < (VertexMask{1} << n); ++mask) {
    PathBelief belief{CompletePath(n, mask)};
    FrameSubset singleton = FrameSubset::none(n);
    singleton.insert(mask);
    belief.support_unnormalized = table.mass_of(singleton);
    for (const auto& [set, mass] : table.entries()) {
      if (set.contains(mask)) belief.plausibility_unnormalized += mass;
    }
    normalize(belief, report.conflict);
    report.paths.push_back(belief);
  }
  return report;
}

}  // namespace dspath
