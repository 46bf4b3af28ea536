#include "dspath/support.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "dspath/error.hpp"

namespace dspath {
namespace {

// Slack allowed above 1 before a normalized value counts as a bug.
constexpr double kNormalizedSlack = 1e-9;

void check_path(const EvidenceGraph& g, const CompletePath& path) {
  if (path.size() != g.size()) {
    throw InputError("path length mismatch: path has " + std::to_string(path.size()) + " vertices, graph has " +
                     std::to_string(g.size()));
  }
}

// Probability that the path's own segment is the only open route from `a` to
// `b`, given that its consecutive edges are open. `segment` lists the path
// vertices a = t_0 < ... < t_r = b.
class SegmentFactor {
 public:
  SegmentFactor(const EvidenceGraph& g, const std::vector<std::size_t>& segment, VertexMask path_bits)
      : g_(g), segment_(segment) {
    const std::size_t a = segment.front();
    const std::size_t b = segment.back();
    for (std::size_t t = a + 1; t < b; ++t) {
      if ((path_bits >> t) & 1U) continue;
      double in = 1.0;
      double out = 1.0;
      for (std::size_t u : segment) {
        if (u < t) {
          in *= g.q(u, t);
        } else {
          out *= g.q(t, u);
        }
      }
      non_path_.push_back(t);
      base_in_.push_back(in);
      out_.push_back(out);
    }
  }

  double value() {
    double skip = 1.0;
    // Each not-stated t_k forbids jumps from its predecessor to any later
    // path vertex of the segment; together these cover every skipping edge.
    for (std::size_t k = 1; k + 1 < segment_.size(); ++k) {
      for (std::size_t m = k + 1; m < segment_.size(); ++m) skip *= g_.q(segment_[k - 1], segment_[m]);
    }
    if (skip == 0.0) return 0.0;
    reachable_.clear();
    return skip * reachability_sum(0, 1.0);
  }

 private:
  // Sum over reachable/unreachable assignments of the non-path vertices from
  // index `idx` on, in increasing vertex order.
  double reachability_sum(std::size_t idx, double weight) {
    if (weight == 0.0) return 0.0;
    if (idx == non_path_.size()) return weight;
    const std::size_t t = non_path_[idx];
    double all_blocked = base_in_[idx];
    for (std::size_t u : reachable_) all_blocked *= g_.q(u, t);

    double sum = reachability_sum(idx + 1, weight * all_blocked);
    reachable_.push_back(t);
    sum += reachability_sum(idx + 1, weight * (1.0 - all_blocked) * out_[idx]);
    reachable_.pop_back();
    return sum;
  }

  const EvidenceGraph& g_;
  const std::vector<std::size_t>& segment_;
  std::vector<std::size_t> non_path_;
  std::vector<double> base_in_;
  std::vector<double> out_;
  std::vector<std::size_t> reachable_;
};

double checked_normalize(double unnormalized, const ConflictTable& table, const char* what) {
  if (table.is_total()) throw TotalConflictError();
  const double value = unnormalized / (1.0 - table.total);
  if (value > 1.0 + kNormalizedSlack) {
    throw std::logic_error(std::string(what) + " exceeds 1: " + std::to_string(value));
  }
  return value;
}

}  // namespace

double pls_star(const EvidenceGraph& g, const CompletePath& path) {
  check_path(g, path);
  double value = 1.0;
  std::size_t previous = g.size();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!path.contains(i)) {
      value *= 1.0 - g.p(i);
      continue;
    }
    if (previous != g.size()) value *= 1.0 - g.q(previous, i);
    previous = i;
  }
  return value;
}

double spt_star(const EvidenceGraph& g, const CompletePath& path) {
  check_path(g, path);
  if (path.empty()) return 0.0;

  const std::vector<std::size_t> vertices = path.vertices();
  const std::size_t m = vertices.size();
  const std::size_t first = vertices.front();
  const std::size_t last = vertices.back();

  double fixed = g.p(first) * (m > 1 ? g.p(last) : 1.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!path.contains(i)) fixed *= 1.0 - g.p(i);
  }
  for (std::size_t u = 0; u < first; ++u) fixed *= g.q(u, first);
  for (std::size_t w = last + 1; w < g.size(); ++w) fixed *= g.q(last, w);
  for (std::size_t k = 0; k + 1 < m; ++k) fixed *= 1.0 - g.q(vertices[k], vertices[k + 1]);
  if (fixed == 0.0 || m <= 1) return fixed;

  // segment[a][b]: factor for consecutive stated vertices at path positions
  // a < b. Every pair occurs as a segment under some statement pattern.
  std::vector<std::vector<double>> segment(m, std::vector<double>(m, 0.0));
  std::vector<std::size_t> span;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      span.assign(vertices.begin() + static_cast<std::ptrdiff_t>(a),
                  vertices.begin() + static_cast<std::ptrdiff_t>(b) + 1);
      segment[a][b] = SegmentFactor(g, span, path.bits()).value();
    }
  }

  // Internal vertex at path position k is stated iff bit k-1 of `stated`.
  const std::size_t internal = m - 2;
  double sum = 0.0;
  for (VertexMask stated = 0; stated < (VertexMask{1} << internal); ++stated) {
    double term = 1.0;
    std::size_t anchor = 0;
    for (std::size_t k = 1; k + 1 < m; ++k) {
      const double p = g.p(vertices[k]);
      if ((stated >> (k - 1)) & 1U) {
        term *= p * segment[anchor][k];
        anchor = k;
      } else {
        term *= 1.0 - p;
      }
    }
    sum += term * segment[anchor][m - 1];
  }
  return fixed * sum;
}

double support(const EvidenceGraph& g, const CompletePath& path) { return support(g, path, conflict(g)); }

double support(const EvidenceGraph& g, const CompletePath& path, const ConflictTable& table) {
  return checked_normalize(spt_star(g, path), table, "support");
}

double plausibility(const EvidenceGraph& g, const CompletePath& path) {
  return plausibility(g, path, conflict(g));
}

double plausibility(const EvidenceGraph& g, const CompletePath& path, const ConflictTable& table) {
  return checked_normalize(pls_star(g, path), table, "plausibility");
}

PathBelief evaluate_path(const EvidenceGraph& g, const CompletePath& path, const ConflictTable& table) {
  PathBelief belief{path};
  belief.support_unnormalized = spt_star(g, path);
  belief.plausibility_unnormalized = pls_star(g, path);
  belief.support = checked_normalize(belief.support_unnormalized, table, "support");
  belief.plausibility = checked_normalize(belief.plausibility_unnormalized, table, "plausibility");
  return belief;
}

BeliefReport fast_report(const EvidenceGraph& g, std::size_t max_vertices) {
  if (g.size() > max_vertices) {
    throw InputError("whole-frame evaluation is capped at " + std::to_string(max_vertices) +
                     " vertices; query single paths instead");
  }
  const ConflictTable table = conflict(g);
  if (table.is_total()) throw TotalConflictError();
  BeliefReport report;
  report.vertex_count = g.size();
  report.conflict = table.total;
  report.paths.reserve(std::size_t{1} << g.size());
  for (VertexMask mask = 0; mask < (VertexMask{1} << g.size()); ++mask) {
    report.paths.push_back(evaluate_path(g, CompletePath(g.size(), mask), table));
  }
  return report;
}

}  // namespace dspath
