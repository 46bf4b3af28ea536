#pragma once

#include <cstddef>
#include <vector>

namespace dspath {

/// A complete DAG of evidence over n totally ordered vertices.
///
/// Vertex v_k of the file format and of path strings is index k-1 here.
/// Every vertex carries the mass p of the evidence that it lies on the
/// sought path; every pair i < j carries the doubt q that the path makes
/// a direct transition from v_i to v_j. Both lie in [0, 1].
class EvidenceGraph {
 public:
  /// Largest vertex count a path bitmask can encode.
  static constexpr std::size_t kMaxVertices = 63;

  /// A graph whose evidences all have mass 0.
  explicit EvidenceGraph(std::size_t n);

  /// `edge_doubt` is packed row-major over the upper triangle:
  /// (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
  EvidenceGraph(std::vector<double> vertex_mass, std::vector<double> edge_doubt);

  std::size_t size() const { return p_.size(); }
  std::size_t edge_count() const { return q_.size(); }

  double p(std::size_t i) const { return p_[i]; }
  /// Requires i < j < size().
  double q(std::size_t i, std::size_t j) const { return q_[edge_index(i, j)]; }

  const std::vector<double>& vertex_masses() const { return p_; }
  const std::vector<double>& edge_doubts() const { return q_; }

  /// Position of edge (i, j) in the packed upper triangle.
  std::size_t edge_index(std::size_t i, std::size_t j) const {
    return i * (2 * size() - i - 1) / 2 + (j - i - 1);
  }

  EvidenceGraph with_vertex_mass(std::size_t i, double value) const;
  EvidenceGraph with_edge_doubt(std::size_t i, std::size_t j, double value) const;

  /// The subgraph induced by vertices first..last, re-indexed from 0.
  EvidenceGraph window(std::size_t first, std::size_t last) const;

  friend bool operator==(const EvidenceGraph&, const EvidenceGraph&) = default;

 private:
  std::vector<double> p_;
  std::vector<double> q_;
};

}  // namespace dspath
