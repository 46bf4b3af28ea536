#include "dspath/graph.hpp"

#include <cmath>
#include <string>

#include "dspath/error.hpp"

namespace dspath {
namespace {

void check_unit(double value, const std::string& what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InputError(what + " = " + std::to_string(value) + " is outside [0, 1]");
  }
}

std::string vertex_name(std::size_t i) { return "p" + std::to_string(i + 1); }

std::string edge_name(std::size_t i, std::size_t j) {
  return "q" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

}  // namespace

EvidenceGraph::EvidenceGraph(std::size_t n)
    : EvidenceGraph(std::vector<double>(n, 0.0), std::vector<double>(n * (n == 0 ? 0 : n - 1) / 2, 0.0)) {}

EvidenceGraph::EvidenceGraph(std::vector<double> vertex_mass, std::vector<double> edge_doubt)
    : p_(std::move(vertex_mass)), q_(std::move(edge_doubt)) {
  const std::size_t n = p_.size();
  if (n == 0) throw InputError("an evidence graph needs at least one vertex");
  if (n > kMaxVertices) {
    throw InputError("an evidence graph supports at most " + std::to_string(kMaxVertices) + " vertices");
  }
  if (q_.size() != n * (n - 1) / 2) {
    throw InputError("expected " + std::to_string(n * (n - 1) / 2) + " edge doubts for " + std::to_string(n) +
                     " vertices, got " + std::to_string(q_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) check_unit(p_[i], vertex_name(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) check_unit(q(i, j), edge_name(i, j));
  }
}

EvidenceGraph EvidenceGraph::with_vertex_mass(std::size_t i, double value) const {
  if (i >= size()) throw InputError("vertex index " + std::to_string(i + 1) + " out of range");
  check_unit(value, vertex_name(i));
  EvidenceGraph copy = *this;
  copy.p_[i] = value;
  return copy;
}

EvidenceGraph EvidenceGraph::with_edge_doubt(std::size_t i, std::size_t j, double value) const {
  if (!(i < j && j < size())) {
    throw InputError("edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not an edge of the graph");
  }
  check_unit(value, edge_name(i, j));
  EvidenceGraph copy = *this;
  copy.q_[edge_index(i, j)] = value;
  return copy;
}

EvidenceGraph EvidenceGraph::window(std::size_t first, std::size_t last) const {
  if (!(first <= last && last < size())) throw InputError("invalid window");
  const std::size_t m = last - first + 1;
  std::vector<double> p(p_.begin() + static_cast<std::ptrdiff_t>(first),
                        p_.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  std::vector<double> q;
  q.reserve(m * (m - 1) / 2);
  for (std::size_t i = first; i <= last; ++i) {
    for (std::size_t j = i + 1; j <= last; ++j) q.push_back(this->q(i, j));
  }
  return EvidenceGraph(std::move(p), std::move(q));
}

}  // namespace dspath
