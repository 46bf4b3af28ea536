#pragma once

// Shared fixtures for the unit and acceptance suites. The closed forms below
// are the hand-expanded expressions for small graphs; they are evaluated
// independently of the library's enumeration code.

#include <cstddef>
#include <random>
#include <vector>

#include "dspath/graph.hpp"
#include "dspath/path.hpp"

namespace dspath::testing {

/// 1-based parameter access, to keep closed forms legible.
struct Params {
  const EvidenceGraph& g;
  double p(std::size_t i) const { return g.p(i - 1); }
  double q(std::size_t i, std::size_t j) const { return g.q(i - 1, j - 1); }
};

inline CompletePath path_of(const char* bits) { return CompletePath::parse(bits); }

inline EvidenceGraph graph3(double p1, double p2, double p3, double q12, double q13, double q23) {
  return EvidenceGraph({p1, p2, p3}, {q12, q13, q23});
}

/// Conflict of a 3-vertex graph, expanded from the final fusion table.
inline double closed_k3(const EvidenceGraph& g) {
  const Params x{g};
  return x.p(1) * x.p(2) * x.q(1, 2) +
         x.p(1) * (1 - x.p(2)) * x.p(3) *
             (x.q(1, 2) * x.q(1, 3) + x.q(1, 3) * x.q(2, 3) - x.q(1, 2) * x.q(1, 3) * x.q(2, 3)) +
         x.p(2) * x.p(3) * x.q(2, 3) - x.p(1) * x.p(2) * x.p(3) * x.q(1, 2) * x.q(2, 3);
}

/// Unnormalized support and plausibility of <r1, -r2, r3>.
inline double closed_spt_101(const EvidenceGraph& g) {
  const Params x{g};
  return x.p(1) * (1 - x.p(2)) * x.p(3) * (1 - x.q(1, 3)) * (x.q(1, 2) + (1 - x.q(1, 2)) * x.q(2, 3));
}
inline double closed_pls_101(const EvidenceGraph& g) {
  const Params x{g};
  return (1 - x.p(2)) * (1 - x.q(1, 3));
}

/// Unnormalized support and plausibility of <r1, -r2, r3, r4, -r5>.
inline double closed_spt_10110(const EvidenceGraph& g) {
  const Params x{g};
  return x.p(1) * (1 - x.p(2)) * x.p(4) * (1 - x.p(5)) * (1 - x.q(1, 3)) * (1 - x.q(3, 4)) * x.q(4, 5) *
         (x.p(3) * (x.q(1, 2) + (1 - x.q(1, 2)) * x.q(2, 3)) +
          (1 - x.p(3)) * x.q(1, 4) * (x.q(1, 2) + (1 - x.q(1, 2)) * x.q(2, 3) * x.q(2, 4)));
}
/// The two-term form the same value is derived from, grouped differently.
inline double closed_spt_10110_terms(const EvidenceGraph& g) {
  const Params x{g};
  const double common = x.p(1) * x.p(4) * (1 - x.q(1, 3)) * (1 - x.q(3, 4)) * (1 - x.p(2)) * (1 - x.p(5)) * x.q(4, 5);
  return common * x.p(3) * (x.q(1, 2) + (1 - x.q(1, 2)) * x.q(2, 3)) +
         common * (1 - x.p(3)) * (x.q(1, 2) * x.q(1, 4) + (1 - x.q(1, 2)) * x.q(1, 4) * x.q(2, 3) * x.q(2, 4));
}
inline double closed_pls_10110(const EvidenceGraph& g) {
  const Params x{g};
  return (1 - x.p(2)) * (1 - x.p(5)) * (1 - x.q(1, 3)) * (1 - x.q(3, 4));
}

/// Support of the path that visits only v_i: e_i holds, every edge touching
/// v_i is blocked, and no other vertex evidence holds.
inline double closed_single_vertex(const EvidenceGraph& g, std::size_t i) {
  double value = g.p(i);
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j < i) value *= g.q(j, i);
    if (j > i) value *= g.q(i, j);
    if (j != i) value *= 1 - g.p(j);
  }
  return value;
}

}  // namespace dspath::testing
