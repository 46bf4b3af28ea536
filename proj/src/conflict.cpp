#include "dspath/conflict.hpp"

#include <algorithm>

#include "dspath/belief.hpp"
#include "dspath/support.hpp"

namespace dspath {

double ConflictTable::contribution(std::size_t i, std::size_t j) const {
  return contributions.at(i * (2 * vertex_count - i - 1) / 2 + (j - i - 1));
}

bool ConflictTable::is_total() const { return is_total_conflict(total); }

ConflictTable conflict(const EvidenceGraph& g) {
  const std::size_t n = g.size();
  ConflictTable table;
  table.vertex_count = n;
  table.contributions.assign(g.edge_count(), 0.0);
  table.rescaled_p = g.vertex_masses();
  if (n == 1) return table;

  auto k = [&](std::size_t i, std::size_t j) -> double& { return table.contributions[g.edge_index(i, j)]; };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (i > 0) {
      // Conflict among vertices before i, and the part added by edges into i.
      double before = 0.0;
      for (std::size_t a = 0; a < i; ++a) {
        for (std::size_t b = a + 1; b < i; ++b) before += k(a, b);
      }
      double into = 0.0;
      for (std::size_t a = 0; a < i; ++a) into += k(a, i);
      const double rescaled = g.p(i) * (1.0 - before) - into;
      // Exactly in [0, p_i]; rounding may leave it a few ulps outside.
      table.rescaled_p[i] = std::clamp(rescaled, 0.0, g.p(i));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t len = j - i + 1;
      const EvidenceGraph window =
          g.window(i, j).with_vertex_mass(0, table.rescaled_p[i]).with_edge_doubt(0, len - 1, 0.0);
      const CompletePath ends(len, VertexMask{1} | (VertexMask{1} << (len - 1)));
      k(i, j) = g.q(i, j) * spt_star(window, ends);
    }
  }

  for (double c : table.contributions) table.total += c;
  return table;
}

}  // namespace dspath
