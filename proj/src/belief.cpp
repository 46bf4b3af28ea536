#include "dspath/belief.hpp"

#include "dspath/error.hpp"

namespace dspath {

void normalize(PathBelief& belief, double conflict) {
  if (is_total_conflict(conflict)) throw TotalConflictError();
  const double scale = 1.0 / (1.0 - conflict);
  belief.support = belief.support_unnormalized * scale;
  belief.plausibility = belief.plausibility_unnormalized * scale;
}

}  // namespace dspath
