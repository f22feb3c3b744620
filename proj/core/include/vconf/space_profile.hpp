#pragma once

#include "vconf/numeric.hpp"
#include "vconf/shape.hpp"

namespace vconf {

// Basic invariants of the ordered space of vertical configurations of a
// shape in R^{p,q} and of its unordered quotient.
struct SpaceProfile {
  long long dimension = 0;            // p r + q |k|, for both spaces
  bool unordered_orientable = true;   // the ordered space is always orientable
  BigInt ordered_components;          // |pi_0| of the ordered space
  BigInt unordered_components;        // |pi_0| of the unordered space
};

SpaceProfile space_profile(const ClusterShape& shape, int p, int q);

}  // namespace vconf
