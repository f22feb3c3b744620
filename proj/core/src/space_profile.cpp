#include "vconf/space_profile.hpp"

#include "vconf/error.hpp"

namespace vconf {

SpaceProfile space_profile(const ClusterShape& shape, int p, int q) {
  if (p < 0 || q < 1) throw Error(ErrorCode::InvalidArgument, "need p >= 0 and q >= 1");
  SpaceProfile profile;
  const int r = shape.clusters();
  const int n = shape.total();
  profile.dimension = static_cast<long long>(p) * r + static_cast<long long>(q) * n;

  bool swaps_points = false;
  if (q >= 3 && q % 2 == 1)
    for (int k : shape.sizes())
      if (k >= 2) swaps_points = true;
  bool swaps_clusters = false;
  if (p + q >= 2)
    for (auto [k, count] : shape.multiplicities())
      if ((p + q * k) % 2 == 1 && count >= 2) swaps_clusters = true;
  profile.unordered_orientable = !(swaps_points || swaps_clusters);

  if (q >= 2) {
    profile.ordered_components = 1;
  } else if (p >= 1) {
    profile.ordered_components = 1;
    for (int k : shape.sizes()) profile.ordered_components *= factorial(k);
  } else {
    profile.ordered_components = factorial(n);
  }

  if (p == 0 && q == 1) {
    BigInt stabiliser = 1;
    for (auto [k, count] : shape.multiplicities()) {
      for (int c = 0; c < count; ++c) stabiliser *= factorial(k);
      stabiliser *= factorial(count);
    }
    profile.unordered_components = factorial(n) / stabiliser;
  } else {
    profile.unordered_components = 1;
  }
  return profile;
}

}  // namespace vconf
