#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vconf/numeric.hpp"
#include "vconf/ray_partition.hpp"

namespace vconf {

// A point of R^{p+q} with exact coordinates. Writing R^{p+q} = R^{p+q-1} x R,
// zeta() is the first p+q-1 coordinates and t() the last one.
struct RationalPoint {
  std::vector<Rational> coords;

  int dimension() const { return static_cast<int>(coords.size()); }
  std::span<const Rational> head(int p) const { return std::span(coords).first(p); }
  std::span<const Rational> zeta() const { return std::span(coords).first(coords.size() - 1); }
  const Rational& t() const { return coords.back(); }

  bool operator==(const RationalPoint&) const = default;
};

RationalPoint make_point(std::initializer_list<Rational> coords);
std::string to_string(const RationalPoint& point);

// r clusters of points in R^{p+q}; within a cluster all points share their
// first p coordinates, and all points are pairwise distinct.
class VerticalConfiguration {
 public:
  static VerticalConfiguration make(int p, int q, std::vector<std::vector<RationalPoint>> clusters);

  int p() const { return p_; }
  int q() const { return q_; }
  int dimension() const { return p_ + q_; }
  const std::vector<std::vector<RationalPoint>>& clusters() const { return clusters_; }
  const RationalPoint& point(TableIndex index) const {
    return clusters_[index.cluster - 1][index.position - 1];
  }
  const ClusterShape& shape() const { return shape_; }

  bool operator==(const VerticalConfiguration&) const = default;

 private:
  VerticalConfiguration() = default;

  int p_ = 0;
  int q_ = 1;
  std::vector<std::vector<RationalPoint>> clusters_;
  ClusterShape shape_;
};

struct WitnessViolation {
  enum class Axiom { W1, W2 };
  Axiom axiom = Axiom::W1;
  int block = 0;  // 1-based
  TableIndex first;
  TableIndex second;

  std::string describe() const;
};

struct WitnessResult {
  bool witnessed = true;
  std::optional<WitnessViolation> violation;

  explicit operator bool() const { return witnessed; }
};

// W1: every block lies on one t-line. W2: t strictly increases along the
// block's order. Throws ShapeMismatch if the shapes differ.
WitnessResult witnesses(const VerticalConfiguration& config, const RayPartition& partition);

// The unique witnessed ray partition of maximal weight: repeatedly seed a
// block at the smallest unassigned index and collect every unassigned point
// on the upward ray from the seed, ordered by t.
RayPartition greedy_ray_partition(const VerticalConfiguration& config);

// Path component of the configuration: nullopt when the space is connected
// (q >= 2); for q = 1 the tuple sorting each cluster by t.
std::optional<ComponentLabel> component_of(const VerticalConfiguration& config);

struct DexterityResult {
  std::vector<std::vector<int>> classes;  // 1-based cluster indices, sorted
  int dexterity = 0;
  int filtration_index = 0;  // r - dexterity
};

// Classes of clusters under the relation generated by "aligned and
// entangled" (same t-line, overlapping closed t-ranges). Requires q = 1;
// clusters of different sizes are accepted.
DexterityResult dexterity(const VerticalConfiguration& config);

// Adds a cluster of k points at first coordinate max + 2 (2 if empty), other
// zeta coordinates 0 and t = 1..k.
VerticalConfiguration stabilise_configuration(const VerticalConfiguration& config, int k);

}  // namespace vconf
