#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "vconf/shape.hpp"

namespace vconf {

// Block sizes of a ray partition, an element of P(total).
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int total() const { return total_; }
  std::string to_string() const;  // "(1,2)"

  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<int> entries_;
  int total_ = 0;
};

// Lexicographic order after right-padding both vectors with zeros to length
// total. Throws TotalMismatch when the totals differ.
std::strong_ordering compare_weights(const WeightVector& a, const WeightVector& b);

// A tuple (sigma_1, ..., sigma_r) with sigma_i a permutation of {1..k_i},
// stored in one-line notation: permutations()[i-1][j-1] = sigma_i(j).
class ComponentLabel {
 public:
  ComponentLabel() = default;
  explicit ComponentLabel(std::vector<std::vector<int>> permutations);

  static ComponentLabel identity(const ClusterShape& shape);
  // "id" for the identity tuple, otherwise one comma-separated permutation per
  // cluster separated by ';', e.g. "2,3,1;1,2".
  static ComponentLabel parse(const ClusterShape& shape, std::string_view text);

  const std::vector<std::vector<int>>& permutations() const { return perms_; }
  bool fits(const ClusterShape& shape) const;
  bool is_identity() const;
  std::string to_string() const;  // "(2,3,1) (1,2)"

  auto operator<=>(const ComponentLabel&) const = default;

 private:
  std::vector<std::vector<int>> perms_;
};

using Block = std::vector<TableIndex>;

// An ordered partition of T_k into rays. Each block is stored in its internal
// order; R1 and R2 hold for every instance.
class RayPartition {
 public:
  // Checks partition property, R1 and R2; throws Error otherwise.
  static RayPartition validate(ClusterShape shape, std::vector<Block> blocks);
  // Text form: blocks separated by '|', indices as "i.j", e.g. "1.1 2.1 | 1.2".
  static RayPartition parse(const ClusterShape& shape, std::string_view text);
  // For enumerators that construct partitions satisfying the axioms by design.
  static RayPartition unchecked(ClusterShape shape, std::vector<Block> blocks);

  const ClusterShape& shape() const { return shape_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int length() const { return static_cast<int>(blocks_.size()); }
  WeightVector weight() const;
  std::string to_string() const;

  bool operator==(const RayPartition&) const = default;

 private:
  RayPartition(ClusterShape shape, std::vector<Block> blocks)
      : shape_(std::move(shape)), blocks_(std::move(blocks)) {}

  ClusterShape shape_;
  std::vector<Block> blocks_;
};

// Number of classes of blocks under "meets a common cluster".
int agility(const RayPartition& partition);

// Sigma(Q): read each cluster's order off the stacked order Q_l, ..., Q_1.
// Meaningful as a path-component label only for q = 1.
ComponentLabel component_label(const RayPartition& partition);

struct RayPartitionStats {
  int length = 0;
  int agility = 0;
  WeightVector weight;
  ComponentLabel sigma;
  long long degree = 0;       // |u_Q| = p(r - a) + (q - 1)(|k| - l)
  long long stratum_dim = 0;  // d(Q) = |k| + p a + (q - 1) l
};

RayPartitionStats ray_partition_stats(const RayPartition& partition, int p, int q);

// Degree of the dual class for given length and agility.
inline long long ray_degree(int p, int q, int r, int total, int length, int agility) {
  return static_cast<long long>(p) * (r - agility) + static_cast<long long>(q - 1) * (total - length);
}

}  // namespace vconf
