#pragma once

#include <span>
#include <vector>

#include "vconf/numeric.hpp"
#include "vconf/ray_partition.hpp"

namespace vconf {

// Enumeration is factorial in |k|; anything above the guard must be asked for
// explicitly by raising max_total.
struct EnumerationLimits {
  int max_total = 12;
};

void check_enumeration_guard(const ClusterShape& shape, const EnumerationLimits& limits);

// Builds ray partitions by inserting the entries of T_k in increasing order.
// The t-th entry (0-based) has t + 1 choices: 0 opens a new block at the end
// (keeps R1), c >= 1 puts it into the c-th non-initial slot of the existing
// blocks (keeps R2). Choice sequences are therefore in bijection with ray
// partitions, and there are |k|! of them.
class RayBuilder {
 public:
  explicit RayBuilder(ClusterShape shape);

  const ClusterShape& shape() const { return shape_; }
  int placed() const { return static_cast<int>(history_.size()); }
  bool complete() const { return placed() == shape_.total(); }
  int choice_count() const { return placed() + 1; }

  void push(int choice);
  void pop();

  int length() const { return static_cast<int>(blocks_.size()); }
  int agility() const { return components_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::vector<int> choices() const;
  RayPartition partition() const { return RayPartition::unchecked(shape_, blocks_); }

 private:
  struct Step {
    int choice;
    int block;
    int slot;
    int merged_child;  // root absorbed by the union in this step, or -1
    bool set_anchor;
  };

  int find(int x) const;

  ClusterShape shape_;
  std::vector<Block> blocks_;
  std::vector<Step> history_;
  std::vector<int> anchor_;  // block holding (i, 1) for each cluster i
  std::vector<int> parent_;
  std::vector<int> rank_size_;
  int components_ = 0;
};

// Depth-first walk over all completions of the builder's current prefix, in
// lexicographic order of choice sequences. visit(const RayBuilder&) is called
// once per complete ray partition.
template <class Visitor>
void for_each_completion(RayBuilder& builder, Visitor&& visit) {
  if (builder.complete()) {
    visit(static_cast<const RayBuilder&>(builder));
    return;
  }
  const int n = builder.choice_count();
  for (int c = 0; c < n; ++c) {
    builder.push(c);
    for_each_completion(builder, visit);
    builder.pop();
  }
}

// All choice prefixes of the given depth, in lexicographic order.
std::vector<std::vector<int>> shard_prefixes(const ClusterShape& shape, int depth);
int default_shard_depth(const ClusterShape& shape);

// Streams every ray partition of the shape exactly once, deterministically.
template <class Visitor>
void for_each_ray_partition(const ClusterShape& shape, Visitor&& visit,
                            const EnumerationLimits& limits = {}) {
  check_enumeration_guard(shape, limits);
  RayBuilder builder(shape);
  for_each_completion(builder, [&](const RayBuilder& b) { visit(b.partition()); });
}

std::vector<RayPartition> collect_ray_partitions(const ClusterShape& shape,
                                                 const EnumerationLimits& limits = {});

// Decodes a full choice sequence (code[t] in [0, t]).
RayPartition ray_partition_from_code(const ClusterShape& shape, std::span<const int> code);

// Counts by streaming, sharded over `jobs` worker threads.
BigInt count_ray_partitions(const ClusterShape& shape, int jobs = 1,
                            const EnumerationLimits& limits = {});

}  // namespace vconf
