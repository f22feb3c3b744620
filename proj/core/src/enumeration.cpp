#include "vconf/enumeration.hpp"

#include <cstdint>

#include "sharded.hpp"
#include "vconf/error.hpp"

namespace vconf {

void check_enumeration_guard(const ClusterShape& shape, const EnumerationLimits& limits) {
  if (shape.total() > limits.max_total)
    throw Error(ErrorCode::SizeGuard, "|k| = " + std::to_string(shape.total()) +
                                          " exceeds the enumeration guard of " +
                                          std::to_string(limits.max_total) + " (raise max_total to override)");
}

RayBuilder::RayBuilder(ClusterShape shape)
    : shape_(std::move(shape)), anchor_(shape_.clusters(), -1) {
  blocks_.reserve(shape_.total());
  history_.reserve(shape_.total());
  parent_.reserve(shape_.total());
  rank_size_.reserve(shape_.total());
}

int RayBuilder::find(int x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

void RayBuilder::push(int choice) {
  if (complete()) throw Error(ErrorCode::InvalidArgument, "ray partition already complete");
  if (choice < 0 || choice >= choice_count())
    throw Error(ErrorCode::InvalidArgument, "choice " + std::to_string(choice) + " out of range [0, " +
                                                std::to_string(choice_count()) + ")");
  const TableIndex idx = shape_.at(placed());
  Step step{choice, -1, 0, -1, false};

  if (choice == 0) {
    step.block = static_cast<int>(blocks_.size());
    blocks_.push_back(Block{idx});
    parent_.push_back(step.block);
    rank_size_.push_back(1);
    ++components_;
  } else {
    int remaining = choice;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const int slots = static_cast<int>(blocks_[b].size());
      if (remaining <= slots) {
        step.block = static_cast<int>(b);
        step.slot = remaining;
        break;
      }
      remaining -= slots;
    }
    auto& block = blocks_[step.block];
    block.insert(block.begin() + step.slot, idx);
  }

  int& anchor = anchor_[idx.cluster - 1];
  if (anchor < 0) {
    anchor = step.block;
    step.set_anchor = true;
  } else {
    int a = find(anchor);
    int b = find(step.block);
    if (a != b) {
      // union by size, no path compression, so the step can be undone
      if (rank_size_[a] < rank_size_[b]) std::swap(a, b);
      parent_[b] = a;
      rank_size_[a] += rank_size_[b];
      step.merged_child = b;
      --components_;
    }
  }
  history_.push_back(step);
}

void RayBuilder::pop() {
  if (history_.empty()) throw Error(ErrorCode::InvalidArgument, "nothing to undo");
  const Step step = history_.back();
  history_.pop_back();
  const TableIndex idx = shape_.at(placed());

  if (step.merged_child >= 0) {
    const int root = parent_[step.merged_child];
    rank_size_[root] -= rank_size_[step.merged_child];
    parent_[step.merged_child] = step.merged_child;
    ++components_;
  }
  if (step.set_anchor) anchor_[idx.cluster - 1] = -1;

  if (step.choice == 0) {
    blocks_.pop_back();
    parent_.pop_back();
    rank_size_.pop_back();
    --components_;
  } else {
    auto& block = blocks_[step.block];
    block.erase(block.begin() + step.slot);
  }
}

std::vector<int> RayBuilder::choices() const {
  std::vector<int> out;
  out.reserve(history_.size());
  for (const auto& s : history_) out.push_back(s.choice);
  return out;
}

int default_shard_depth(const ClusterShape& shape) { return (shape.total() + 1) / 2; }

std::vector<std::vector<int>> shard_prefixes(const ClusterShape& shape, int depth) {
  if (depth < 0 || depth > shape.total())
    throw Error(ErrorCode::InvalidArgument, "shard depth out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  auto rec = [&](auto&& self) -> void {
    const int t = static_cast<int>(prefix.size());
    if (t == depth) {
      out.push_back(prefix);
      return;
    }
    for (int c = 0; c <= t; ++c) {
      prefix.push_back(c);
      self(self);
      prefix.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<RayPartition> collect_ray_partitions(const ClusterShape& shape, const EnumerationLimits& limits) {
  std::vector<RayPartition> out;
  for_each_ray_partition(shape, [&](const RayPartition& q) { out.push_back(q); }, limits);
  return out;
}

RayPartition ray_partition_from_code(const ClusterShape& shape, std::span<const int> code) {
  if (static_cast<int>(code.size()) != shape.total())
    throw Error(ErrorCode::InvalidArgument, "code length must equal |k|");
  RayBuilder builder(shape);
  for (int c : code) builder.push(c);
  return builder.partition();
}

BigInt count_ray_partitions(const ClusterShape& shape, int jobs, const EnumerationLimits& limits) {
  check_enumeration_guard(shape, limits);
  const auto counts = detail::run_sharded<std::uint64_t>(
      shape, jobs, [](std::uint64_t& acc, const RayBuilder&) { ++acc; });
  BigInt total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace vconf
