#include "vconf/ray_partition.hpp"

#include <algorithm>
#include <charconv>

#include "vconf/disjoint_sets.hpp"
#include "vconf/error.hpp"

namespace vconf {

WeightVector::WeightVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 1) throw Error(ErrorCode::InvalidArgument, "weight entries must be positive");
    total_ += e;
  }
}

std::string WeightVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

std::strong_ordering compare_weights(const WeightVector& a, const WeightVector& b) {
  if (a.total() != b.total())
    throw Error(ErrorCode::TotalMismatch,
                "cannot compare " + a.to_string() + " and " + b.to_string() + ": totals differ");
  const auto& x = a.entries();
  const auto& y = b.entries();
  const std::size_t n = static_cast<std::size_t>(a.total());
  for (std::size_t i = 0; i < n; ++i) {
    const int xi = i < x.size() ? x[i] : 0;
    const int yi = i < y.size() ? y[i] : 0;
    if (xi != yi) return xi <=> yi;
  }
  return std::strong_ordering::equal;
}

ComponentLabel::ComponentLabel(std::vector<std::vector<int>> permutations)
    : perms_(std::move(permutations)) {
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    const auto& perm = perms_[i];
    std::vector<bool> seen(perm.size() + 1, false);
    for (int v : perm) {
      if (v < 1 || v > static_cast<int>(perm.size()) || seen[v])
        throw Error(ErrorCode::InvalidArgument,
                    "entry " + std::to_string(i + 1) + " of the component label is not a permutation");
      seen[v] = true;
    }
  }
}

ComponentLabel ComponentLabel::identity(const ClusterShape& shape) {
  std::vector<std::vector<int>> perms;
  for (int k : shape.sizes()) {
    std::vector<int> perm(k);
    for (int j = 0; j < k; ++j) perm[j] = j + 1;
    perms.push_back(std::move(perm));
  }
  return ComponentLabel(std::move(perms));
}

ComponentLabel ComponentLabel::parse(const ClusterShape& shape, std::string_view text) {
  if (text == "id" || text == "identity") return identity(shape);
  std::vector<std::vector<int>> perms;
  while (true) {
    const auto semi = text.find(';');
    std::string_view item = text.substr(0, semi);
    std::vector<int> perm;
    while (!item.empty()) {
      const auto comma = item.find(',');
      std::string_view num = item.substr(0, comma);
      while (!num.empty() && num.front() == ' ') num.remove_prefix(1);
      while (!num.empty() && num.back() == ' ') num.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
      if (ec != std::errc() || ptr != num.data() + num.size() || num.empty())
        throw Error(ErrorCode::ParseError, "bad permutation entry '" + std::string(num) + "'");
      perm.push_back(v);
      if (comma == std::string_view::npos) break;
      item.remove_prefix(comma + 1);
    }
    perms.push_back(std::move(perm));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  ComponentLabel label(std::move(perms));
  if (!label.fits(shape))
    throw Error(ErrorCode::ShapeMismatch, "component label " + label.to_string() +
                                              " does not fit shape " + shape.to_string());
  return label;
}

bool ComponentLabel::fits(const ClusterShape& shape) const {
  if (static_cast<int>(perms_.size()) != shape.clusters()) return false;
  for (int i = 0; i < shape.clusters(); ++i)
    if (static_cast<int>(perms_[i].size()) != shape.sizes()[i]) return false;
  return true;
}

bool ComponentLabel::is_identity() const {
  for (const auto& perm : perms_)
    for (std::size_t j = 0; j < perm.size(); ++j)
      if (perm[j] != static_cast<int>(j) + 1) return false;
  return true;
}

std::string ComponentLabel::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    if (i) out += ' ';
    out += '(';
    for (std::size_t j = 0; j < perms_[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(perms_[i][j]);
    }
    out += ')';
  }
  return out;
}

RayPartition RayPartition::validate(ClusterShape shape, std::vector<Block> blocks) {
  std::vector<int> seen(shape.total(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw Error(ErrorCode::NotAPartition, "block " + std::to_string(b + 1) + " is empty");
    for (TableIndex idx : blocks[b]) {
      if (!shape.contains(idx))
        throw Error(ErrorCode::IndexOutOfShape,
                    vconf::to_string(idx) + " is not in T_k for shape " + shape.to_string());
      if (seen[shape.ordinal(idx)]++)
        throw Error(ErrorCode::NotAPartition, vconf::to_string(idx) + " appears more than once");
    }
  }
  for (int o = 0; o < shape.total(); ++o)
    if (!seen[o]) throw Error(ErrorCode::NotAPartition, vconf::to_string(shape.at(o)) + " is missing");

  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const TableIndex block_min = *std::min_element(blocks[b].begin(), blocks[b].end());
    if (blocks[b].front() != block_min)
      throw Error(ErrorCode::R2Violation,
                  "block " + std::to_string(b + 1) + " starts with " + vconf::to_string(blocks[b].front()) +
                      " but its minimum is " + vconf::to_string(block_min));
    if (b > 0) {
      const TableIndex prev_min = *std::min_element(blocks[b - 1].begin(), blocks[b - 1].end());
      if (!(prev_min < block_min))
        throw Error(ErrorCode::R1Violation,
                    "min of block " + std::to_string(b) + " (" + vconf::to_string(prev_min) +
                        ") is not below min of block " + std::to_string(b + 1) + " (" +
                        vconf::to_string(block_min) + ")");
    }
  }
  return RayPartition(std::move(shape), std::move(blocks));
}

RayPartition RayPartition::unchecked(ClusterShape shape, std::vector<Block> blocks) {
  return RayPartition(std::move(shape), std::move(blocks));
}

RayPartition RayPartition::parse(const ClusterShape& shape, std::string_view text) {
  std::vector<Block> blocks;
  Block current;
  auto flush = [&] {
    if (current.empty()) throw Error(ErrorCode::ParseError, "empty block in ray partition text");
    blocks.push_back(std::move(current));
    current.clear();
  };
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (c == '|') {
      flush();
      ++i;
    } else {
      std::size_t end = text.find_first_of(" \t|", i);
      if (end == std::string_view::npos) end = text.size();
      std::string_view token = text.substr(i, end - i);
      const auto dot = token.find('.');
      TableIndex idx;
      auto parse_int = [&](std::string_view s, int& out) {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
      };
      if (dot == std::string_view::npos || !parse_int(token.substr(0, dot), idx.cluster) ||
          !parse_int(token.substr(dot + 1), idx.position))
        throw Error(ErrorCode::ParseError, "bad table index '" + std::string(token) + "'");
      current.push_back(idx);
      i = end;
    }
  }
  flush();
  return validate(shape, std::move(blocks));
}

WeightVector RayPartition::weight() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& block : blocks_) sizes.push_back(static_cast<int>(block.size()));
  return WeightVector(std::move(sizes));
}

std::string RayPartition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += " | ";
    for (std::size_t j = 0; j < blocks_[b].size(); ++j) {
      if (j) out += ' ';
      out += vconf::to_string(blocks_[b][j]);
    }
  }
  return out;
}

int agility(const RayPartition& partition) {
  const int l = partition.length();
  DisjointSets sets(l);
  std::vector<int> first_block(partition.shape().clusters(), -1);
  for (int b = 0; b < l; ++b) {
    for (TableIndex idx : partition.blocks()[b]) {
      int& anchor = first_block[idx.cluster - 1];
      if (anchor < 0)
        anchor = b;
      else
        sets.unite(anchor, b);
    }
  }
  return sets.components();
}

ComponentLabel component_label(const RayPartition& partition) {
  const auto& shape = partition.shape();
  std::vector<std::vector<int>> perms(shape.clusters());
  for (int i = 0; i < shape.clusters(); ++i) perms[i].reserve(shape.sizes()[i]);
  const auto& blocks = partition.blocks();
  for (auto block = blocks.rbegin(); block != blocks.rend(); ++block)
    for (TableIndex idx : *block) perms[idx.cluster - 1].push_back(idx.position);
  return ComponentLabel(std::move(perms));
}

RayPartitionStats ray_partition_stats(const RayPartition& partition, int p, int q) {
  if (p < 0 || q < 1) throw Error(ErrorCode::InvalidArgument, "need p >= 0 and q >= 1");
  RayPartitionStats stats;
  const auto& shape = partition.shape();
  stats.length = partition.length();
  stats.agility = agility(partition);
  stats.weight = partition.weight();
  stats.sigma = component_label(partition);
  stats.degree = ray_degree(p, q, shape.clusters(), shape.total(), stats.length, stats.agility);
  stats.stratum_dim = shape.total() + static_cast<long long>(p) * stats.agility +
                      static_cast<long long>(q - 1) * stats.length;
  return stats;
}

}  // namespace vconf
