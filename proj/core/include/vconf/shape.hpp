#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vconf {

// An entry (i, j) of the table T_k: point j of cluster i, both 1-based.
// The defaulted ordering is the lexicographic order used throughout.
struct TableIndex {
  int cluster = 0;
  int position = 0;

  auto operator<=>(const TableIndex&) const = default;
};

std::string to_string(TableIndex index);

// The tuple k = (k_1, ..., k_r) of cluster sizes.
class ClusterShape {
 public:
  ClusterShape() = default;
  explicit ClusterShape(std::vector<int> sizes);

  // Comma-separated positive integers, e.g. "3,4,2,2". The empty string is
  // the shape with no clusters.
  static ClusterShape parse(std::string_view text);

  const std::vector<int>& sizes() const { return sizes_; }
  int clusters() const { return static_cast<int>(sizes_.size()); }
  int total() const { return total_; }
  int size(int cluster) const { return sizes_.at(cluster - 1); }

  // r(k) = #{i : k_i = k}
  int multiplicity(int k) const;
  std::map<int, int> multiplicities() const;

  bool contains(TableIndex index) const;
  // Position of index in the lexicographic order of T_k (0-based) and back.
  int ordinal(TableIndex index) const;
  TableIndex at(int ordinal) const;

  std::string to_string() const;

  bool operator==(const ClusterShape&) const = default;

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int total_ = 0;
};

}  // namespace vconf
