#include "vconf/shape.hpp"

#include <algorithm>
#include <charconv>

#include "vconf/error.hpp"

namespace vconf {

std::string to_string(TableIndex index) {
  return std::to_string(index.cluster) + "." + std::to_string(index.position);
}

ClusterShape::ClusterShape(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  offsets_.reserve(sizes_.size());
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] < 1)
      throw Error(ErrorCode::InvalidArgument,
                  "cluster " + std::to_string(i + 1) + " has size " + std::to_string(sizes_[i]) +
                      "; sizes must be >= 1");
    offsets_.push_back(total_);
    total_ += sizes_[i];
  }
}

ClusterShape ClusterShape::parse(std::string_view text) {
  std::vector<int> sizes;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw Error(ErrorCode::ParseError, "bad cluster size '" + std::string(item) + "'");
    sizes.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw Error(ErrorCode::ParseError, "trailing comma in shape");
  }
  return ClusterShape(std::move(sizes));
}

int ClusterShape::multiplicity(int k) const {
  return static_cast<int>(std::count(sizes_.begin(), sizes_.end(), k));
}

std::map<int, int> ClusterShape::multiplicities() const {
  std::map<int, int> result;
  for (int k : sizes_) ++result[k];
  return result;
}

bool ClusterShape::contains(TableIndex index) const {
  return index.cluster >= 1 && index.cluster <= clusters() && index.position >= 1 &&
         index.position <= sizes_[index.cluster - 1];
}

int ClusterShape::ordinal(TableIndex index) const {
  if (!contains(index))
    throw Error(ErrorCode::IndexOutOfShape, vconf::to_string(index) + " is not in T_k for shape " + to_string());
  return offsets_[index.cluster - 1] + index.position - 1;
}

TableIndex ClusterShape::at(int ordinal) const {
  if (ordinal < 0 || ordinal >= total_)
    throw Error(ErrorCode::IndexOutOfShape, "ordinal " + std::to_string(ordinal) + " out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), ordinal);
  const int cluster = static_cast<int>(it - offsets_.begin());
  return {cluster, ordinal - offsets_[cluster - 1] + 1};
}

std::string ClusterShape::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

}  // namespace vconf
