#include "vconf/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vconf/disjoint_sets.hpp"
#include "vconf/error.hpp"

namespace vconf {

namespace {

bool same_zeta(const RationalPoint& a, const RationalPoint& b) {
  return std::equal(a.coords.begin(), a.coords.end() - 1, b.coords.begin(), b.coords.end() - 1);
}

}  // namespace

RationalPoint make_point(std::initializer_list<Rational> coords) { return RationalPoint{coords}; }

std::string to_string(const RationalPoint& point) {
  std::string out = "(";
  for (std::size_t c = 0; c < point.coords.size(); ++c) {
    if (c) out += ",";
    out += to_string(point.coords[c]);
  }
  return out + ")";
}

VerticalConfiguration VerticalConfiguration::make(int p, int q, std::vector<std::vector<RationalPoint>> clusters) {
  if (p < 0 || q < 1) throw Error(ErrorCode::InvalidArgument, "need p >= 0 and q >= 1");
  std::vector<int> sizes;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const auto& cluster = clusters[i];
    if (cluster.empty())
      throw Error(ErrorCode::InvalidArgument, "cluster " + std::to_string(i + 1) + " has no points");
    for (std::size_t j = 0; j < cluster.size(); ++j) {
      if (cluster[j].dimension() != p + q)
        throw Error(ErrorCode::DimensionMismatch,
                    "cluster " + std::to_string(i + 1) + ", point " + std::to_string(j + 1) + " has " +
                        std::to_string(cluster[j].dimension()) + " coordinates, expected p + q = " +
                        std::to_string(p + q));
    }
    for (std::size_t j = 1; j < cluster.size(); ++j)
      for (int c = 0; c < p; ++c)
        if (cluster[j].coords[c] != cluster[0].coords[c])
          throw Error(ErrorCode::VerticalityViolation,
                      "cluster " + std::to_string(i + 1) + ": point " + std::to_string(j + 1) + " has coordinate " +
                          std::to_string(c + 1) + " = " + to_string(cluster[j].coords[c]) + " but point 1 has " +
                          to_string(cluster[0].coords[c]));
    sizes.push_back(static_cast<int>(cluster.size()));
  }

  // Sorting makes the distinctness check O(n log n).
  std::vector<std::pair<const RationalPoint*, TableIndex>> all;
  for (std::size_t i = 0; i < clusters.size(); ++i)
    for (std::size_t j = 0; j < clusters[i].size(); ++j)
      all.push_back({&clusters[i][j], TableIndex{static_cast<int>(i) + 1, static_cast<int>(j) + 1}});
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    const auto& x = a.first->coords;
    const auto& y = b.first->coords;
    for (std::size_t c = 0; c < x.size(); ++c)
      if (const int cmp = compare(x[c], y[c]); cmp != 0) return cmp < 0;
    return false;
  });
  for (std::size_t n = 1; n < all.size(); ++n)
    if (all[n].first->coords == all[n - 1].first->coords) {
      auto [x, y] = std::minmax(all[n].second, all[n - 1].second);
      throw Error(ErrorCode::CollisionError, "points " + to_string(x) + " and " + to_string(y) +
                                                 " coincide at " + to_string(*all[n].first));
    }

  VerticalConfiguration config;
  config.p_ = p;
  config.q_ = q;
  config.clusters_ = std::move(clusters);
  config.shape_ = ClusterShape(std::move(sizes));
  return config;
}

std::string WitnessViolation::describe() const {
  std::string out = axiom == Axiom::W1 ? "W1" : "W2";
  out += " fails in block " + std::to_string(block) + ": " + to_string(first) + " and " + to_string(second);
  out += axiom == Axiom::W1 ? " lie on different t-lines" : " are not stacked in ray order";
  return out;
}

WitnessResult witnesses(const VerticalConfiguration& config, const RayPartition& partition) {
  if (!(config.shape() == partition.shape()))
    throw Error(ErrorCode::ShapeMismatch, "configuration has shape " + config.shape().to_string() +
                                              " but the ray partition has shape " + partition.shape().to_string());
  const auto& blocks = partition.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    const RationalPoint& head = config.point(block.front());
    for (std::size_t m = 1; m < block.size(); ++m) {
      const RationalPoint& current = config.point(block[m]);
      if (!same_zeta(head, current))
        return {false, WitnessViolation{WitnessViolation::Axiom::W1, static_cast<int>(b) + 1, block.front(), block[m]}};
    }
    for (std::size_t m = 1; m < block.size(); ++m)
      if (!less(config.point(block[m - 1]).t(), config.point(block[m]).t()))
        return {false, WitnessViolation{WitnessViolation::Axiom::W2, static_cast<int>(b) + 1, block[m - 1], block[m]}};
  }
  return {};
}

RayPartition greedy_ray_partition(const VerticalConfiguration& config) {
  const ClusterShape& shape = config.shape();
  const int n = shape.total();
  std::vector<bool> assigned(n, false);
  std::vector<Block> blocks;
  for (int seed = 0; seed < n; ++seed) {
    if (assigned[seed]) continue;
    const TableIndex seed_index = shape.at(seed);
    const RationalPoint& origin = config.point(seed_index);
    Block block;
    for (int o = seed; o < n; ++o) {
      if (assigned[o]) continue;
      const TableIndex idx = shape.at(o);
      const RationalPoint& z = config.point(idx);
      if (same_zeta(origin, z) && !less(z.t(), origin.t())) {
        block.push_back(idx);
        assigned[o] = true;
      }
    }
    std::sort(block.begin(), block.end(),
              [&](TableIndex a, TableIndex b) { return less(config.point(a).t(), config.point(b).t()); });
    blocks.push_back(std::move(block));
  }
  return RayPartition::unchecked(shape, std::move(blocks));
}

std::optional<ComponentLabel> component_of(const VerticalConfiguration& config) {
  if (config.q() >= 2) return std::nullopt;
  std::vector<std::vector<int>> perms;
  for (const auto& cluster : config.clusters()) {
    std::vector<int> order(cluster.size());
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return less(cluster[a - 1].t(), cluster[b - 1].t()); });
    perms.push_back(std::move(order));
  }
  return ComponentLabel(std::move(perms));
}

DexterityResult dexterity(const VerticalConfiguration& config) {
  if (config.q() != 1)
    throw Error(ErrorCode::UnsupportedQ, "dexterity is defined for q = 1, got q = " + std::to_string(config.q()));
  const auto& clusters = config.clusters();
  const int r = static_cast<int>(clusters.size());
  struct Range {
    Rational lo, hi;
  };
  std::vector<Range> ranges;
  ranges.reserve(r);
  for (const auto& cluster : clusters) {
    auto [lo, hi] = std::minmax_element(cluster.begin(), cluster.end(),
                                        [](const auto& a, const auto& b) { return less(a.t(), b.t()); });
    ranges.push_back({lo->t(), hi->t()});
  }

  DisjointSets sets(r);
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      const bool aligned = same_zeta(clusters[a].front(), clusters[b].front());
      const bool entangled = !less(ranges[b].hi, ranges[a].lo) && !less(ranges[a].hi, ranges[b].lo);
      if (aligned && entangled) sets.unite(a, b);
    }

  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < r; ++i) by_root[sets.find(i)].push_back(i + 1);
  DexterityResult result;
  for (auto& [root, members] : by_root) result.classes.push_back(std::move(members));
  std::sort(result.classes.begin(), result.classes.end());
  result.dexterity = sets.components();
  result.filtration_index = r - result.dexterity;
  return result;
}

VerticalConfiguration stabilise_configuration(const VerticalConfiguration& config, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "cluster size must be >= 1");
  const int p = config.p();
  const int q = config.q();
  if (p == 0 && q == 1)
    throw Error(ErrorCode::InvalidArgument, "stabilisation needs p >= 1 or q >= 2 (no far right in R^{0,1})");

  Rational x = 0;
  bool any = false;
  for (const auto& cluster : config.clusters())
    for (const auto& z : cluster)
      if (!any || z.coords[0] > x) {
        x = z.coords[0];
        any = true;
      }
  x += 2;

  std::vector<RationalPoint> added;
  for (int j = 1; j <= k; ++j) {
    RationalPoint z;
    z.coords.assign(p + q, Rational(0));
    z.coords[0] = x;
    z.coords.back() = j;
    added.push_back(std::move(z));
  }
  auto clusters = config.clusters();
  clusters.push_back(std::move(added));
  return VerticalConfiguration::make(p, q, std::move(clusters));
}

}  // namespace vconf
