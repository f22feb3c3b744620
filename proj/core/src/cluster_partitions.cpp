#include "vconf/cluster_partitions.hpp"

#include <algorithm>
#include <map>

#include "vconf/error.hpp"

namespace vconf {

BlockList canonical_k_partition(int k, BlockList blocks) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "cluster size must be >= 1");
  const int n = static_cast<int>(blocks.size()) * k;
  std::vector<bool> seen(n + 1, false);
  for (auto& block : blocks) {
    if (static_cast<int>(block.size()) != k)
      throw Error(ErrorCode::InvalidArgument, "every block must have exactly k = " + std::to_string(k) + " elements");
    std::sort(block.begin(), block.end());
    for (int h : block) {
      if (h < 1 || h > n || seen[h])
        throw Error(ErrorCode::InvalidArgument,
                    "blocks do not partition {1.." + std::to_string(n) + "} (offending element " + std::to_string(h) + ")");
      seen[h] = true;
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

bool is_reducible(int k, const BlockList& canonical_blocks) {
  int max_seen = 0;
  const int w = static_cast<int>(canonical_blocks.size());
  for (int i = 1; i < w; ++i) {
    max_seen = std::max(max_seen, canonical_blocks[i - 1].back());
    if (max_seen == i * k) return true;
  }
  return false;
}

IrreduciblePartition IrreduciblePartition::make(int k, BlockList blocks) {
  if (blocks.empty()) throw Error(ErrorCode::InvalidArgument, "a partition needs at least one block");
  BlockList canonical = canonical_k_partition(k, std::move(blocks));
  if (is_reducible(k, canonical)) {
    IrreduciblePartition tmp(k, canonical);
    throw Error(ErrorCode::NotAnIrreduciblePartition, tmp.to_string() + " has a proper prefix that is a union of blocks");
  }
  return IrreduciblePartition(k, std::move(canonical));
}

IrreduciblePartition IrreduciblePartition::base(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "cluster size must be >= 1");
  std::vector<int> block(k);
  for (int h = 0; h < k; ++h) block[h] = h + 1;
  return IrreduciblePartition(k, BlockList{block});
}

std::string IrreduciblePartition::to_string() const {
  const bool compact = weight() * k_ <= 9;
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    for (std::size_t j = 0; j < blocks_[b].size(); ++j) {
      if (j && !compact) out += ',';
      out += std::to_string(blocks_[b][j]);
    }
  }
  return out;
}

std::strong_ordering IrreduciblePartition::operator<=>(const IrreduciblePartition& other) const {
  if (auto c = k_ <=> other.k_; c != 0) return c;
  if (auto c = weight() <=> other.weight(); c != 0) return c;
  return blocks_ <=> other.blocks_;
}

std::vector<IrreduciblePartition> enumerate_irreducible(int k, int w, const IrreducibleLimits& limits) {
  if (k < 1 || w < 1) throw Error(ErrorCode::InvalidArgument, "need k >= 1 and w >= 1");
  if (w * k > limits.max_wk)
    throw Error(ErrorCode::SizeGuard, "w k = " + std::to_string(w * k) + " exceeds the guard of " +
                                          std::to_string(limits.max_wk) + " (raise max_wk to override)");
  const int n = w * k;
  std::vector<bool> used(n + 1, false);
  BlockList blocks;
  std::vector<IrreduciblePartition> out;
  int max_used = 0;

  // Blocks are opened at the smallest unused element, so blocks come out
  // ordered by minima and partitions in lexicographic order.
  auto open_block = [&](auto&& self) -> void {
    const int placed = static_cast<int>(blocks.size());
    if (placed == w) {
      out.push_back(IrreduciblePartition::make(k, blocks));
      return;
    }
    if (placed > 0 && max_used == placed * k) return;  // {1..placed k} is a union of blocks
    int first = 1;
    while (used[first]) ++first;
    std::vector<int> block{first};
    used[first] = true;
    auto extend = [&](auto&& more, int from) -> void {
      if (static_cast<int>(block.size()) == k) {
        const int saved = max_used;
        max_used = std::max(max_used, block.back());
        blocks.push_back(block);
        self(self);
        blocks.pop_back();
        max_used = saved;
        return;
      }
      for (int h = from; h <= n; ++h) {
        if (used[h]) continue;
        used[h] = true;
        block.push_back(h);
        more(more, h + 1);
        block.pop_back();
        used[h] = false;
      }
    };
    extend(extend, first + 1);
    used[first] = false;
  };
  open_block(open_block);
  return out;
}

void check_disc_parameters(int weight, const std::vector<std::vector<Rational>>& xi, int p) {
  if (static_cast<int>(xi.size()) != weight - 1)
    throw Error(ErrorCode::WrongParameterCount, "expected " + std::to_string(weight - 1) +
                                                    " disc parameters, got " + std::to_string(xi.size()));
  for (std::size_t b = 0; b < xi.size(); ++b) {
    if (static_cast<int>(xi[b].size()) != p)
      throw Error(ErrorCode::DimensionMismatch, "disc parameter " + std::to_string(b + 2) + " has " +
                                                    std::to_string(xi[b].size()) + " coordinates, expected p = " +
                                                    std::to_string(p));
    Rational norm2 = 0;
    for (const auto& c : xi[b]) norm2 += c * c;
    if (norm2 > 1)
      throw Error(ErrorCode::DiscViolation, "disc parameter " + std::to_string(b + 2) +
                                                " lies outside the unit disc (squared norm " + to_string(norm2) + ")");
  }
}

namespace {

Rational standard_height(int h, int k, int w) { return Rational(-1) + Rational(2 * h, k * w + 1); }

}  // namespace

VerticalConfiguration standard_configuration(int k, const BlockList& blocks,
                                             const std::vector<std::vector<Rational>>& xi, int p) {
  const BlockList canonical = canonical_k_partition(k, blocks);
  const int w = static_cast<int>(canonical.size());
  check_disc_parameters(w, xi, p);
  std::vector<std::vector<RationalPoint>> clusters;
  for (int b = 0; b < w; ++b) {
    std::vector<RationalPoint> cluster;
    for (int h : canonical[b]) {
      RationalPoint z;
      z.coords.reserve(p + 1);
      for (int c = 0; c < p; ++c) z.coords.push_back(b == 0 ? Rational(0) : xi[b - 1][c]);
      z.coords.push_back(standard_height(h, k, w));
      cluster.push_back(std::move(z));
    }
    clusters.push_back(std::move(cluster));
  }
  return VerticalConfiguration::make(p, 1, std::move(clusters));
}

VerticalConfiguration standard_group(const IrreduciblePartition& e, const std::vector<std::vector<Rational>>& xi,
                                     int p) {
  return standard_configuration(e.k(), e.blocks(), xi, p);
}

LabeledConfiguration LabeledConfiguration::make(int p, int k, std::vector<LabeledPoint> points) {
  if (p < 0 || k < 1) throw Error(ErrorCode::InvalidArgument, "need p >= 0 and k >= 1");
  for (std::size_t l = 0; l < points.size(); ++l) {
    const auto& pt = points[l];
    if (pt.y.dimension() != p + 1)
      throw Error(ErrorCode::DimensionMismatch, "labelled point " + std::to_string(l + 1) + " has " +
                                                    std::to_string(pt.y.dimension()) + " coordinates, expected p + 1 = " +
                                                    std::to_string(p + 1));
    if (pt.label.k() != k)
      throw Error(ErrorCode::InvalidArgument, "labelled point " + std::to_string(l + 1) +
                                                  " carries a partition for cluster size " +
                                                  std::to_string(pt.label.k()) + ", expected " + std::to_string(k));
    check_disc_parameters(pt.label.weight(), pt.xi, p);
    for (std::size_t m = 0; m < l; ++m)
      if (points[m].y == pt.y)
        throw Error(ErrorCode::CollisionError, "labelled points " + std::to_string(m + 1) + " and " +
                                                   std::to_string(l + 1) + " coincide");
  }
  LabeledConfiguration theta;
  theta.p_ = p;
  theta.k_ = k;
  theta.points_ = std::move(points);
  return theta;
}

int LabeledConfiguration::r() const {
  int total = 0;
  for (const auto& pt : points_) total += pt.label.weight();
  return total;
}

int LabeledConfiguration::s() const { return r() - static_cast<int>(points_.size()); }

bool LabeledConfiguration::all_parameters_zero() const {
  for (const auto& pt : points_)
    for (const auto& x : pt.xi)
      for (const auto& c : x)
        if (c != 0) return false;
  return true;
}

Rational insertion_radius(const LabeledConfiguration& theta) {
  const auto& pts = theta.points();
  if (pts.size() < 2) return 1;
  const int p = theta.p();
  Rational min2;
  bool first = true;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      Rational zeta2 = 0;
      for (int c = 0; c < p; ++c) {
        const Rational d = pts[a].y.coords[c] - pts[b].y.coords[c];
        zeta2 += d * d;
      }
      const Rational dt = pts[a].y.coords[p] - pts[b].y.coords[p];
      const Rational dt2 = dt * dt;
      const Rational& d2 = less(zeta2, dt2) ? dt2 : zeta2;
      if (first || less(d2, min2)) {
        min2 = d2;
        first = false;
      }
    }
  Rational root;
  if (!exact_rational_sqrt(min2, root)) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const BigInt scale = BigInt(1) << 40;
    const BigInt num = numerator(min2);
    const BigInt den = denominator(min2);
    // floor(sqrt(num/den) * 2^40) / 2^40 <= sqrt(num/den)
    root = Rational(isqrt(num * scale * scale / den), scale);
  }
  return root / 5;
}

VerticalConfiguration insertion_map(const LabeledConfiguration& theta) {
  const int p = theta.p();
  const int k = theta.k();
  const Rational rho = insertion_radius(theta);
  std::vector<std::vector<RationalPoint>> clusters;
  for (const auto& pt : theta.points()) {
    const auto& blocks = pt.label.blocks();
    const int w = pt.label.weight();
    for (int b = 0; b < w; ++b) {
      std::vector<RationalPoint> cluster;
      for (int h : blocks[b]) {
        RationalPoint z;
        z.coords.reserve(p + 1);
        for (int c = 0; c < p; ++c)
          z.coords.push_back(pt.y.coords[c] + (b == 0 ? Rational(0) : Rational(rho * pt.xi[b - 1][c])));
        z.coords.push_back(pt.y.coords[p] + rho * standard_height(h, k, w));
        cluster.push_back(std::move(z));
      }
      clusters.push_back(std::move(cluster));
    }
  }
  return VerticalConfiguration::make(p, 1, std::move(clusters));
}

LabeledConfiguration stabilise_labeled(const LabeledConfiguration& theta) {
  Rational x = 0;
  bool any = false;
  for (const auto& pt : theta.points())
    if (!any || pt.y.coords[0] > x) {
      x = pt.y.coords[0];
      any = true;
    }
  RationalPoint y;
  y.coords.assign(theta.p() + 1, Rational(0));
  y.coords[0] = x + 2;
  auto points = theta.points();
  points.push_back(LabeledPoint{std::move(y), IrreduciblePartition::base(theta.k()), {}});
  return LabeledConfiguration::make(theta.p(), theta.k(), std::move(points));
}

Distribution::Distribution(std::vector<Term> terms) {
  std::map<IrreduciblePartition, int> merged;
  for (auto& [e, count] : terms) {
    if (count < 0) throw Error(ErrorCode::InvalidArgument, "multiplicities must be non-negative");
    if (count) merged[e] += count;
  }
  for (auto& [e, count] : merged) terms_.emplace_back(e, count);
}

int Distribution::multiplicity(const IrreduciblePartition& e) const {
  for (const auto& [f, count] : terms_)
    if (f == e) return count;
  return 0;
}

int Distribution::points() const {
  int total = 0;
  for (const auto& [e, count] : terms_) total += count;
  return total;
}

int Distribution::r() const {
  int total = 0;
  for (const auto& [e, count] : terms_) total += count * e.weight();
  return total;
}

int Distribution::s() const {
  int total = 0;
  for (const auto& [e, count] : terms_) total += count * (e.weight() - 1);
  return total;
}

Distribution Distribution::plus_base(int k) const {
  auto terms = terms_;
  terms.emplace_back(IrreduciblePartition::base(k), 1);
  return Distribution(std::move(terms));
}

std::string Distribution::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, count] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(count) + "x" + e.to_string();
  }
  return out;
}

std::vector<Distribution> enumerate_distributions(int k, int r, int s, const IrreducibleLimits& limits) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "cluster size must be >= 1");
  if (s < 0 || r < s) throw Error(ErrorCode::InvalidArgument, "need r >= s >= 0");
  const int slots = r - s;  // number of labelled points
  std::vector<IrreduciblePartition> candidates;
  for (int w = 2; w <= s + 1; ++w) {
    auto level = enumerate_irreducible(k, w, limits);
    candidates.insert(candidates.end(), level.begin(), level.end());
  }

  std::vector<Distribution> out;
  std::vector<Distribution::Term> chosen;
  auto rec = [&](auto&& self, std::size_t i, int s_left, int points_left) -> void {
    if (s_left == 0) {
      auto terms = chosen;
      if (points_left > 0) terms.emplace_back(IrreduciblePartition::base(k), points_left);
      out.emplace_back(std::move(terms));
      return;
    }
    if (i == candidates.size() || points_left == 0) return;
    const int cost = candidates[i].weight() - 1;
    for (int m = 0; m * cost <= s_left && m <= points_left; ++m) {
      if (m) chosen.emplace_back(candidates[i], m);
      self(self, i + 1, s_left - m * cost, points_left - m);
      if (m) chosen.pop_back();
    }
  };
  rec(rec, 0, s, slots);
  std::sort(out.begin(), out.end());
  return out;
}

int permutation_sign(const std::vector<int>& permutation) {
  int inversions = 0;
  for (std::size_t a = 0; a < permutation.size(); ++a)
    for (std::size_t b = a + 1; b < permutation.size(); ++b)
      if (permutation[a] > permutation[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

int orientation_character(const Distribution& alpha, int p, const std::vector<std::vector<int>>& sigma) {
  const auto& terms = alpha.terms();
  if (sigma.size() != terms.size())
    throw Error(ErrorCode::SupportMismatch, "expected one permutation per support element (" +
                                                std::to_string(terms.size()) + "), got " + std::to_string(sigma.size()));
  int sign = 1;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& perm = sigma[i];
    const int count = terms[i].second;
    std::vector<bool> seen(count + 1, false);
    if (static_cast<int>(perm.size()) != count)
      throw Error(ErrorCode::SupportMismatch, "permutation " + std::to_string(i + 1) + " must act on {1.." +
                                                  std::to_string(count) + "}");
    for (int v : perm) {
      if (v < 1 || v > count || seen[v])
        throw Error(ErrorCode::SupportMismatch, "entry " + std::to_string(i + 1) + " is not a permutation");
      seen[v] = true;
    }
    const long long exponent = static_cast<long long>(p) * (terms[i].first.weight() - 1);
    if (exponent % 2 == 1 && permutation_sign(perm) < 0) sign = -sign;
  }
  return sign;
}

int stability_range(int r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "r must be >= 0");
  return r / 2;
}

}  // namespace vconf
