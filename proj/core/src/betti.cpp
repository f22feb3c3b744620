#include "vconf/betti.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sharded.hpp"
#include "vconf/error.hpp"

namespace vconf {

namespace {

// Counts indexed by (agility, length); the degree only depends on these two.
struct LengthAgilityCounts {
  int max_length = 0;
  std::vector<std::uint64_t> cells;

  void add(int agility, int length) { ++cells[agility * (max_length + 1) + length]; }
};

void check_pq(int p, int q) {
  if (p < 0 || q < 1) throw Error(ErrorCode::InvalidArgument, "need p >= 0 and q >= 1");
}

// Stacked order check: walking blocks from last to first yields, per cluster,
// sigma_i(1), sigma_i(2), ...
bool sigma_matches(const std::vector<Block>& blocks, const ComponentLabel& target, std::vector<int>& cursor) {
  std::fill(cursor.begin(), cursor.end(), 0);
  const auto& perms = target.permutations();
  for (auto block = blocks.rbegin(); block != blocks.rend(); ++block)
    for (TableIndex idx : *block)
      if (perms[idx.cluster - 1][cursor[idx.cluster - 1]++] != idx.position) return false;
  return true;
}

std::vector<std::uint8_t> sigma_key(const std::vector<Block>& blocks, const ClusterShape& shape,
                                    const std::vector<int>& offsets, std::vector<int>& cursor) {
  std::vector<std::uint8_t> key(shape.total());
  std::fill(cursor.begin(), cursor.end(), 0);
  for (auto block = blocks.rbegin(); block != blocks.rend(); ++block)
    for (TableIndex idx : *block)
      key[offsets[idx.cluster - 1] + cursor[idx.cluster - 1]++] = static_cast<std::uint8_t>(idx.position);
  return key;
}

void fold(const std::vector<std::uint64_t>& cells, int r, int n, int p, int q,
          std::map<long long, BigInt>& ranks) {
  for (int a = 0; a <= r; ++a)
    for (int l = 0; l <= n; ++l) {
      const std::uint64_t c = cells[a * (n + 1) + l];
      if (c) ranks[ray_degree(p, q, r, n, l, a)] += c;
    }
}

}  // namespace

BigInt BettiTable::total_rank() const {
  BigInt total = 0;
  for (const auto& [degree, rank] : ranks) total += rank;
  return total;
}

std::string BettiTable::to_csv() const {
  std::string out = "degree,rank\n";
  for (const auto& [degree, rank] : ranks) out += std::to_string(degree) + "," + rank.str() + "\n";
  return out;
}

BettiTable betti_table(const ClusterShape& shape, int p, int q, const std::optional<ComponentLabel>& component,
                       const BettiOptions& options) {
  check_pq(p, q);
  if (component && q != 1)
    throw Error(ErrorCode::ComponentMeaningless,
                "a component label was given but q = " + std::to_string(q) + " >= 2; the space is connected");
  if (component && !component->fits(shape))
    throw Error(ErrorCode::ShapeMismatch, "component label " + component->to_string() +
                                              " does not fit shape " + shape.to_string());
  check_enumeration_guard(shape, options.limits);

  const int r = shape.clusters();
  const int n = shape.total();
  auto make = [&] {
    LengthAgilityCounts acc;
    acc.max_length = n;
    acc.cells.assign((r + 1) * (n + 1), 0);
    return acc;
  };

  struct Shard {
    LengthAgilityCounts counts;
    std::vector<int> cursor;
    bool ready = false;
  };
  auto shards = detail::run_sharded<Shard>(shape, options.jobs, [&](Shard& shard, const RayBuilder& b) {
    if (!shard.ready) {
      shard.counts = make();
      shard.cursor.assign(r, 0);
      shard.ready = true;
    }
    if (component && !sigma_matches(b.blocks(), *component, shard.cursor)) return;
    shard.counts.add(b.agility(), b.length());
  });

  BettiTable table{shape, p, q, component, {}};
  for (const auto& shard : shards)
    if (shard.ready) fold(shard.counts.cells, r, n, p, q, table.ranks);
  return table;
}

std::map<ComponentLabel, BettiTable> component_betti_tables(const ClusterShape& shape, int p,
                                                            const BettiOptions& options) {
  check_pq(p, 1);
  check_enumeration_guard(shape, options.limits);
  const int r = shape.clusters();
  const int n = shape.total();
  std::vector<int> offsets(r, 0);
  for (int i = 1; i < r; ++i) offsets[i] = offsets[i - 1] + shape.sizes()[i - 1];

  using Cells = std::vector<std::uint64_t>;
  struct Shard {
    std::map<std::vector<std::uint8_t>, Cells> by_key;
    std::vector<int> cursor;
  };
  auto shards = detail::run_sharded<Shard>(shape, options.jobs, [&](Shard& shard, const RayBuilder& b) {
    if (shard.cursor.size() != static_cast<std::size_t>(r)) shard.cursor.assign(r, 0);
    auto key = sigma_key(b.blocks(), shape, offsets, shard.cursor);
    auto [it, inserted] = shard.by_key.try_emplace(std::move(key));
    if (inserted) it->second.assign((r + 1) * (n + 1), 0);
    ++it->second[b.agility() * (n + 1) + b.length()];
  });

  std::map<ComponentLabel, BettiTable> out;
  for (const auto& shard : shards) {
    for (const auto& [key, cells] : shard.by_key) {
      std::vector<std::vector<int>> perms(r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < shape.sizes()[i]; ++j) perms[i].push_back(key[offsets[i] + j]);
      ComponentLabel label(std::move(perms));
      auto [it, inserted] = out.try_emplace(label);
      if (inserted) it->second = BettiTable{shape, p, 1, label, {}};
      fold(cells, r, n, p, 1, it->second.ranks);
    }
  }
  return out;
}

BettiTable betti_table_by_symmetry(const ClusterShape& shape, int p, const BettiOptions& options) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "the symmetry shortcut needs p >= 1");
  BettiTable aggregate = betti_table(shape, p, 1, std::nullopt, options);
  BigInt order = 1;
  for (int k : shape.sizes()) order *= factorial(k);
  BettiTable table{shape, p, 1, ComponentLabel::identity(shape), {}};
  for (const auto& [degree, rank] : aggregate.ranks) {
    if (rank % order != 0)
      throw Error(ErrorCode::InvalidArgument, "rank in degree " + std::to_string(degree) +
                                                  " is not divisible by prod k_i!");
    table.ranks[degree] = rank / order;
  }
  return table;
}

PoincarePolynomial::PoincarePolynomial(std::map<long long, BigInt> coefficients) {
  for (auto& [e, c] : coefficients)
    if (c != 0) coeffs_[e] = std::move(c);
}

PoincarePolynomial PoincarePolynomial::from_table(const BettiTable& table) {
  return PoincarePolynomial(table.ranks);
}

BigInt PoincarePolynomial::coefficient(long long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& other) const {
  std::map<long long, BigInt> product;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : other.coeffs_) product[e1 + e2] += c1 * c2;
  return PoincarePolynomial(std::move(product));
}

std::string PoincarePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (e == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

PoincarePolynomial arnold_reference_polynomial(int n, int q) {
  if (n < 1 || q < 2) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and q >= 2");
  PoincarePolynomial result({{0, BigInt(1)}});
  for (int i = 1; i < n; ++i) result = result * PoincarePolynomial({{0, BigInt(1)}, {q - 1, BigInt(i)}});
  return result;
}

BettiTable closed_form_r3(int k, int p) {
  if (k < 1 || p < 1) throw Error(ErrorCode::InvalidArgument, "need k >= 1 and p >= 1");
  const BigInt c2 = binomial(2 * k, k);
  const BigInt c3 = binomial(3 * k, k);
  const ClusterShape shape({k, k, k});
  BettiTable table{shape, p, 1, ComponentLabel::identity(shape), {}};
  table.ranks[0] = 1;
  table.ranks[p] = 3 * (c2 - 1);
  table.ranks[2LL * p] = c3 * c2 - 3 * c2 + 2;
  return table;
}

ConjectureScan conjecture_scan(int k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "need k_max >= 1");
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float pi = boost::math::constants::pi<Float>();
  const Float sqrt3 = boost::multiprecision::sqrt(Float(3));

  ConjectureScan scan;
  for (int k = 1; k <= k_max; ++k) {
    ConjectureRow row;
    row.k = k;
    const BigInt c2 = binomial(2 * k, k);
    const BigInt c3 = binomial(3 * k, k);
    row.lhs = c3 * c2 - 3 * c2 + 2;
    const BigInt half = 3 * (c2 - 1);
    row.rhs = half * half;
    row.holds = row.lhs <= row.rhs;
    const Float lhs(row.lhs);
    const Float rhs(row.rhs);
    row.lhs_ratio = static_cast<double>(lhs * 2 * pi * k / (sqrt3 * boost::multiprecision::pow(Float(27), k)));
    row.rhs_ratio = static_cast<double>(rhs * pi * k / (9 * boost::multiprecision::pow(Float(16), k)));
    if (!row.holds && !scan.first_failure) scan.first_failure = k;
    scan.rows.push_back(std::move(row));
  }
  return scan;
}

}  // namespace vconf
