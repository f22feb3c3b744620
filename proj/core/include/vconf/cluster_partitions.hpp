#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "vconf/geometry.hpp"
#include "vconf/numeric.hpp"

namespace vconf {

// Unordered partition of {1, ..., w k} into w blocks of size k, stored with
// each block sorted and blocks ordered by their minima.
using BlockList = std::vector<std::vector<int>>;

// Normalises block order; throws InvalidArgument unless the blocks partition
// {1..w k} into pieces of size k.
BlockList canonical_k_partition(int k, BlockList blocks);

// True when some proper prefix {1, ..., i k} (1 <= i < w) is a union of blocks.
bool is_reducible(int k, const BlockList& canonical_blocks);

// An element of E_w: an irreducible partition of weight w for cluster size k.
class IrreduciblePartition {
 public:
  static IrreduciblePartition make(int k, BlockList blocks);
  // e_0, the unique partition of weight 1.
  static IrreduciblePartition base(int k);

  int k() const { return k_; }
  int weight() const { return static_cast<int>(blocks_.size()); }
  const BlockList& blocks() const { return blocks_; }
  bool is_base() const { return weight() == 1; }
  // "13|24"; elements are comma-separated when w k > 9 ("1,3|2,4").
  std::string to_string() const;

  bool operator==(const IrreduciblePartition&) const = default;
  // Canonical order: by k, then weight, then blocks lexicographically.
  std::strong_ordering operator<=>(const IrreduciblePartition& other) const;

 private:
  IrreduciblePartition(int k, BlockList blocks) : k_(k), blocks_(std::move(blocks)) {}

  int k_ = 1;
  BlockList blocks_;
};

struct IrreducibleLimits {
  int max_wk = 14;
};

// All of E_w for cluster size k in canonical order.
std::vector<IrreduciblePartition> enumerate_irreducible(int k, int w, const IrreducibleLimits& limits = {});

// T_e(xi_2, ..., xi_w) in R^{p,1}: block S_b becomes cluster b at disc
// position xi_b (xi_1 = 0) with t-values -1 + 2h/(k w + 1), h in S_b.
// `blocks` may be any canonical k-partition, reducible or not.
VerticalConfiguration standard_configuration(int k, const BlockList& blocks,
                                             const std::vector<std::vector<Rational>>& xi, int p);
VerticalConfiguration standard_group(const IrreduciblePartition& e,
                                     const std::vector<std::vector<Rational>>& xi, int p);

// Disc parameters must have count w - 1, dimension p and squared norm <= 1.
void check_disc_parameters(int weight, const std::vector<std::vector<Rational>>& xi, int p);

struct LabeledPoint {
  RationalPoint y;  // in R^{p+1}
  IrreduciblePartition label;
  std::vector<std::vector<Rational>> xi;  // w(label) - 1 points of D^p

  bool operator==(const LabeledPoint&) const = default;
};

// A point of C_{r,s}: distinct points of R^{p+1}, each labelled by an
// irreducible partition and its disc parameters.
class LabeledConfiguration {
 public:
  static LabeledConfiguration make(int p, int k, std::vector<LabeledPoint> points);

  int p() const { return p_; }
  int k() const { return k_; }
  const std::vector<LabeledPoint>& points() const { return points_; }
  int r() const;  // sum of weights
  int s() const;  // sum of (weight - 1)
  bool all_parameters_zero() const;

  bool operator==(const LabeledConfiguration&) const = default;

 private:
  LabeledConfiguration() = default;

  int p_ = 1;
  int k_ = 1;
  std::vector<LabeledPoint> points_;
};

// rho = (1/5) min over pairs of the product distance max(|d zeta|, |d t|), or
// 1 for fewer than two points. When the minimum is irrational the largest
// rational below it on a 2^-40 grid is used instead.
Rational insertion_radius(const LabeledConfiguration& theta);

// sum_l (y_l + rho T_{e_l}(xi_l)) as a configuration in R^{p,1}.
VerticalConfiguration insertion_map(const LabeledConfiguration& theta);

// Adds an e_0-labelled point at first coordinate max + 2, other coordinates 0.
LabeledConfiguration stabilise_labeled(const LabeledConfiguration& theta);

// A finitely supported multiplicity function on irreducible partitions.
class Distribution {
 public:
  using Term = std::pair<IrreduciblePartition, int>;

  Distribution() = default;
  // Merges repeated partitions; drops zero multiplicities; rejects negatives.
  explicit Distribution(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  int multiplicity(const IrreduciblePartition& e) const;
  int points() const;  // sum of multiplicities
  int r() const;       // sum alpha_e w(e)
  int s() const;       // sum alpha_e (w(e) - 1)
  Distribution plus_base(int k) const;
  std::string to_string() const;  // "2x12 + 1x13|24"

  auto operator<=>(const Distribution&) const = default;

 private:
  std::vector<Term> terms_;
};

// Every distribution of degree (r, s) over E for cluster size k, sorted.
std::vector<Distribution> enumerate_distributions(int k, int r, int s, const IrreducibleLimits& limits = {});

// prod_e sign(sigma_e)^{p (w(e) - 1)}; sigma[i] permutes {1..alpha} for the
// i-th term of alpha.terms().
int orientation_character(const Distribution& alpha, int p, const std::vector<std::vector<int>>& sigma);

int permutation_sign(const std::vector<int>& permutation);

// floor(r / 2): the range m <= r/2 in which stabilisation V_r -> V_{r+1}
// induces isomorphisms on H_m.
int stability_range(int r);

}  // namespace vconf
