#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vconf/cluster_partitions.hpp"
#include "vconf/geometry.hpp"
#include "vconf/ray_partition.hpp"

namespace vconf {

struct OracleReport {
  std::string name;
  std::string instance;
  bool passed = true;
  std::string counterexample;  // set whenever passed is false
  std::optional<std::uint64_t> seed;

  std::string to_string() const;
};

OracleReport pass_report(std::string name, std::string instance);
OracleReport fail_report(std::string name, std::string instance, std::string counterexample);

inline constexpr int kBruteForceMaxTotal = 7;

// Every ray partition of the shape that Z witnesses, found by filtering the
// full enumeration. SizeGuard above kBruteForceMaxTotal points.
std::vector<RayPartition> brute_force_witnessed(const VerticalConfiguration& config);

// Greedy partition is witnessed and strictly heavier than every other
// witnessed partition.
OracleReport verify_maximality(const VerticalConfiguration& config);

// Greedy is witnessed, weight-maximal and unique; for q = 1 also checks
// Sigma(greedy) against component_of.
OracleReport check_greedy_against_brute_force(const VerticalConfiguration& config);

struct RandomConfigOptions {
  int max_total = 6;
  int max_clusters = 4;
  int max_cluster_size = 3;
  int min_p = 0, max_p = 2;
  int min_q = 1, max_q = 2;
};

// Exact configurations with small denominators. Coordinates are drawn from
// small pools so that clusters often share a t-line and stack.
class RandomConfigGenerator {
 public:
  explicit RandomConfigGenerator(std::uint64_t seed, RandomConfigOptions options = {});

  VerticalConfiguration next();
  std::mt19937_64& engine() { return rng_; }

 private:
  Rational draw(int spread, int max_den);

  std::mt19937_64 rng_;
  RandomConfigOptions options_;
};

// Squared epsilon: the minimum over distinct pairs of squared zeta-distances
// and squared t-differences (1 if there is no such pair).
Rational perturbation_epsilon_squared(const VerticalConfiguration& config);

// Moves every point by an exact vector of Euclidean length < epsilon / 2,
// shifting the first p coordinates per cluster so verticality is kept. Some
// coordinates are left unchanged on purpose.
VerticalConfiguration perturb(const VerticalConfiguration& config, std::mt19937_64& rng);

// Greedy weight of the perturbation never exceeds the original's.
OracleReport check_perturbation(const VerticalConfiguration& config, std::mt19937_64& rng);

// All partitions of {1..w k} into w blocks of size k, canonical form.
std::vector<BlockList> all_k_partitions(int k, int w);

// Interval overlap graph of the blocks ([min, max] per block) is connected.
bool overlap_graph_connected(const BlockList& blocks);

// Irreducible <=> overlap graph connected <=> dexterity of T_e(0) is 1, over
// all k-partitions with the given k and w; also compares the irreducible ones
// with enumerate_irreducible.
OracleReport check_irreducibility_equivalence(int k, int w, int p = 1);

// dexterity(insertion_map(theta)) >= r - s, with equality exactly when every
// disc parameter is zero.
OracleReport check_insertion_stratum(const LabeledConfiguration& theta);

struct LabeledSweepOptions {
  int p = 1;
  int k = 2;
  int max_points = 3;
  int max_wk = 8;
  // At most one point carries a label with w k above this. Set to max_wk for
  // every tuple of labels.
  int companion_max_wk = 4;
};

// Labeled configurations on fixed point sets of up to max_points points,
// labels ranging over the irreducible partitions with w k <= max_wk. Every
// label occurs at every point; the other points carry labels with
// w k <= companion_max_wk. Each labelling is produced with all disc
// parameters zero and once for every slot with that single parameter set to
// (1/2, 0, ..., 0).
void labeled_sweep(const LabeledSweepOptions& options,
                   const std::function<void(const LabeledConfiguration&)>& visit);

struct SuiteLimits {
  int count_max_total = 7;
  int arnold_max_n = 6;
  int irreducible_max_wk = 12;
  int irreducible_max_k = 3;
  int distribution_max_r = 6;
  int jobs = 1;
};

// Runs items (a)-(f) in parallel; reports come back sorted by name, then
// instance.
std::vector<OracleReport> consistency_suite(const SuiteLimits& limits = {});

}  // namespace vconf
