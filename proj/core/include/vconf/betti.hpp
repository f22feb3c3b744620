#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vconf/enumeration.hpp"
#include "vconf/numeric.hpp"
#include "vconf/ray_partition.hpp"

namespace vconf {

struct BettiOptions {
  int jobs = 1;
  EnumerationLimits limits{};
};

// Ranks of the integral cohomology of the ordered space, by degree. Absent
// degrees have rank zero.
struct BettiTable {
  ClusterShape shape;
  int p = 0;
  int q = 1;
  std::optional<ComponentLabel> component;  // q = 1 only
  std::map<long long, BigInt> ranks;

  BigInt total_rank() const;
  // "degree,rank" header followed by one row per nonzero degree, ascending.
  std::string to_csv() const;

  bool operator==(const BettiTable&) const = default;
};

// Histogram of |u_Q| over all ray partitions Q of the shape. With a component
// (q = 1 only) only partitions with Sigma(Q) equal to it are counted.
BettiTable betti_table(const ClusterShape& shape, int p, int q,
                       const std::optional<ComponentLabel>& component = std::nullopt,
                       const BettiOptions& options = {});

// One table per path component label, from a single enumeration pass (q = 1).
std::map<ComponentLabel, BettiTable> component_betti_tables(const ClusterShape& shape, int p,
                                                            const BettiOptions& options = {});

// Fast path for q = 1, p >= 1: aggregate table divided by prod k_i!. Relies on
// all components having equal tables; the test suite checks that against the
// filtering path.
BettiTable betti_table_by_symmetry(const ClusterShape& shape, int p, const BettiOptions& options = {});

class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::map<long long, BigInt> coefficients);
  static PoincarePolynomial from_table(const BettiTable& table);

  const std::map<long long, BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(long long exponent) const;
  PoincarePolynomial operator*(const PoincarePolynomial& other) const;
  std::string to_string() const;  // "1 + 3t + 2t^2"

  bool operator==(const PoincarePolynomial&) const = default;

 private:
  std::map<long long, BigInt> coeffs_;  // zero coefficients are never stored
};

// prod_{i=1}^{n-1} (1 + i t^{q-1}): the classical ordered configuration space
// of n points in R^q.
PoincarePolynomial arnold_reference_polynomial(int n, int q);

// Identity-component table of three clusters of size k in R^{p,1}.
BettiTable closed_form_r3(int k, int p);

struct ConjectureRow {
  int k = 0;
  BigInt lhs;  // C(3k,k) C(2k,k) - 3 C(2k,k) + 2
  BigInt rhs;  // (3 (C(2k,k) - 1))^2
  bool holds = false;
  double lhs_ratio = 0;  // lhs * 2 pi k / (sqrt(3) 27^k)
  double rhs_ratio = 0;  // rhs * pi k / (9 16^k)
};

struct ConjectureScan {
  std::vector<ConjectureRow> rows;
  std::optional<int> first_failure;
};

ConjectureScan conjecture_scan(int k_max);

}  // namespace vconf
