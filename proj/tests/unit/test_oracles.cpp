#include <doctest.h>

#include <set>

#include "vconf/error.hpp"
#include "vconf/oracles.hpp"

using namespace vconf;

namespace {

VerticalConfiguration single_cluster(std::vector<int> ts) {
  std::vector<RationalPoint> pts;
  for (int t : ts) pts.push_back(make_point({0, t}));
  return VerticalConfiguration::make(1, 1, {pts});
}

std::set<std::string> texts(const std::vector<RayPartition>& qs) {
  std::set<std::string> out;
  for (const auto& q : qs) out.insert(q.to_string());
  return out;
}

}  // namespace

TEST_CASE("brute-force witnessed partitions") {
  CHECK(texts(brute_force_witnessed(single_cluster({3, 1, 2}))) == std::set<std::string>{"1.1 | 1.2 | 1.3", "1.1 | 1.2 1.3"});
  CHECK(texts(brute_force_witnessed(single_cluster({1, 2}))) == std::set<std::string>{"1.1 | 1.2", "1.1 1.2"});
  const auto generic = VerticalConfiguration::make(
      1, 1, {{make_point({0, 0})}, {make_point({1, 0})}, {make_point({2, 5})}});
  CHECK(texts(brute_force_witnessed(generic)) == std::set<std::string>{"1.1 | 2.1 | 3.1"});

  try {
    brute_force_witnessed(single_cluster({1, 2, 3, 4, 5, 6, 7, 8}));
    FAIL("expected SizeGuard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeGuard);
  }
}

TEST_CASE("maximality oracle") {
  CHECK(verify_maximality(single_cluster({3, 1, 2})).passed);
  CHECK(verify_maximality(single_cluster({1, 2, 3})).passed);
  const auto generic = VerticalConfiguration::make(0, 2, {{make_point({0, 0}), make_point({1, 0})}});
  CHECK(verify_maximality(generic).passed);
  CHECK(check_greedy_against_brute_force(single_cluster({2, 3, 1})).passed);
}

TEST_CASE("reports carry counterexamples") {
  const auto bad = fail_report("x", "y", "");
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.counterexample.empty());
  CHECK(bad.to_string().rfind("FAIL x [y]", 0) == 0);
  CHECK(pass_report("x", "y").to_string() == "PASS x [y]");
}

TEST_CASE("random generator is reproducible and exercises alignment") {
  RandomConfigGenerator a(42), b(42);
  int stacked = 0;
  for (int i = 0; i < 200; ++i) {
    const auto za = a.next();
    CHECK(za == b.next());
    CHECK(za.shape().total() <= 6);
    if (greedy_ray_partition(za).length() < za.shape().total()) ++stacked;
  }
  CHECK(stacked > 50);
}

TEST_CASE("perturbations stay within half epsilon and keep validity") {
  RandomConfigGenerator gen(9);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto z = gen.next();
    const auto eps2 = perturbation_epsilon_squared(z);
    const auto moved = perturb(z, rng);
    CHECK(moved.shape() == z.shape());
    for (int c = 1; c <= z.shape().clusters(); ++c)
      for (int j = 1; j <= z.shape().size(c); ++j) {
        Rational d2 = 0;
        const auto& a = z.point({c, j}).coords;
        const auto& b = moved.point({c, j}).coords;
        for (std::size_t x = 0; x < a.size(); ++x) d2 += (a[x] - b[x]) * (a[x] - b[x]);
        CHECK(4 * d2 < eps2);
      }
    CHECK(check_perturbation(z, rng).passed);
  }
}

TEST_CASE("irreducibility cross-checks") {
  CHECK(all_k_partitions(2, 2).size() == 3);
  CHECK(all_k_partitions(2, 3).size() == 15);
  CHECK(all_k_partitions(3, 2).size() == 10);
  CHECK(all_k_partitions(1, 4).size() == 1);
  CHECK(overlap_graph_connected({{1, 3}, {2, 4}}));
  CHECK_FALSE(overlap_graph_connected({{1, 2}, {3, 4}}));
  CHECK(overlap_graph_connected({{1, 4}, {2, 3}}));
  for (int w = 1; w <= 3; ++w) CHECK(check_irreducibility_equivalence(2, w).passed);
  CHECK(check_irreducibility_equivalence(1, 4).passed);
  CHECK(check_irreducibility_equivalence(3, 2, 2).passed);
}

TEST_CASE("insertion stratum over a small sweep") {
  std::size_t seen = 0, zero = 0;
  labeled_sweep(LabeledSweepOptions{1, 2, 2, 6, 6}, [&](const LabeledConfiguration& theta) {
    ++seen;
    if (theta.all_parameters_zero()) ++zero;
    CHECK(check_insertion_stratum(theta).passed);
  });
  CHECK(seen > 100);
  CHECK(zero > 0);
  CHECK(zero < seen);
}

TEST_CASE("labeled sweep keeps at most one heavy label") {
  // k = 2, w k <= 6: 1 + 2 + 10 labels, three with w k <= 4. With p = 0
  // there is one two-point set and no disc parameters.
  auto count = [](int companion) {
    std::size_t n = 0;
    labeled_sweep(LabeledSweepOptions{0, 2, 2, 6, companion}, [&](const LabeledConfiguration&) { ++n; });
    return n;
  };
  CHECK(count(4) == 13 + 3 * 3 + 2 * 10 * 3);
  CHECK(count(6) == 13 + 13 * 13);
}

TEST_CASE("consistency suite") {
  SuiteLimits limits;
  limits.count_max_total = 4;
  limits.arnold_max_n = 4;
  limits.irreducible_max_wk = 8;
  limits.distribution_max_r = 4;
  limits.jobs = 3;
  const auto reports = consistency_suite(limits);
  std::set<std::string> suite_names;
  for (const auto& r : reports) {
    INFO(r.to_string());
    CHECK(r.passed);
    suite_names.insert(r.name);
  }
  CHECK(suite_names == std::set<std::string>{"arnold", "closed-form-r3", "component-symmetry", "count-identity",
                                             "degree-inequality", "irreducibility"});
  CHECK(std::is_sorted(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.name, a.instance) < std::tie(b.name, b.instance);
  }));
  limits.jobs = 1;
  const auto again = consistency_suite(limits);
  REQUIRE(again.size() == reports.size());
  for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i].to_string() == reports[i].to_string());
}
