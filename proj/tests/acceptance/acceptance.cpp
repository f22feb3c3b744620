// Acceptance run: one line per criterion, exit status 1 if any fails or
// exceeds its time budget.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli/cli.hpp"
#include "vconf/betti.hpp"
#include "vconf/cluster_partitions.hpp"
#include "vconf/enumeration.hpp"
#include "vconf/oracles.hpp"

using namespace vconf;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> check;
};

int hardware_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 1; part <= left; ++part) {
      cur.push_back(part);
      rec(left - part);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::string ranks_text(const std::map<long long, BigInt>& ranks) {
  std::string out;
  for (const auto& [d, r] : ranks) out += (out.empty() ? "" : " ") + std::to_string(d) + ":" + r.str();
  return "{" + out + "}";
}

Outcome factorial_identity() {
  std::vector<std::vector<int>> shapes{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {2, 2, 2}, {3, 3}, {4, 2}, {2, 2, 2, 2}};
  for (int n = 1; n <= 8; ++n)
    for (auto& c : compositions(n)) shapes.push_back(c);
  for (const auto& sizes : shapes) {
    const ClusterShape shape(sizes);
    const BigInt count = count_ray_partitions(shape, hardware_jobs());
    if (count != factorial(shape.total()))
      return {false, "shape " + shape.to_string() + ": " + count.str() + " != " + factorial(shape.total()).str()};
  }
  return {true, std::to_string(shapes.size()) + " shapes, every composition of n <= 8"};
}

Outcome arnold_oracle() {
  int checked = 0;
  for (int q : {2, 3})
    for (int n = 1; n <= 8; ++n) {
      std::vector<std::vector<int>> shapes{std::vector<int>(n, 1), {n}};
      if (n >= 3) shapes.push_back({n - 2, 1, 1});
      if (n >= 4) shapes.push_back({2, n - 3, 1});
      if (n >= 6) shapes.push_back({3, 3, n - 6 > 0 ? n - 6 : 0});
      for (auto sizes : shapes) {
        std::erase(sizes, 0);
        const ClusterShape shape(sizes);
        BettiOptions opts;
        opts.jobs = hardware_jobs();
        const auto got = PoincarePolynomial::from_table(betti_table(shape, 0, q, std::nullopt, opts));
        const auto want = arnold_reference_polynomial(n, q);
        if (!(got == want))
          return {false, "shape " + shape.to_string() + " q=" + std::to_string(q) + ": " + got.to_string() + " vs " +
                             want.to_string()};
        ++checked;
      }
    }
  return {true, std::to_string(checked) + " tables match prod (1 + i t^(q-1))"};
}

Outcome closed_forms() {
  const std::map<long long, BigInt> k1{{0, 1}, {1, 3}, {2, 2}};
  const std::map<long long, BigInt> k2{{0, 1}, {1, 15}, {2, 74}};
  for (int k : {1, 2}) {
    const ClusterShape shape({k, k, k});
    const auto got = betti_table(shape, 1, 1, ComponentLabel::identity(shape)).ranks;
    const auto& want = k == 1 ? k1 : k2;
    if (got != want || closed_form_r3(k, 1).ranks != want)
      return {false, "k=" + std::to_string(k) + ": enumeration " + ranks_text(got)};
  }
  return {true, "k=1 -> 1,3,2; k=2 -> 1,15,74"};
}

Outcome conjecture() {
  const auto scan = conjecture_scan(20);
  for (int k = 1; k <= 4; ++k)
    if (!scan.rows[k - 1].holds) return {false, "inequality fails at k=" + std::to_string(k)};
  const auto& r5 = scan.rows[4];
  if (!scan.first_failure || *scan.first_failure != 5 || r5.lhs != 756002 || r5.rhs != 567009)
    return {false, "first failure not at k=5 with 756002 vs 567009"};
  // Trend toward 1: the gap shrinks from each k to the next and is small at k = 20.
  for (std::size_t i = 1; i < scan.rows.size(); ++i) {
    const auto& a = scan.rows[i - 1];
    const auto& b = scan.rows[i];
    if (std::abs(1 - b.lhs_ratio) >= std::abs(1 - a.lhs_ratio) || std::abs(1 - b.rhs_ratio) >= std::abs(1 - a.rhs_ratio))
      return {false, "ratio gap grows at k=" + std::to_string(b.k)};
  }
  const auto& last = scan.rows.back();
  if (std::abs(1 - last.lhs_ratio) > 0.02 || std::abs(1 - last.rhs_ratio) > 0.02)
    return {false, "ratios at k=20 not within 0.02 of 1"};
  char buf[160];
  std::snprintf(buf, sizeof buf, "first failure k=5 (756002 > 567009); ratios at k=20: %.4f, %.4f", last.lhs_ratio,
                last.rhs_ratio);
  return {true, buf};
}

Outcome greedy_oracle() {
  constexpr std::uint64_t kSeed = 20240611;
  constexpr int kSamples = 1000;
  RandomConfigGenerator gen(kSeed);
  int q1 = 0, stacked = 0;
  for (int i = 0; i < kSamples; ++i) {
    const auto z = gen.next();
    const auto report = check_greedy_against_brute_force(z);
    if (!report.passed) return {false, "seed " + std::to_string(kSeed) + " sample " + std::to_string(i) + ": " + report.counterexample};
    if (z.q() == 1) ++q1;
    if (greedy_ray_partition(z).length() < z.shape().total()) ++stacked;
  }
  return {true, std::to_string(kSamples) + " configurations (seed " + std::to_string(kSeed) + ", " + std::to_string(q1) +
                    " with q=1, " + std::to_string(stacked) + " with a non-singleton ray)"};
}

Outcome perturbation() {
  constexpr std::uint64_t kSeed = 777;
  constexpr int kSamples = 500;
  RandomConfigGenerator gen(kSeed);
  std::mt19937_64 rng(kSeed + 1);
  int dropped = 0;
  for (int i = 0; i < kSamples; ++i) {
    const auto z = gen.next();
    const auto moved = perturb(z, rng);
    const auto before = greedy_ray_partition(z).weight();
    const auto after = greedy_ray_partition(moved).weight();
    const auto cmp = compare_weights(after, before);
    if (cmp == std::strong_ordering::greater)
      return {false, "seed " + std::to_string(kSeed) + " sample " + std::to_string(i) + ": " + before.to_string() +
                         " -> " + after.to_string()};
    if (cmp == std::strong_ordering::less) ++dropped;
  }
  return {true, std::to_string(kSamples) + " perturbations (seed " + std::to_string(kSeed) + "), weight dropped in " +
                    std::to_string(dropped)};
}

Outcome irreducibility() {
  int partitions = 0;
  for (int k = 1; k <= 3; ++k)
    for (int w = 1; w * k <= 12; ++w) {
      const auto report = check_irreducibility_equivalence(k, w);
      if (!report.passed) return {false, report.instance + ": " + report.counterexample};
      partitions += static_cast<int>(all_k_partitions(k, w).size());
    }
  if (enumerate_irreducible(2, 2).size() != 2) return {false, "|E_2| != 2 at k=2"};
  for (int w = 2; w <= 12; ++w)
    if (!enumerate_irreducible(1, w).empty()) return {false, "E_" + std::to_string(w) + " nonempty at k=1"};
  return {true, std::to_string(partitions) + " k-partitions checked three ways"};
}

Outcome insertion_law() {
  std::size_t total = 0, zero = 0;
  std::string failure;
  for (int p : {1, 2})
    for (int k = 1; k <= 8; ++k) {
      LabeledSweepOptions opts;
      opts.p = p;
      opts.k = k;
      opts.max_points = 3;
      opts.max_wk = 8;
      labeled_sweep(opts, [&](const LabeledConfiguration& theta) {
        if (!failure.empty()) return;
        ++total;
        if (theta.all_parameters_zero()) ++zero;
        const auto report = check_insertion_stratum(theta);
        if (!report.passed) failure = report.instance + ": " + report.counterexample;
      });
    }
  if (!failure.empty()) return {false, failure};
  return {true, std::to_string(total) + " labelled configurations (" + std::to_string(zero) + " with all xi = 0)"};
}

Outcome component_symmetry() {
  for (const auto& sizes : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {2, 2, 2}}) {
    const ClusterShape shape(sizes);
    const auto tables = component_betti_tables(shape, 1);
    const auto aggregate = betti_table(shape, 1, 1);
    BigInt symmetry = 1;
    for (int k : sizes) symmetry *= factorial(k);
    const auto& single = tables.begin()->second.ranks;
    if (BigInt(tables.size()) != symmetry) return {false, "shape " + shape.to_string() + ": wrong component count"};
    for (const auto& [label, table] : tables)
      if (table.ranks != single)
        return {false, "shape " + shape.to_string() + ": component " + label.to_string() + " differs"};
    std::map<long long, BigInt> scaled;
    for (const auto& [d, r] : single) scaled[d] = r * symmetry;
    if (aggregate.ranks != scaled) return {false, "shape " + shape.to_string() + ": aggregate is not single x prod k_i!"};
  }
  return {true, "(2,2), (3,3), (2,2,2)"};
}

Outcome determinism() {
  auto run = [](const std::string& jobs) {
    std::ostringstream out, err;
    const int code = cli::run({"betti", "--shape", "3,3", "--p", "1", "--q", "1", "--jobs", jobs}, out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = run("1");
  const auto b = run("8");
  if (a.first != 0 || b.first != 0) return {false, "betti exited non-zero"};
  if (a.second != b.second) return {false, "CSV differs between --jobs 1 and --jobs 8"};
  return {true, std::to_string(a.second.size()) + " identical bytes"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);

  const std::vector<Criterion> criteria{
      {1, "ray partition count equals |k|!", 5, factorial_identity},
      {2, "p=0 tables equal the Arnold product", 10, arnold_oracle},
      {3, "closed forms for three equal clusters", 1, closed_forms},
      {4, "conjecture scan fails first at k=5", 1, conjecture},
      {5, "greedy partition is the unique heaviest witnessed one", 60, greedy_oracle},
      {6, "small perturbations never raise the greedy weight", 30, perturbation},
      {7, "irreducible <=> overlap-connected <=> dexterity 1", 30, irreducibility},
      {8, "insertion map lands in the expected stratum", 30, insertion_law},
      {9, "per-component tables coincide", 5, component_symmetry},
      {10, "betti CSV identical for --jobs 1 and 8", 5, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool ok = outcome.passed && in_time;
    if (!ok) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs / %.0fs", seconds, c.budget_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << timing << "] "
              << outcome.detail << (in_time ? "" : " (over time budget)") << "\n";
  }
  return failures ? 1 : 0;
}
