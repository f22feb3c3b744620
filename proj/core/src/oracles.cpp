#include "vconf/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "vconf/betti.hpp"
#include "vconf/config_io.hpp"
#include "vconf/enumeration.hpp"
#include "vconf/error.hpp"

namespace vconf {

std::string OracleReport::to_string() const {
  std::string out = (passed ? "PASS " : "FAIL ") + name;
  if (!instance.empty()) out += " [" + instance + "]";
  if (seed) out += " seed=" + std::to_string(*seed);
  if (!passed) out += ": " + counterexample;
  return out;
}

OracleReport pass_report(std::string name, std::string instance) {
  return OracleReport{std::move(name), std::move(instance), true, {}, std::nullopt};
}

OracleReport fail_report(std::string name, std::string instance, std::string counterexample) {
  if (counterexample.empty()) counterexample = "(no detail)";
  return OracleReport{std::move(name), std::move(instance), false, std::move(counterexample), std::nullopt};
}

namespace {

std::string compact_json(const VerticalConfiguration& config) {
  std::string text = configuration_to_json(config);
  std::string out;
  for (char c : text)
    if (c != ' ' && c != '\n') out += c;
  return out;
}

std::string blocks_to_string(const BlockList& blocks) {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += '|';
    for (std::size_t j = 0; j < blocks[b].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks[b][j]);
    }
  }
  return out;
}

}  // namespace

std::vector<RayPartition> brute_force_witnessed(const VerticalConfiguration& config) {
  std::vector<RayPartition> out;
  for_each_ray_partition(
      config.shape(),
      [&](const RayPartition& q) {
        if (witnesses(config, q)) out.push_back(q);
      },
      EnumerationLimits{kBruteForceMaxTotal});
  return out;
}

OracleReport verify_maximality(const VerticalConfiguration& config) {
  const std::string name = "maximality";
  const std::string instance = "shape " + config.shape().to_string();
  const RayPartition greedy = greedy_ray_partition(config);
  const auto witnessed = brute_force_witnessed(config);
  bool found = false;
  for (const auto& q : witnessed) {
    if (q == greedy) {
      found = true;
      continue;
    }
    if (compare_weights(greedy.weight(), q.weight()) != std::strong_ordering::greater)
      return fail_report(name, instance,
                         "greedy " + greedy.to_string() + " " + greedy.weight().to_string() + " does not beat " +
                             q.to_string() + " " + q.weight().to_string() + " on " + compact_json(config));
  }
  if (!found)
    return fail_report(name, instance, "greedy " + greedy.to_string() + " is not witnessed by " + compact_json(config));
  return pass_report(name, instance);
}

OracleReport check_greedy_against_brute_force(const VerticalConfiguration& config) {
  OracleReport report = verify_maximality(config);
  report.name = "greedy-oracle";
  if (!report.passed || config.q() != 1) return report;
  const auto sigma = component_label(greedy_ray_partition(config));
  const auto component = component_of(config);
  if (!component || sigma != *component)
    return fail_report(report.name, report.instance,
                       "Sigma(greedy) = " + sigma.to_string() + " but component_of = " +
                           (component ? component->to_string() : std::string("connected")) + " on " +
                           compact_json(config));
  return report;
}

RandomConfigGenerator::RandomConfigGenerator(std::uint64_t seed, RandomConfigOptions options)
    : rng_(seed), options_(options) {}

Rational RandomConfigGenerator::draw(int spread, int max_den) {
  const int den = std::uniform_int_distribution<int>(1, max_den)(rng_);
  const int num = std::uniform_int_distribution<int>(-spread * den, spread * den)(rng_);
  return Rational(num, den);
}

VerticalConfiguration RandomConfigGenerator::next() {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); };
  const int p = pick(options_.min_p, options_.max_p);
  const int q = pick(options_.min_q, options_.max_q);
  const int r = pick(1, options_.max_clusters);
  std::vector<int> sizes(r);
  for (int& k : sizes) k = pick(1, options_.max_cluster_size);
  int total = 0;
  for (int k : sizes) total += k;
  while (total > options_.max_total) {
    auto largest = std::max_element(sizes.begin(), sizes.end());
    if (*largest > 1) {
      --*largest;
      --total;
    } else {
      sizes.pop_back();
      --total;
    }
  }

  // Small pools make alignment (shared zeta) and stacking common.
  const int head_pool_size = pick(1, 3);
  std::vector<std::vector<Rational>> head_pool(head_pool_size);
  for (auto& h : head_pool)
    for (int c = 0; c < p; ++c) h.push_back(draw(2, 2));
  const int extra_pool_size = pick(1, 2);
  std::vector<std::vector<Rational>> extra_pool(extra_pool_size);
  for (auto& e : extra_pool)
    for (int c = 0; c < q - 1; ++c) e.push_back(draw(1, 2));

  std::vector<RationalPoint> all;
  std::vector<std::vector<RationalPoint>> clusters;
  for (int k : sizes) {
    const auto& head = head_pool[pick(0, head_pool_size - 1)];
    std::vector<RationalPoint> cluster;
    while (static_cast<int>(cluster.size()) < k) {
      RationalPoint z;
      z.coords = head;
      const auto& extra = extra_pool[pick(0, extra_pool_size - 1)];
      z.coords.insert(z.coords.end(), extra.begin(), extra.end());
      z.coords.push_back(draw(3, 2));
      if (std::find(all.begin(), all.end(), z) != all.end()) continue;
      all.push_back(z);
      cluster.push_back(std::move(z));
    }
    clusters.push_back(std::move(cluster));
  }
  return VerticalConfiguration::make(p, q, std::move(clusters));
}

Rational perturbation_epsilon_squared(const VerticalConfiguration& config) {
  std::vector<const RationalPoint*> pts;
  for (const auto& cluster : config.clusters())
    for (const auto& z : cluster) pts.push_back(&z);
  Rational best = 0;
  bool any = false;
  auto consider = [&](const Rational& d2) {
    if (d2 == 0) return;
    if (!any || less(d2, best)) best = d2;
    any = true;
  };
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      Rational zeta2 = 0;
      const auto za = pts[a]->zeta();
      const auto zb = pts[b]->zeta();
      for (std::size_t c = 0; c < za.size(); ++c) zeta2 += (za[c] - zb[c]) * (za[c] - zb[c]);
      consider(zeta2);
      const Rational dt = pts[a]->t() - pts[b]->t();
      consider(dt * dt);
    }
  return any ? best : Rational(1);
}

VerticalConfiguration perturb(const VerticalConfiguration& config, std::mt19937_64& rng) {
  const Rational eps2 = perturbation_epsilon_squared(config);
  const int p = config.p();
  const int d = config.dimension();
  // Each coordinate moves by at most 1/n, so a point moves by at most
  // sqrt(d)/n; pick n with 4 d < eps^2 n^2.
  BigInt n = 1;
  while (Rational(4 * d) >= eps2 * Rational(n * n)) n *= 2;
  constexpr int kSteps = 4;
  auto delta = [&]() -> Rational {
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) return 0;
    const int m = std::uniform_int_distribution<int>(-kSteps, kSteps)(rng);
    return Rational(BigInt(m), n * kSteps);
  };
  std::vector<std::vector<RationalPoint>> clusters;
  for (const auto& cluster : config.clusters()) {
    std::vector<Rational> head_shift(p);
    for (auto& h : head_shift) h = delta();
    std::vector<RationalPoint> moved;
    for (const auto& z : cluster) {
      RationalPoint w = z;
      Rational norm2 = 0;
      for (int c = 0; c < d; ++c) {
        const Rational s = c < p ? head_shift[c] : delta();
        w.coords[c] += s;
        norm2 += s * s;
      }
      if (4 * norm2 >= eps2) throw std::logic_error("perturbation exceeded epsilon / 2");
      moved.push_back(std::move(w));
    }
    clusters.push_back(std::move(moved));
  }
  return VerticalConfiguration::make(p, config.q(), std::move(clusters));
}

OracleReport check_perturbation(const VerticalConfiguration& config, std::mt19937_64& rng) {
  const std::string name = "perturbation";
  const std::string instance = "shape " + config.shape().to_string();
  const VerticalConfiguration moved = perturb(config, rng);
  const auto before = greedy_ray_partition(config).weight();
  const auto after = greedy_ray_partition(moved).weight();
  if (compare_weights(after, before) == std::strong_ordering::greater)
    return fail_report(name, instance,
                       "weight rose from " + before.to_string() + " to " + after.to_string() + ": " +
                           compact_json(config) + " -> " + compact_json(moved));
  return pass_report(name, instance);
}

std::vector<BlockList> all_k_partitions(int k, int w) {
  if (k < 1 || w < 1) throw Error(ErrorCode::InvalidArgument, "need k >= 1 and w >= 1");
  const int n = k * w;
  std::vector<BlockList> out;
  std::vector<int> owner(n + 1, -1);
  BlockList blocks;
  std::function<void()> rec = [&]() {
    int first = 1;
    while (first <= n && owner[first] >= 0) ++first;
    if (first > n) {
      out.push_back(blocks);
      return;
    }
    const int b = static_cast<int>(blocks.size());
    blocks.push_back({first});
    owner[first] = b;
    std::function<void(int)> grow = [&](int from) {
      if (static_cast<int>(blocks[b].size()) == k) {
        rec();
        return;
      }
      for (int h = from; h <= n; ++h) {
        if (owner[h] >= 0) continue;
        owner[h] = b;
        blocks[b].push_back(h);
        grow(h + 1);
        blocks[b].pop_back();
        owner[h] = -1;
      }
    };
    grow(first + 1);
    owner[first] = -1;
    blocks.pop_back();
  };
  rec();
  return out;
}

bool overlap_graph_connected(const BlockList& blocks) {
  const std::size_t w = blocks.size();
  if (w <= 1) return true;
  std::vector<std::pair<int, int>> span;
  for (const auto& b : blocks) {
    const auto [lo, hi] = std::minmax_element(b.begin(), b.end());
    span.emplace_back(*lo, *hi);
  }
  std::vector<bool> reached(w, false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < w; ++b)
      if (!reached[b] && span[a].first <= span[b].second && span[b].first <= span[a].second) {
        reached[b] = true;
        ++count;
        stack.push_back(b);
      }
  }
  return count == w;
}

OracleReport check_irreducibility_equivalence(int k, int w, int p) {
  const std::string name = "irreducibility";
  const std::string instance = "k=" + std::to_string(k) + " w=" + std::to_string(w);
  const std::vector<std::vector<Rational>> zero(w - 1, std::vector<Rational>(p, Rational(0)));
  std::vector<BlockList> irreducible;
  for (const auto& blocks : all_k_partitions(k, w)) {
    const bool irr = !is_reducible(k, blocks);
    const bool conn = overlap_graph_connected(blocks);
    const bool single = dexterity(standard_configuration(k, blocks, zero, p)).dexterity == 1;
    if (irr != conn || conn != single)
      return fail_report(name, instance,
                         blocks_to_string(blocks) + ": irreducible=" + (irr ? "yes" : "no") +
                             " overlap-connected=" + (conn ? "yes" : "no") +
                             " dexterity-one=" + (single ? "yes" : "no"));
    if (irr) irreducible.push_back(blocks);
  }
  std::vector<BlockList> listed;
  for (const auto& e : enumerate_irreducible(k, w, IrreducibleLimits{std::max(14, k * w)})) listed.push_back(e.blocks());
  std::sort(irreducible.begin(), irreducible.end());
  std::sort(listed.begin(), listed.end());
  if (irreducible != listed)
    return fail_report(name, instance,
                       "enumerate_irreducible lists " + std::to_string(listed.size()) + " partitions, brute force finds " +
                           std::to_string(irreducible.size()));
  return pass_report(name, instance + " |E_w|=" + std::to_string(listed.size()));
}

OracleReport check_insertion_stratum(const LabeledConfiguration& theta) {
  const std::string name = "insertion-stratum";
  std::string instance = "p=" + std::to_string(theta.p()) + " k=" + std::to_string(theta.k()) +
                         " r=" + std::to_string(theta.r()) + " s=" + std::to_string(theta.s());
  const int delta = dexterity(insertion_map(theta)).dexterity;
  const int floor = theta.r() - theta.s();
  const bool zero = theta.all_parameters_zero();
  if (delta < floor || (delta == floor) != zero) {
    std::string labels;
    for (const auto& pt : theta.points()) labels += " " + pt.label.to_string();
    return fail_report(name, instance,
                       "dexterity " + std::to_string(delta) + " vs r-s " + std::to_string(floor) +
                           (zero ? " (all parameters zero)" : " (some parameter nonzero)") + " labels" + labels);
  }
  return pass_report(name, instance);
}

void labeled_sweep(const LabeledSweepOptions& options,
                   const std::function<void(const LabeledConfiguration&)>& visit) {
  const int p = options.p;
  const int k = options.k;
  auto labels_up_to = [&](int max_wk) {
    std::vector<IrreduciblePartition> labels;
    for (int w = 1; w * k <= max_wk; ++w) {
      auto level = enumerate_irreducible(k, w, IrreducibleLimits{std::max(14, max_wk)});
      labels.insert(labels.end(), level.begin(), level.end());
    }
    return labels;
  };
  const auto labels = labels_up_to(options.max_wk);

  auto point = [&](std::initializer_list<std::pair<int, Rational>> set) {
    RationalPoint y;
    y.coords.assign(p + 1, Rational(0));
    for (const auto& [c, v] : set) y.coords[c] = v;
    return y;
  };
  const RationalPoint origin = point({});
  const RationalPoint up = point({{p, 1}});
  std::vector<std::vector<RationalPoint>> position_sets{{origin}};
  if (options.max_points >= 2) {
    position_sets.push_back({origin, up});
    if (p >= 1) position_sets.push_back({origin, point({{0, 1}})});
    if (p >= 2) position_sets.push_back({origin, point({{0, 3}, {1, 4}})});
  }
  if (options.max_points >= 3) {
    if (p >= 1)
      position_sets.push_back({origin, up, point({{0, 1}, {p, Rational(1, 2)}})});
    else
      position_sets.push_back({origin, up, point({{p, 2}})});
  }

  std::vector<Rational> nonzero(p, Rational(0));
  if (p >= 1) nonzero[0] = Rational(1, 2);

  for (const auto& ys : position_sets) {
    const auto& pool = labels;
    if (pool.empty()) continue;
    const std::size_t n = ys.size();
    std::vector<std::size_t> choice(n, 0);
    while (true) {
      const auto heavy = std::count_if(choice.begin(), choice.end(), [&](std::size_t c) {
        return pool[c].weight() * k > options.companion_max_wk;
      });
      if (heavy <= 1) {
        std::vector<LabeledPoint> pts;
        for (std::size_t l = 0; l < n; ++l) {
          const auto& e = pool[choice[l]];
          pts.push_back(
              LabeledPoint{ys[l], e, std::vector<std::vector<Rational>>(e.weight() - 1, std::vector<Rational>(p))});
        }
        visit(LabeledConfiguration::make(p, k, pts));
        if (p >= 1)
          for (std::size_t l = 0; l < n; ++l)
            for (auto& slot : pts[l].xi) {
              const auto saved = slot;
              slot = nonzero;
              visit(LabeledConfiguration::make(p, k, pts));
              slot = saved;
            }
      }
      std::size_t pos = 0;
      while (pos < n && ++choice[pos] == pool.size()) choice[pos++] = 0;
      if (pos == n) break;
    }
  }
}

namespace {

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (int part = 1; part <= left; ++part) {
      current.push_back(part);
      rec(left - part);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

std::string table_string(const std::map<long long, BigInt>& ranks) {
  std::string out;
  for (const auto& [d, rank] : ranks) out += (out.empty() ? "" : " ") + std::to_string(d) + ":" + rank.str();
  return "{" + out + "}";
}

std::vector<OracleReport> suite_count_identity(const SuiteLimits& limits) {
  std::vector<OracleReport> out;
  for (int n = 1; n <= limits.count_max_total; ++n)
    for (const auto& sizes : compositions(n)) {
      const ClusterShape shape(sizes);
      const std::string instance = "shape " + shape.to_string();
      const BigInt count = count_ray_partitions(shape, 1, EnumerationLimits{std::max(12, n)});
      if (count == factorial(n))
        out.push_back(pass_report("count-identity", instance));
      else
        out.push_back(fail_report("count-identity", instance, count.str() + " ray partitions, expected " + factorial(n).str()));
    }
  return out;
}

std::vector<OracleReport> suite_arnold(const SuiteLimits& limits) {
  std::vector<OracleReport> out;
  for (int q : {2, 3})
    for (int n = 1; n <= limits.arnold_max_n; ++n) {
      std::vector<std::vector<int>> shapes{std::vector<int>(n, 1), {n}};
      if (n >= 3) {
        std::vector<int> mixed(n - 2, 1);
        mixed.insert(mixed.begin(), 2);
        shapes.push_back(mixed);
      }
      for (const auto& sizes : shapes) {
        const ClusterShape shape(sizes);
        const std::string instance = "shape " + shape.to_string() + " q=" + std::to_string(q);
        const auto got = PoincarePolynomial::from_table(betti_table(shape, 0, q));
        const auto want = arnold_reference_polynomial(n, q);
        if (got == want)
          out.push_back(pass_report("arnold", instance));
        else
          out.push_back(fail_report("arnold", instance, "got " + got.to_string() + ", expected " + want.to_string()));
      }
    }
  return out;
}

std::vector<OracleReport> suite_component_symmetry(const SuiteLimits&) {
  std::vector<OracleReport> out;
  for (const auto& sizes : std::vector<std::vector<int>>{{2, 1}, {2, 2}, {3, 1}, {3, 3}, {2, 2, 2}}) {
    const ClusterShape shape(sizes);
    const std::string instance = "shape " + shape.to_string() + " p=1";
    const auto tables = component_betti_tables(shape, 1);
    const auto aggregate = betti_table(shape, 1, 1);
    BigInt symmetry = 1;
    for (int k : sizes) symmetry *= factorial(k);
    std::string problem;
    if (BigInt(tables.size()) != symmetry) problem = std::to_string(tables.size()) + " components, expected " + symmetry.str();
    const auto& reference = tables.begin()->second.ranks;
    for (const auto& [label, table] : tables)
      if (problem.empty() && table.ranks != reference)
        problem = "component " + label.to_string() + " has " + table_string(table.ranks) + ", identity has " +
                  table_string(reference);
    if (problem.empty())
      for (const auto& [d, rank] : aggregate.ranks) {
        auto it = reference.find(d);
        if (it == reference.end() || it->second * symmetry != rank) {
          problem = "aggregate " + table_string(aggregate.ranks) + " is not " + symmetry.str() + " x " + table_string(reference);
          break;
        }
      }
    if (problem.empty() && aggregate.ranks.size() != reference.size()) problem = "aggregate misses degrees";
    out.push_back(problem.empty() ? pass_report("component-symmetry", instance)
                                  : fail_report("component-symmetry", instance, problem));
  }
  return out;
}

std::vector<OracleReport> suite_irreducibility(const SuiteLimits& limits) {
  std::vector<OracleReport> out;
  for (int k = 1; k <= limits.irreducible_max_k; ++k)
    for (int w = 1; w * k <= limits.irreducible_max_wk; ++w) out.push_back(check_irreducibility_equivalence(k, w));
  return out;
}

std::vector<OracleReport> suite_closed_form(const SuiteLimits&) {
  std::vector<OracleReport> out;
  for (int k : {1, 2})
    for (int p : {1, 2}) {
      const ClusterShape shape({k, k, k});
      const std::string instance = "k=" + std::to_string(k) + " p=" + std::to_string(p);
      const auto got = betti_table(shape, p, 1, ComponentLabel::identity(shape));
      const auto want = closed_form_r3(k, p);
      if (got.ranks == want.ranks)
        out.push_back(pass_report("closed-form-r3", instance));
      else
        out.push_back(fail_report("closed-form-r3", instance,
                                  "enumeration " + table_string(got.ranks) + " vs closed form " + table_string(want.ranks)));
    }
  return out;
}

std::vector<OracleReport> suite_degree_inequality(const SuiteLimits& limits) {
  std::vector<OracleReport> out;
  const IrreducibleLimits guard{};
  for (int k = 1; k <= 3; ++k) {
    std::string problem;
    int checked = 0;
    for (int r1 = 1; r1 <= limits.distribution_max_r && problem.empty(); ++r1)
      for (int s = 0; s <= r1 && (s + 1) * k <= guard.max_wk && problem.empty(); ++s)
        for (const auto& alpha : enumerate_distributions(k, r1, s, guard)) {
          if (alpha.r() != r1 || alpha.s() != s) {
            problem = alpha.to_string() + " has degree (" + std::to_string(alpha.r()) + "," + std::to_string(alpha.s()) +
                      "), listed under (" + std::to_string(r1) + "," + std::to_string(s) + ")";
            break;
          }
          if (alpha.multiplicity(IrreduciblePartition::base(k)) != 0) continue;
          ++checked;
          if (2 * s < r1) {
            problem = alpha.to_string() + " violates s >= (r+1)/2";
            break;
          }
        }
    const std::string instance = "k=" + std::to_string(k) + " r+1<=" + std::to_string(limits.distribution_max_r);
    out.push_back(problem.empty() ? pass_report("degree-inequality", instance + " checked=" + std::to_string(checked))
                                  : fail_report("degree-inequality", instance, problem));
  }
  return out;
}

}  // namespace

std::vector<OracleReport> consistency_suite(const SuiteLimits& limits) {
  using Item = std::function<std::vector<OracleReport>(const SuiteLimits&)>;
  const std::vector<Item> items{suite_count_identity,   suite_arnold,      suite_component_symmetry,
                                suite_irreducibility,   suite_closed_form, suite_degree_inequality};
  std::vector<std::vector<OracleReport>> results(items.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&]() {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = items[i](limits);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int jobs = std::clamp(limits.jobs, 1, static_cast<int>(items.size()));
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<OracleReport> reports;
  for (auto& r : results) reports.insert(reports.end(), r.begin(), r.end());
  std::stable_sort(reports.begin(), reports.end(), [](const OracleReport& a, const OracleReport& b) {
    return std::tie(a.name, a.instance) < std::tie(b.name, b.instance);
  });
  return reports;
}

}  // namespace vconf
