#include "cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vconf/betti.hpp"
#include "vconf/cluster_partitions.hpp"
#include "vconf/config_io.hpp"
#include "vconf/error.hpp"
#include "vconf/geometry.hpp"
#include "vconf/oracles.hpp"
#include "vconf/space_profile.hpp"
#include "vconf/version.hpp"

namespace vconf::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Common {
  bool json = false;
  std::string output;
  int jobs = 1;
  int max_total = 12;
  int max_wk = 14;
};

struct Outcome {
  std::string text;
  Json inputs = Json::object();
  Json results = Json::object();
  Json checks = Json::array();
  int exit = kOk;
};

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

Json report_json(const OracleReport& r) {
  Json j{{"name", r.name}, {"instance", r.instance}, {"passed", r.passed}};
  if (!r.passed) j["counterexample"] = r.counterexample;
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

void add_check(Outcome& o, const std::string& name, bool passed, const std::string& detail = {}) {
  Json j{{"name", name}, {"passed", passed}};
  if (!detail.empty()) j["detail"] = detail;
  o.checks.push_back(std::move(j));
  if (!passed) o.exit = kCheckFailed;
}

Outcome cmd_betti(const Common& c, const std::string& shape_text, int p, int q, const std::string& component_text,
                  bool poincare, bool check_arnold) {
  Outcome o;
  const ClusterShape shape = ClusterShape::parse(shape_text);
  o.inputs = Json{{"shape", shape.to_string()}, {"p", p}, {"q", q}};
  std::optional<ComponentLabel> component;
  if (!component_text.empty()) {
    if (q != 1)
      throw Error(ErrorCode::ComponentMeaningless, "--component only applies to q = 1; for q >= 2 the space is connected");
    component = ComponentLabel::parse(shape, component_text);
    o.inputs["component"] = component->to_string();
  }
  if (check_arnold && p != 0) throw Error(ErrorCode::InvalidArgument, "--check-arnold needs --p 0");

  const BettiTable table = betti_table(shape, p, q, component, BettiOptions{c.jobs, EnumerationLimits{c.max_total}});
  o.text = table.to_csv();
  Json ranks = Json::array();
  for (const auto& [d, rank] : table.ranks) ranks.push_back(Json{{"degree", d}, {"rank", big(rank)}});
  o.results["ranks"] = ranks;
  o.results["total_rank"] = big(table.total_rank());

  const auto poly = PoincarePolynomial::from_table(table);
  if (poincare) {
    o.text += "poincare: " + poly.to_string() + "\n";
    o.results["poincare"] = poly.to_string();
  }
  if (check_arnold) {
    const auto reference = arnold_reference_polynomial(shape.total(), q);
    const bool ok = poly == reference;
    o.text += std::string("check arnold: ") + (ok ? "PASS" : "FAIL") + "\n";
    if (!ok) o.text += "expected: " + reference.to_string() + "\n";
    add_check(o, "arnold", ok, ok ? std::string() : "expected " + reference.to_string());
  }
  return o;
}

Outcome cmd_analyze(const std::string& path, bool verify) {
  Outcome o;
  const VerticalConfiguration config = load_configuration(path);
  const RayPartition greedy = greedy_ray_partition(config);
  const auto stats = ray_partition_stats(greedy, config.p(), config.q());
  o.inputs = Json{{"file", path}, {"verify", verify}};

  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("shape", config.shape().to_string());
  rows.emplace_back("p", std::to_string(config.p()));
  rows.emplace_back("q", std::to_string(config.q()));
  const auto component = component_of(config);
  rows.emplace_back("component", component ? component->to_string() : "connected");
  rows.emplace_back("ray_partition", greedy.to_string());
  rows.emplace_back("weight", stats.weight.to_string());
  rows.emplace_back("length", std::to_string(stats.length));
  rows.emplace_back("agility", std::to_string(stats.agility));
  rows.emplace_back("degree", std::to_string(stats.degree));
  rows.emplace_back("stratum_dim", std::to_string(stats.stratum_dim));
  if (config.q() == 1) {
    const auto dex = dexterity(config);
    rows.emplace_back("dexterity", std::to_string(dex.dexterity));
    rows.emplace_back("filtration_index", std::to_string(dex.filtration_index));
  } else {
    rows.emplace_back("dexterity", "n/a (q > 1)");
  }
  for (const auto& [key, value] : rows) {
    o.text += key + ": " + value + "\n";
    o.results[key] = value;
  }
  if (verify) {
    if (config.shape().total() <= kBruteForceMaxTotal) {
      const auto report = verify_maximality(config);
      o.text += std::string("maximality: ") + (report.passed ? "PASS" : "FAIL") + "\n";
      if (!report.passed) o.text += "counterexample: " + report.counterexample + "\n";
      add_check(o, "maximality", report.passed, report.counterexample);
    } else {
      o.text += "maximality: skipped (more than " + std::to_string(kBruteForceMaxTotal) + " points)\n";
    }
  }
  return o;
}

Outcome cmd_conjecture_scan(int kmax) {
  if (kmax < 1) throw Error(ErrorCode::InvalidArgument, "--kmax must be >= 1");
  Outcome o;
  o.inputs = Json{{"kmax", kmax}};
  const auto scan = conjecture_scan(kmax);
  o.text = "k,lhs,rhs,holds,lhs_ratio,rhs_ratio\n";
  Json rows = Json::array();
  for (const auto& row : scan.rows) {
    o.text += std::to_string(row.k) + "," + row.lhs.str() + "," + row.rhs.str() + "," + (row.holds ? "yes" : "no") +
              "," + fixed(row.lhs_ratio) + "," + fixed(row.rhs_ratio) + "\n";
    rows.push_back(Json{{"k", row.k},
                        {"lhs", big(row.lhs)},
                        {"rhs", big(row.rhs)},
                        {"holds", row.holds},
                        {"lhs_ratio", row.lhs_ratio},
                        {"rhs_ratio", row.rhs_ratio}});
  }
  o.results["rows"] = rows;
  if (scan.first_failure) {
    const auto& row = scan.rows[*scan.first_failure - 1];
    o.text += "minimal failing k: " + std::to_string(*scan.first_failure) + " (" + row.lhs.str() + " > " +
              row.rhs.str() + ")\n";
    o.results["minimal_failing_k"] = *scan.first_failure;
  } else {
    o.text += "minimal failing k: none up to " + std::to_string(kmax) + "\n";
    o.results["minimal_failing_k"] = nullptr;
  }
  return o;
}

Outcome cmd_irreducible(const Common& c, int k, int w, bool list) {
  Outcome o;
  o.inputs = Json{{"k", k}, {"w", w}, {"list", list}};
  const auto parts = enumerate_irreducible(k, w, IrreducibleLimits{c.max_wk});
  o.results["count"] = parts.size();
  if (list) {
    Json names = Json::array();
    for (const auto& e : parts) {
      o.text += e.to_string() + "\n";
      names.push_back(e.to_string());
    }
    o.results["partitions"] = names;
  } else {
    o.text = std::to_string(parts.size()) + "\n";
  }
  return o;
}

Outcome cmd_distributions(const Common& c, int k, int r, int s) {
  Outcome o;
  o.inputs = Json{{"k", k}, {"r", r}, {"s", s}};
  const auto all = enumerate_distributions(k, r, s, IrreducibleLimits{c.max_wk});
  Json names = Json::array();
  for (const auto& alpha : all) {
    o.text += alpha.to_string() + "\n";
    names.push_back(alpha.to_string());
  }
  o.results["count"] = all.size();
  o.results["distributions"] = names;
  return o;
}

Outcome cmd_insert(const std::string& path, bool stabilise) {
  Outcome o;
  o.inputs = Json{{"file", path}, {"stabilise", stabilise}};
  LabeledConfiguration theta = load_labeled_configuration(path);
  if (stabilise) theta = stabilise_labeled(theta);
  const VerticalConfiguration image = insertion_map(theta);
  o.text = configuration_to_json(image);
  o.results["configuration"] = Json::parse(o.text);
  o.results["rho"] = to_string(insertion_radius(theta));
  o.results["r"] = theta.r();
  o.results["s"] = theta.s();
  o.results["dexterity"] = dexterity(image).dexterity;
  return o;
}

Outcome cmd_stability(int r) {
  Outcome o;
  o.inputs = Json{{"r", r}};
  const int m = stability_range(r);
  o.text = std::to_string(m) + "\n";
  o.results["max_degree"] = m;
  return o;
}

Outcome cmd_profile(const std::string& shape_text, int p, int q) {
  Outcome o;
  const ClusterShape shape = ClusterShape::parse(shape_text);
  o.inputs = Json{{"shape", shape.to_string()}, {"p", p}, {"q", q}};
  const auto prof = space_profile(shape, p, q);
  const std::vector<std::pair<std::string, std::string>> rows{
      {"dimension", std::to_string(prof.dimension)},
      {"unordered_orientable", prof.unordered_orientable ? "yes" : "no"},
      {"ordered_components", prof.ordered_components.str()},
      {"unordered_components", prof.unordered_components.str()}};
  for (const auto& [key, value] : rows) {
    o.text += key + ": " + value + "\n";
    o.results[key] = value;
  }
  return o;
}

Outcome cmd_selftest(const Common& c, int samples, std::uint64_t seed) {
  Outcome o;
  o.inputs = Json{{"samples", samples}, {"seed", seed}};
  SuiteLimits limits;
  limits.jobs = c.jobs;
  std::vector<OracleReport> reports = consistency_suite(limits);

  RandomConfigGenerator gen(seed);
  std::mt19937_64 nudge(seed ^ 0x9e3779b97f4a7c15ULL);
  int greedy_failures = 0, perturb_failures = 0;
  OracleReport greedy_first, perturb_first;
  for (int i = 0; i < samples; ++i) {
    const auto config = gen.next();
    auto g = check_greedy_against_brute_force(config);
    if (!g.passed && greedy_failures++ == 0) greedy_first = g;
    auto pr = check_perturbation(config, nudge);
    if (!pr.passed && perturb_failures++ == 0) perturb_first = pr;
  }
  const std::string instance = std::to_string(samples) + " random configurations";
  for (auto [failures, first, name] : {std::tuple{greedy_failures, greedy_first, "greedy-oracle"},
                                       std::tuple{perturb_failures, perturb_first, "perturbation"}}) {
    OracleReport r = failures ? first : pass_report(name, instance);
    r.instance = instance;
    r.seed = seed;
    reports.push_back(r);
  }

  int passed = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    o.text += r.to_string() + "\n";
    list.push_back(report_json(r));
    if (r.passed) ++passed;
    o.checks.push_back(Json{{"name", r.name + " " + r.instance}, {"passed", r.passed}});
  }
  o.results["reports"] = list;
  o.text += "selftest: " + std::to_string(passed) + "/" + std::to_string(reports.size()) + " passed\n";
  if (passed != static_cast<int>(reports.size())) o.exit = kCheckFailed;
  return o;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

int emit(const std::string& command, const Common& c, Outcome& o, double seconds, std::ostream& out) {
  Json manifest{{"command", command},
                {"parameters", o.inputs},
                {"guards", Json{{"max_total", c.max_total}, {"max_wk", c.max_wk}}},
                {"jobs", c.jobs},
                {"wall_clock_seconds", seconds},
                {"outputs", c.output.empty() ? Json::array() : Json::array({c.output})},
                {"version", kVersion}};
  std::string body = o.text;
  if (c.json) {
    Json doc{{"command", command}, {"inputs", o.inputs}, {"results", o.results}, {"checks", o.checks},
             {"manifest", manifest}};
    body = doc.dump(2) + "\n";
  }
  if (c.output.empty()) {
    out << body;
  } else {
    write_file(c.output, body);
    write_file(c.output + ".manifest.json", manifest.dump(2) + "\n");
    out << "wrote " << c.output << "\n";
    for (const auto& check : o.checks)
      out << check["name"].get<std::string>() << ": " << (check["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  return o.exit;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ray partitions, Betti tables and cluster partitions of vertical configuration spaces", "vconf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Common c;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", c.json, "Structured report instead of CSV/text");
    sub->add_option("--output", c.output, "Write the result here, with a manifest next to it");
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-total", c.max_total, "Enumeration guard on |k| (default 12)")->check(CLI::PositiveNumber);
    sub->add_option("--max-wk", c.max_wk, "Guard on w k for irreducible partitions (default 14)")
        ->check(CLI::PositiveNumber);
  };

  std::string shape_text, component_text, file;
  int p = 0, q = 1, k = 1, w = 1, r = 0, s = 0, kmax = 20, samples = 100;
  std::uint64_t seed = 1;
  bool poincare = false, check_arnold = false, verify = false, list = false, stabilise = false;

  auto* betti = app.add_subcommand("betti", "Betti table of an ordered configuration space");
  betti->add_option("--shape", shape_text, "Cluster sizes, e.g. 2,2,2")->required();
  betti->add_option("--p", p, "Shared coordinates")->required()->check(CLI::NonNegativeNumber);
  betti->add_option("--q", q, "Free coordinates")->required()->check(CLI::PositiveNumber);
  betti->add_option("--component", component_text, "q = 1 only: 'id' or permutations like 2,1;1,2");
  betti->add_flag("--poincare", poincare, "Also print the Poincare polynomial");
  betti->add_flag("--check-arnold", check_arnold, "p = 0: compare with prod (1 + i t^(q-1))");
  common(betti);

  auto* analyze = app.add_subcommand("analyze", "Greedy ray partition and dexterity of a configuration file");
  analyze->add_option("file", file, "Configuration JSON")->required();
  analyze->add_flag("--verify", verify, "Check maximality by brute force (up to 7 points)");
  common(analyze);

  auto* scan = app.add_subcommand("conjecture-scan", "Exact LHS/RHS table for three equal clusters");
  scan->add_option("--kmax", kmax, "Largest cluster size")->required();
  common(scan);

  auto* irreducible = app.add_subcommand("irreducible", "Count or list irreducible partitions");
  irreducible->add_option("--k", k, "Cluster size")->required();
  irreducible->add_option("--w", w, "Weight")->required();
  irreducible->add_flag("--list", list, "List the partitions");
  common(irreducible);

  auto* distributions = app.add_subcommand("distributions", "Distributions of degree (r, s)");
  distributions->add_option("--k", k, "Cluster size")->required();
  distributions->add_option("--r", r, "Total weight")->required();
  distributions->add_option("--s", s, "Excess weight")->required();
  common(distributions);

  auto* insert = app.add_subcommand("insert", "Apply the insertion map to a labelled configuration file");
  insert->add_option("file", file, "Labelled configuration JSON")->required();
  insert->add_flag("--stabilise", stabilise, "Add a base-labelled point on the far right first");
  common(insert);

  auto* stability = app.add_subcommand("stability", "Homological stability range for r clusters");
  stability->add_option("--r", r, "Number of clusters")->required()->check(CLI::NonNegativeNumber);
  common(stability);

  auto* selftest = app.add_subcommand("selftest", "Run the oracle consistency suite");
  selftest->add_option("--samples", samples, "Random configurations for the geometric oracles")
      ->check(CLI::NonNegativeNumber);
  selftest->add_option("--seed", seed, "Seed for the random configurations");
  common(selftest);

  auto* profile = app.add_subcommand("profile", "Dimension, orientability and components");
  profile->add_option("--shape", shape_text, "Cluster sizes")->required();
  profile->add_option("--p", p, "Shared coordinates")->required()->check(CLI::NonNegativeNumber);
  profile->add_option("--q", q, "Free coordinates")->required()->check(CLI::PositiveNumber);
  common(profile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o;
    std::string command;
    if (betti->parsed()) {
      command = "betti";
      o = cmd_betti(c, shape_text, p, q, component_text, poincare, check_arnold);
    } else if (analyze->parsed()) {
      command = "analyze";
      o = cmd_analyze(file, verify);
    } else if (scan->parsed()) {
      command = "conjecture-scan";
      o = cmd_conjecture_scan(kmax);
    } else if (irreducible->parsed()) {
      command = "irreducible";
      o = cmd_irreducible(c, k, w, list);
    } else if (distributions->parsed()) {
      command = "distributions";
      o = cmd_distributions(c, k, r, s);
    } else if (insert->parsed()) {
      command = "insert";
      o = cmd_insert(file, stabilise);
    } else if (stability->parsed()) {
      command = "stability";
      o = cmd_stability(r);
    } else if (selftest->parsed()) {
      command = "selftest";
      o = cmd_selftest(c, samples, seed);
    } else {
      command = "profile";
      o = cmd_profile(shape_text, p, q);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(command, c, o, seconds, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::SizeGuard ? kGuard : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace vconf::cli
