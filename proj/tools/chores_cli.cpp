// Command-line front end: instance I/O, algorithm subcommands, verification
// reports, and the monotonicity fuzz driver. JSON on stdout, diagnostics on
// stderr. Exit codes: 0 success, 1 domain failure (failed verification or a
// counterexample), 2 usage or format errors.

#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chores/ffd.hpp"
#include "chores/fptas.hpp"
#include "chores/hffd.hpp"
#include "chores/json_io.hpp"
#include "chores/mms.hpp"
#include "chores/monotonicity.hpp"
#include "chores/reduction.hpp"

using nlohmann::json;
using namespace chores;

namespace {

json rational_value(const Rational& r) {
  if (r.is_integer()) return json(r.num());
  return json(r.str());
}

json bundle_labels(const Bundle& b) {
  json j = json::array();
  for (ChoreId c : b) j.push_back(chore_label(c));
  return j;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(Rational::parse(part));
  return out;
}

void check_oracle_size(const Instance& inst) {
  if (inst.m > kMaxExactChores || inst.n > kMaxExactBundles)
    throw std::invalid_argument("instance exceeds the exact-solver size limit (m <= " +
                                std::to_string(kMaxExactChores) + ", n <= " +
                                std::to_string(kMaxExactBundles) + ")");
}

json partition_labels(const std::vector<Bundle>& parts) {
  json j = json::array();
  for (const auto& p : parts) j.push_back(bundle_labels(p));
  return j;
}

json allocation_report(const IdoInstance& inst, const Allocation& a) {
  json j = allocation_to_json(a);
  json costs = json::array();
  for (const auto& b : a.bundles) {
    long long agent_cost = 0;
    (void)agent_cost;
    json per_agent = json::array();
    for (int i = 0; i < inst.agents(); ++i) per_agent.push_back(inst.cost(i, b));
    costs.push_back(per_agent);
  }
  j["bundle_costs_per_agent"] = costs;
  return j;
}

FfvTuple load_tuple(const std::string& tuple_path, const std::string& instance_path) {
  std::ifstream in(tuple_path);
  if (!in) throw std::invalid_argument("cannot open " + tuple_path);
  json j;
  in >> j;
  if (!instance_path.empty()) {
    IdoInstance ido = to_ido(load_instance_file(instance_path));
    return tuple_from_json(j, &ido);
  }
  return tuple_from_json(j);
}

struct FuzzHit {
  unsigned seed;
  json tuple;
};

std::vector<long long> random_costs(unsigned seed, int max_m, long long max_cost) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> m_dist(2, max_m);
  std::uniform_int_distribution<long long> c_dist(1, max_cost);
  int m = m_dist(rng);
  std::vector<long long> costs(m);
  for (auto& c : costs) c = c_dist(rng);
  return costs;
}

std::vector<FuzzHit> fuzz_monotonicity(int n, const Rational& alpha, unsigned seeds,
                                       int max_m, long long max_cost, int jobs) {
  auto worker = [&](unsigned begin, unsigned end) {
    std::vector<FuzzHit> hits;
    for (unsigned seed = begin; seed < end; ++seed) {
      auto row = random_costs(seed, max_m, max_cost);
      std::sort(row.rbegin(), row.rend());
      std::vector<Rational> costs(row.begin(), row.end());
      ChorePool pool(costs);
      auto ce = check_monotone(pool, pool.all_chores(), n, alpha);
      if (ce) {
        FfvTuple t{pool, pool.all_chores(), ce->bundles, ce->tau};
        hits.push_back({seed, tuple_to_json(t)});
      }
    }
    return hits;
  };
  if (jobs < 2) return worker(0, seeds);
  std::vector<std::future<std::vector<FuzzHit>>> futures;
  unsigned chunk = (seeds + jobs - 1) / jobs;
  for (unsigned begin = 0; begin < seeds; begin += chunk)
    futures.push_back(std::async(std::launch::async, worker, begin,
                                 std::min(begin + chunk, seeds)));
  std::vector<FuzzHit> hits;
  for (auto& f : futures) {
    auto part = f.get();
    hits.insert(hits.end(), part.begin(), part.end());
  }
  return hits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chore allocation toolkit"};
  app.require_subcommand(1);

  std::string input, output, tuple_path, tau_text, thresholds_text, epsilon_text;
  std::string cstar_label, alpha_text;
  int agent = 0, bins = 0, fuzz_n = 2, max_m = 12, jobs = 1;
  long long lo = 1, hi = -1, max_cost = 50;
  unsigned seeds = 100;
  int ratio_n = 0;
  bool exact_small_n = false;
  std::string rule_name = "tightest";

  auto* mms_cmd = app.add_subcommand("mms", "exact maximin share with witness");
  mms_cmd->add_option("--input", input)->required();
  mms_cmd->add_option("--agent", agent);

  auto* ffd_cmd = app.add_subcommand("ffd", "first fit decreasing at a threshold");
  ffd_cmd->add_option("--input", input)->required();
  ffd_cmd->add_option("--agent", agent);
  ffd_cmd->add_option("--tau", tau_text)->required();
  ffd_cmd->add_option("--bins", bins);

  auto* multifit_cmd = app.add_subcommand("multifit", "binary search over FFD");
  multifit_cmd->add_option("--input", input)->required();
  multifit_cmd->add_option("--agent", agent);
  multifit_cmd->add_option("--bins", bins);
  multifit_cmd->add_option("--lo", lo);
  multifit_cmd->add_option("--hi", hi);

  auto* hffd_cmd = app.add_subcommand("hffd", "heterogeneous first fit decreasing");
  hffd_cmd->add_option("--input", input)->required();
  hffd_cmd->add_option("--thresholds", thresholds_text)->required();
  hffd_cmd->add_option("--rule", rule_name)->check(CLI::IsMember({"tightest", "lowest"}));

  auto* allocate_cmd = app.add_subcommand("allocate", "approximate maximin allocation");
  allocate_cmd->add_option("--input", input)->required();
  allocate_cmd->add_option("--epsilon", epsilon_text);
  allocate_cmd->add_option("--output", output);
  allocate_cmd->add_flag("--exact-small-n", exact_small_n,
                         "three agents: epsilon 1/26 gives the 15/13 guarantee");

  auto* verify_cmd = app.add_subcommand("verify", "check tuples against the verifiers");
  auto* verify_ffv = verify_cmd->add_subcommand("ffv", "first-fit validity");
  verify_ffv->add_option("--tuple", tuple_path)->required();
  verify_ffv->add_option("--input", input);
  auto* verify_tidy = verify_cmd->add_subcommand("tidy", "tidy-up guarantees");
  verify_tidy->add_option("--tuple", tuple_path)->required();
  verify_tidy->add_option("--input", input);
  verify_tidy->add_option("--cstar", cstar_label)->required();
  verify_cmd->require_subcommand(1);

  auto* reduce_cmd = app.add_subcommand("reduce", "remove excessive chores");
  reduce_cmd->add_option("--tuple", tuple_path)->required();
  reduce_cmd->add_option("--input", input);
  reduce_cmd->add_option("--cstar", cstar_label)->required();

  auto* fuzz_cmd = app.add_subcommand("fuzz", "randomized property campaigns");
  auto* fuzz_mono = fuzz_cmd->add_subcommand("monotonicity", "search for witnesses");
  fuzz_mono->add_option("--n", fuzz_n);
  fuzz_mono->add_option("--alpha", alpha_text)->required();
  fuzz_mono->add_option("--seeds", seeds);
  fuzz_mono->add_option("--max-m", max_m);
  fuzz_mono->add_option("--max-cost", max_cost);
  fuzz_mono->add_option("--jobs", jobs);
  fuzz_cmd->require_subcommand(1);

  auto* ratios_cmd = app.add_subcommand("ratios", "worst-case FFD ratio for n machines");
  ratios_cmd->add_option("--n", ratio_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mms_cmd) {
      Instance inst = load_instance_file(input);
      check_oracle_size(inst);
      IdoInstance ido = to_ido(inst);
      auto cert = mms(ido, agent, inst.n);
      json j{{"mu", rational_value(cert.mu)},
             {"partition", partition_labels(cert.partition)}};
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*ffd_cmd) {
      Instance inst = load_instance_file(input);
      IdoInstance ido = to_ido(inst);
      int n = bins > 0 ? bins : inst.n;
      Allocation a = ffd(ido, agent, Rational::parse(tau_text), n);
      json j = allocation_to_json(a);
      json costs = json::array();
      for (const auto& b : a.bundles) costs.push_back(ido.cost(agent, b));
      j["bundle_costs"] = costs;
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*multifit_cmd) {
      Instance inst = load_instance_file(input);
      IdoInstance ido = to_ido(inst);
      int n = bins > 0 ? bins : inst.n;
      if (hi < 0) hi = std::max(ido.total_cost(agent), 1LL);
      std::vector<MultifitProbe> trace;
      long long u = multifit(ido, agent, n, lo, hi, &trace);
      json probes = json::array();
      for (const auto& p : trace) probes.push_back({{"tau", p.tau}, {"success", p.success}});
      json j{{"threshold", u}, {"trace", probes}};
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*hffd_cmd) {
      Instance inst = load_instance_file(input);
      IdoInstance ido = to_ido(inst);
      auto thresholds = parse_rational_list(thresholds_text);
      AssignRule rule =
          rule_name == "lowest" ? AssignRule::LowestIndex : AssignRule::TightestFirst;
      Allocation a = hffd(ido, thresholds, rule);
      std::cout << allocation_report(ido, a).dump() << "\n";
      return 0;
    }
    if (*allocate_cmd) {
      Instance inst = load_instance_file(input);
      Rational epsilon = epsilon_text.empty() ? Rational(1, 10)
                                              : Rational::parse(epsilon_text);
      if (exact_small_n) {
        if (inst.n != 3)
          throw std::invalid_argument("--exact-small-n requires exactly three agents");
        epsilon = exact_three_agent_epsilon();
      }
      FptasStats stats;
      Allocation a = allocate(inst, epsilon, &stats);
      json j = allocation_to_json(a);
      json agent_costs = json::array(), ratios = json::array(), mus = json::array();
      bool oracle_ok = inst.m <= kMaxExactChores && inst.n <= kMaxExactBundles;
      IdoInstance original_view = IdoInstance::from_sorted([&] {
        Instance s = inst;
        for (auto& row : s.costs) std::sort(row.rbegin(), row.rend());
        return s;
      }());
      for (int i = 0; i < inst.n; ++i) {
        long long cost = 0;
        for (ChoreId c : a.bundles[a.assignment[i]]) cost += inst.costs[i][c];
        agent_costs.push_back(cost);
        if (oracle_ok) {
          Rational mu = mms(original_view, i, inst.n).mu;
          mus.push_back(rational_value(mu));
          ratios.push_back(mu == Rational(0) ? json(nullptr)
                                             : json((Rational(cost) / mu).str()));
        }
      }
      j["agent_costs"] = agent_costs;
      if (oracle_ok) {
        j["mms"] = mus;
        j["ratio"] = ratios;
      }
      j["rounds"] = stats.rounds;
      json hs = json::array();
      for (long long h : stats.thresholds) hs.push_back(h);
      j["thresholds"] = hs;
      j["epsilon"] = epsilon.str();
      if (!output.empty()) {
        std::ofstream out(output);
        out << j.dump(2) << "\n";
      } else {
        std::cout << j.dump() << "\n";
      }
      return 0;
    }
    if (*verify_ffv) {
      FfvTuple t = load_tuple(tuple_path, input);
      bool ok = false;
      std::string note;
      try {
        ok = is_ffv_checked(t);
      } catch (const std::invalid_argument& e) {
        note = e.what();
      }
      json j{{"ffv", ok}};
      if (!note.empty()) j["error"] = note;
      std::cout << j.dump() << "\n";
      return ok ? 0 : 1;
    }
    if (*verify_tidy) {
      FfvTuple t = load_tuple(tuple_path, input);
      ChoreId cstar = parse_chore_label(cstar_label);
      json j;
      std::vector<std::string> failures;
      try {
        TidyContext ctx = tidy_up(t, cstar);
        CheckReport report = tidy_lemma_check(ctx);
        failures = report.failures;
        if (!is_ffv(ctx.tuple)) failures.push_back("tidy output is not first fit valid");
        j["tuple"] = tuple_to_json(ctx.tuple);
        j["mu"] = rational_value(ctx.mu);
        j["gamma"] = rational_value(ctx.gamma);
        j["partition"] = partition_labels(ctx.partition);
      } catch (const std::invalid_argument& e) {
        failures.push_back(e.what());
      }
      j["failures"] = failures;
      std::cout << j.dump() << "\n";
      return failures.empty() ? 0 : 1;
    }
    if (*reduce_cmd) {
      FfvTuple t = load_tuple(tuple_path, input);
      ChoreId cstar = parse_chore_label(cstar_label);
      json j;
      std::vector<std::string> failures;
      try {
        FfvTuple out = reduce_excessive(t, cstar);
        failures = reduction_check(t, out, cstar).failures;
        j["tuple"] = tuple_to_json(out);
      } catch (const std::invalid_argument& e) {
        failures.push_back(e.what());
      }
      j["failures"] = failures;
      std::cout << j.dump() << "\n";
      return failures.empty() ? 0 : 1;
    }
    if (*fuzz_mono) {
      auto hits = fuzz_monotonicity(fuzz_n, Rational::parse(alpha_text), seeds, max_m,
                                    max_cost, jobs);
      json out = json::array();
      for (const auto& h : hits) out.push_back({{"seed", h.seed}, {"tuple", h.tuple}});
      json j{{"n", fuzz_n},
             {"alpha", alpha_text},
             {"seeds", seeds},
             {"note", "verified up to the given n, max-m and max-cost only"},
             {"counterexamples", out}};
      std::cout << j.dump() << "\n";
      return hits.empty() ? 0 : 1;
    }
    if (*ratios_cmd) {
      json j{{"n", ratio_n}, {"alpha", alpha_ratio(ratio_n).str()}};
      std::cout << j.dump() << "\n";
      return 0;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
