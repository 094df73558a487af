#pragma once

// Command-line front end. Every command builds one JSON report; text mode
// prints the same report as a two-column table.

#include <chrono>
#include <cmath>
#include <functional>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fuchslab/algebra.hpp"
#include "fuchslab/constructions.hpp"
#include "fuchslab/endo.hpp"
#include "fuchslab/error.hpp"
#include "fuchslab/groups.hpp"
#include "fuchslab/selftest.hpp"

namespace fuchslab::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

/// Endomorphisms are listed individually up to this many.
inline constexpr std::uint64_t kMaxListedEndos = 256;

using nlohmann::json;

struct Settings {
  bool json_output = false;
  bool no_timings = false;
  std::size_t max_unit_dim = kDefaultMaxUnitDim;
  std::uint64_t max_endos = kDefaultMaxEndos;

  EngineOptions engine() const { return EngineOptions{max_endos, 0}; }
  ConstructionOptions construction() const { return ConstructionOptions{kDefaultMaxIdealAmbient, max_unit_dim}; }
};

inline json base_report(const std::string& command) {
  return json{{"command", command},
              {"group", nullptr},
              {"fully_realizable", nullptr},
              {"fully_realizes", nullptr},
              {"reason", nullptr},
              {"counts", nullptr},
              {"witness_recipe", nullptr},
              {"exhaustive", nullptr},
              {"version", kVersion}};
}

inline std::string unit_group_string(const QuotientRing& q) {
  return canonicalize(unit_group_invariants(*q.algebra, q.units), 0).to_string();
}

inline json ring_summary(const QuotientRing& q) {
  return json{{"dim", q.dim()}, {"basis", q.algebra->labels()}, {"unit_group", unit_group_string(q)},
              {"ideal_dim", q.ideal.dim()}};
}

inline void add_verdict(json& r, const ClassificationVerdict& v) {
  r["fully_realizable"] = v.fully_realizable;
  r["reason"] = std::string(to_string(v.reason));
  r["reason_detail"] = std::string(describe(v.reason));
  if (v.recipe) r["witness_recipe"] = *v.recipe;
}

inline json classify_cmd(const GroupSpec& g) {
  json r = base_report("classify");
  r["group"] = g.to_string();
  add_verdict(r, classify(g));
  return r;
}

inline json construct_cmd(const GroupSpec& g, const Settings& s) {
  json r = base_report("construct");
  r["group"] = g.to_string();
  const auto v = classify(g);
  add_verdict(r, v);
  r["ring"] = nullptr;
  if (v.fully_realizable && g.is_finite()) r["ring"] = ring_summary(construct_witness(g, s.construction()).ring);
  return r;
}

inline json verify_cmd(const GroupSpec& g, const std::string& ring_recipe, const Settings& s) {
  json r = base_report("verify");
  r["group"] = g.to_string();
  detail::require_finite(g, "verify");
  std::optional<QuotientRing> q;
  if (!ring_recipe.empty()) {
    const Recipe recipe = parse_recipe(ring_recipe);
    r["witness_recipe"] = recipe.to_string();
    q = build_recipe(recipe, s.construction());
  } else {
    const auto v = classify(g);
    r["fully_realizable"] = v.fully_realizable;
    r["reason"] = std::string(to_string(v.reason));
    if (v.fully_realizable) {
      Witness w = construct_witness(g, s.construction());
      r["witness_recipe"] = w.recipe.to_string();
      q = std::move(w.ring);
    }
  }
  r["ring"] = nullptr;
  r["failing_endomorphism"] = nullptr;
  if (!q) {
    r["fully_realizes"] = false;
    r["counts"] = json{{"group_endos", endomorphism_count(g)}, {"realized", nullptr}};
    return r;
  }
  r["ring"] = ring_summary(*q);
  const auto rep = fully_realizes(*q, g, s.engine());
  r["unit_group_ok"] = rep.unit_group_ok;
  r["fully_realizes"] = rep.fully_realizes;
  r["counts"] = json{{"group_endos", rep.total_endos}, {"realized", rep.realized_endos}};
  if (rep.unit_group_ok && rep.failing_witness) r["failing_endomorphism"] = to_string(*rep.failing_witness);
  return r;
}

inline json endos_cmd(const GroupSpec& g, const Settings& s) {
  json r = base_report("endos");
  r["group"] = g.to_string();
  detail::require_finite(g, "endos");
  const std::uint64_t total = endomorphism_count(g);
  r["counts"] = json{{"group_endos", total}, {"realized", nullptr}};
  r["generator_images"] = nullptr;
  if (total <= kMaxListedEndos) {
    json list = json::array();
    for (const auto& f : enumerate_endos(g, s.max_endos)) list.push_back(to_string(f));
    r["generator_images"] = std::move(list);
  }
  return r;
}

inline json search_cmd(const GroupSpec& g, SearchPool pool, std::uint64_t budget, const Settings& s) {
  json r = base_report("search");
  r["group"] = g.to_string();
  const auto rep = bounded_ideal_search(g, pool, budget, s.engine());
  r["exhaustive"] = rep.exhaustive;
  r["fully_realizes"] = rep.fully_realizing_found > 0;
  r["search"] = json{{"pool", std::string(to_string(pool))},
                     {"pool_description", rep.pool_description},
                     {"budget", budget},
                     {"budget_exhausted", rep.budget_exhausted},
                     {"ideals_examined", rep.ideals_examined},
                     {"realizing_found", rep.realizing_found},
                     {"fully_realizing_found", rep.fully_realizing_found}};
  return r;
}

inline json selftest_cmd(Order max_order, const Settings& s) {
  json r = base_report("selftest");
  SelftestOptions opts;
  opts.max_order = max_order;
  opts.engine = s.engine();
  json criteria = json::array();
  bool all = true;
  for (const auto& c : run_acceptance(opts)) {
    all &= c.passed;
    criteria.push_back(json{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  r["criteria"] = std::move(criteria);
  r["passed"] = all;
  return r;
}

/// Flattens the report into "key  value" rows, nested keys joined by dots.
inline void print_table(const json& report, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> rows;
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  std::function<void(const std::string&, const json&)> walk = [&](const std::string& prefix, const json& v) {
    if (v.is_null()) return;
    if (v.is_object()) {
      for (const auto& [k, child] : v.items()) walk(prefix.empty() ? k : prefix + "." + k, child);
      return;
    }
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (std::size_t i = 0; i < v.size(); ++i) walk(prefix + "[" + std::to_string(i) + "]", v[i]);
      return;
    }
    if (v.is_array()) {
      std::string joined;
      for (const auto& e : v) joined += (joined.empty() ? "" : ", ") + scalar(e);
      rows.emplace_back(prefix, "[" + joined + "]");
      return;
    }
    rows.emplace_back(prefix, scalar(v));
  };
  walk("", report);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations on rings whose unit group realizes every group endomorphism", "fuchslab"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_flag("--json", settings.json_output, "Emit a key-sorted JSON report");
  app.add_flag("--no-timings", settings.no_timings, "Omit timings so output is byte-stable");
  app.add_option("--max-unit-dim", settings.max_unit_dim, "Largest ring dimension for unit enumeration")
      ->check(CLI::Range(1, 40));
  app.add_option("--max-endos", settings.max_endos, "Largest |End(G)| a filter may scan")->check(CLI::PositiveNumber);
  app.set_version_flag("--version", kVersion);

  std::string spec;
  std::string ring;
  std::string pool = "default";
  std::uint64_t budget = kDefaultSearchBudget;
  Order max_order = 64;

  auto* classify_sc = app.add_subcommand("classify", "Decide full realizability of a group");
  classify_sc->add_option("spec", spec, "Group, e.g. \"C2^3 x C12\"")->required();
  auto* construct_sc = app.add_subcommand("construct", "Build a witness ring");
  construct_sc->add_option("spec", spec)->required();
  auto* verify_sc = app.add_subcommand("verify", "Count realized endomorphisms of a ring");
  verify_sc->add_option("spec", spec)->required();
  verify_sc->add_option("--ring", ring, "Recipe such as a24(rank=1,c4=true) or chain(k=2,j=3)");
  auto* endos_sc = app.add_subcommand("endos", "Enumerate group endomorphisms");
  endos_sc->add_option("spec", spec)->required();
  auto* search_sc = app.add_subcommand("search", "Bounded search over ideals of F2[G]");
  search_sc->add_option("spec", spec)->required();
  search_sc->add_option("--pool", pool, "default, chain or kernels");
  search_sc->add_option("--budget", budget, "Maximum number of ideals examined")->check(CLI::PositiveNumber);
  auto* selftest_sc = app.add_subcommand("selftest", "Run the acceptance checks");
  selftest_sc->add_option("--max-order", max_order, "Largest order in the order-profile sweep")->check(CLI::Range(1, 4096));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  int status = kOk;
  try {
    auto group = [&] { return parse_group(spec); };
    if (classify_sc->parsed()) {
      report = classify_cmd(group());
    } else if (construct_sc->parsed()) {
      report = construct_cmd(group(), settings);
    } else if (verify_sc->parsed()) {
      report = verify_cmd(group(), ring, settings);
    } else if (endos_sc->parsed()) {
      report = endos_cmd(group(), settings);
    } else if (search_sc->parsed()) {
      const GroupSpec g = group();
      report = search_cmd(g, parse_pool(pool), budget, settings);
    } else {
      report = selftest_cmd(max_order, settings);
      if (!report["passed"].get<bool>()) status = kFailed;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!settings.no_timings) {
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    report["timings_ms"] = json{{"total", std::round(elapsed.count() * 1000.0) / 1000.0}};
  }
  if (settings.json_output) {
    out << report.dump(2) << '\n';
  } else {
    print_table(report, out);
  }
  return status;
}

}  // namespace fuchslab::cli
