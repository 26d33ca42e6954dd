#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pcst/error.hpp"
#include "pcst/generators.hpp"
#include "pcst/io.hpp"
#include "pcst/oracle.hpp"
#include "pcst/quota.hpp"
#include "pcst/solver.hpp"

namespace pcst::cli {

namespace {

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

class Checks {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    items_.push_back({std::move(name), ok, std::move(detail)});
  }
  bool ok() const {
    for (const auto& c : items_) {
      if (!c.ok) return false;
    }
    return true;
  }
  json to_json() const {
    json list = json::array();
    for (const auto& c : items_) {
      json entry{{"name", c.name}, {"ok", c.ok}};
      if (!c.detail.empty()) entry["detail"] = c.detail;
      list.push_back(std::move(entry));
    }
    return {{"ok", ok()}, {"checks", list}};
  }

 private:
  std::vector<Check> items_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
  std::string text = dump(doc);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << text;
}

json report(json manifest, json result) {
  return {{"format_version", kFormatVersion}, {"manifest", std::move(manifest)}, {"result", std::move(result)}};
}

json output_field(const std::string& path) { return path.empty() ? json(nullptr) : json(path); }

bool rooted_tree(const Instance& inst, const VertexSet& tree) {
  return contains(tree, inst.root()) && inst.induces_connected(tree);
}

bool oracle_fits(const Instance& inst) { return inst.size() <= OracleLimits::from_environment().max_vertices; }

bool dual_check_fits(const ReducedInstance& reduced) {
  return reduced.non_root.size() <= OracleLimits::from_environment().max_dual_vertices;
}

std::string first_violation(const Instance& inst, const std::vector<DualViolation>& v) {
  return v.empty() ? std::string{} : v.front().describe(inst);
}

void check_phase_duals(const Instance& inst, const ReducedInstance& reduced, const std::vector<DualSolution>& duals,
                       const std::optional<Rational>& opt, Checks& checks) {
  for (std::size_t i = 0; i < duals.size(); ++i) {
    std::string tag = "phase " + std::to_string(i + 1);
    auto v = check_dual_feasibility_general(reduced, duals[i]);
    checks.add(tag + " dual feasible", v.empty(), first_violation(inst, v));
    if (dual_check_fits(reduced)) {
      auto ex = exhaustive_dual_check(reduced, duals[i]);
      checks.add(tag + " dual feasible (exhaustive)", ex.empty(), first_violation(inst, ex));
    }
    if (opt) {
      Rational lower = dual_value(duals[i]) + reduced.fixed_dual_total();
      checks.add(tag + " weak duality", lower <= *opt, to_string(lower) + " <= " + to_string(*opt));
    }
  }
}

void check_violation_list(const std::vector<std::string>& violations, Checks& checks) {
  checks.add("no invariant violations", violations.empty(), violations.empty() ? "" : violations.front());
}

// --- solve -------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  bool lmp = false;
  bool baseline = false;
  std::string quota;
  bool trace = false;
  bool verify = false;
  std::string output;
};

std::string mode_of(const SolveArgs& a) {
  if (a.lmp) return "lmp";
  if (a.baseline) return "baseline";
  if (!a.quota.empty()) return "quota";
  return "pcst";
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst = parse_instance(read_file(a.instance));
  ReducedInstance reduced = reduce(inst);
  std::string mode = mode_of(a);
  json manifest{{"command", "solve"},
                {"instance", a.instance},
                {"mode", mode},
                {"quota", a.quota.empty() ? json(nullptr) : json(a.quota)},
                {"trace", a.trace},
                {"verify", a.verify},
                {"output", output_field(a.output)}};

  Checks checks;
  std::optional<Rational> opt;
  if (a.verify && mode != "quota" && oracle_fits(inst)) opt = brute_pcst(inst).value;

  json result;
  if (mode == "pcst") {
    SolutionReport rep = solve(inst);
    result = solution_to_json(inst, rep, a.trace);
    if (a.verify) {
      check_violation_list(rep.violations, checks);
      checks.add("tree rooted and connected", rooted_tree(inst, rep.tree));
      std::vector<DualSolution> duals;
      for (const auto& p : rep.phases) duals.push_back(p.outcome.dual);
      check_phase_duals(inst, reduced, duals, opt, checks);
      if (opt) checks.add("objective at least optimum", rep.objective >= *opt);
    }
  } else if (mode == "lmp") {
    LmpReport rep = solve_lmp(inst);
    result = lmp_to_json(inst, rep, a.trace);
    if (a.verify) {
      check_violation_list(rep.base.violations, checks);
      checks.add("tree rooted and connected", rooted_tree(inst, rep.base.tree));
      checks.add("cost inequality", rep.certificate.cost_inequality_holds);
      checks.add("penalty inequality", rep.certificate.penalty_inequality_holds);
      checks.add("combined inequality", rep.certificate.combined_holds);
      check_phase_duals(inst, reduced, {rep.combined_dual}, opt, checks);
      if (opt) checks.add("objective at least optimum", rep.original_objective >= *opt);
    }
  } else if (mode == "baseline") {
    BaselineReport rep = solve_monotone_baseline(inst);
    result = baseline_to_json(inst, rep, a.trace);
    if (a.verify) {
      checks.add("root component connected", rooted_tree(inst, rep.root_component));
      check_phase_duals(inst, reduced, {rep.dual}, opt, checks);
    }
  } else {
    Rational q = parse_rational(a.quota);
    QuotaReport rep = solve_quota(inst, q);
    result = quota_to_json(inst, rep, a.trace);
    if (a.verify) {
      check_violation_list(rep.violations, checks);
      checks.add("tree rooted and connected", rooted_tree(inst, rep.tree));
      checks.add("profit meets quota", rep.profit >= q);
      if (oracle_fits(inst)) {
        auto best = brute_quota(inst, q);
        checks.add("cost at least optimum", best && rep.cost >= best->value,
                   best ? to_string(best->value) : "no feasible tree");
      }
    }
  }

  json doc = report(manifest, result);
  if (a.verify) doc["verification"] = checks.to_json();
  emit(doc, a.output, out);
  if (a.verify && !checks.ok()) {
    err << "verification failed\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

// --- verify ------------------------------------------------------------

int cmd_verify(const std::string& instance_path, const std::string& report_path, const std::string& output,
               std::ostream& out, std::ostream& err) {
  Instance inst = parse_instance(read_file(instance_path));
  ReducedInstance reduced = reduce(inst);
  json doc;
  try {
    doc = json::parse(read_file(report_path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("manifest") || !doc.contains("result")) {
    throw ParseError("report lacks manifest or result");
  }
  if (doc.value("format_version", 0) != kFormatVersion) throw ParseError("unsupported report format version");
  const json& manifest = doc["manifest"];
  const json& result = doc["result"];
  std::string command = manifest.value("command", "");
  std::string mode = manifest.value("mode", "");
  if (command != "solve" && command != "oracle") throw ParseError("report was not produced by solve or oracle");

  Checks checks;
  auto opt = [&]() -> std::optional<Rational> {
    if (oracle_fits(inst)) return brute_pcst(inst).value;
    return std::nullopt;
  };

  if (command == "oracle") {
    VertexSet witness = vertex_set_from_json(inst, result.at("witness"));
    Rational value = rational_from_json(result.at("value"));
    checks.add("witness rooted and connected", rooted_tree(inst, witness));
    if (manifest.contains("quota") && !manifest["quota"].is_null()) {
      Rational q = parse_rational(manifest["quota"].get<std::string>());
      checks.add("witness meets quota", inst.has_profits() && inst.profit_of(witness) >= q);
      checks.add("value matches witness", inst.cost_of(witness) == value);
    } else {
      checks.add("value matches witness", inst.objective(witness) == value);
    }
  } else if (mode == "pcst") {
    VertexSet tree = vertex_set_from_json(inst, result.at("tree"));
    checks.add("tree rooted and connected", rooted_tree(inst, tree));
    Rational objective = rational_from_json(result.at("objective"));
    checks.add("objective matches tree", inst.objective(tree) == objective);
    std::vector<DualSolution> duals;
    for (const auto& phase : result.at("phases")) duals.push_back(dual_from_json(inst, phase.at("dual")));
    auto o = opt();
    check_phase_duals(inst, reduced, duals, o, checks);
    if (o) checks.add("objective at least optimum", objective >= *o);
  } else if (mode == "lmp") {
    VertexSet tree = vertex_set_from_json(inst, result.at("tree"));
    checks.add("tree rooted and connected", rooted_tree(inst, tree));
    checks.add("objective matches tree",
               inst.objective(tree) == rational_from_json(result.at("original_objective")));
    const json& cert = result.at("certificate");
    for (const char* key : {"cost_inequality_holds", "penalty_inequality_holds", "combined_holds"}) {
      checks.add(key, cert.at(key).get<bool>());
    }
    check_phase_duals(inst, reduced, {dual_from_json(inst, result.at("combined_dual"))}, opt(), checks);
  } else if (mode == "baseline") {
    DualSolution dual = dual_from_json(inst, result.at("dual"));
    checks.add("dual total matches",
               dual_value(dual) + reduced.fixed_dual_total() == rational_from_json(result.at("dual_total")));
    check_phase_duals(inst, reduced, {dual}, opt(), checks);
  } else if (mode == "quota") {
    VertexSet tree = vertex_set_from_json(inst, result.at("tree"));
    Rational q = rational_from_json(result.at("quota"));
    checks.add("tree rooted and connected", rooted_tree(inst, tree));
    checks.add("profit meets quota", inst.has_profits() && inst.profit_of(tree) >= q);
    checks.add("cost matches tree", inst.cost_of(tree) == rational_from_json(result.at("cost")));
  } else {
    throw ParseError("unknown report mode '" + mode + "'");
  }

  json manifest_out{{"command", "verify"},
                    {"instance", instance_path},
                    {"report", report_path},
                    {"output", output_field(output)}};
  json verdict{{"format_version", kFormatVersion}, {"manifest", manifest_out}, {"verification", checks.to_json()}};
  emit(verdict, output, out);
  if (!checks.ok()) {
    err << "verification failed\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

// --- oracle / gen ------------------------------------------------------

int cmd_oracle(const std::string& instance_path, const std::string& quota, const std::string& output,
               std::ostream& out) {
  Instance inst = parse_instance(read_file(instance_path));
  json manifest{{"command", "oracle"},
                {"instance", instance_path},
                {"quota", quota.empty() ? json(nullptr) : json(quota)},
                {"output", output_field(output)}};
  json result;
  if (quota.empty()) {
    result = oracle_to_json(inst, brute_pcst(inst));
  } else {
    Rational q = parse_rational(quota);
    auto best = brute_quota(inst, q);
    if (!best) throw InfeasibleError("no rooted connected subgraph reaches quota " + quota);
    result = oracle_to_json(inst, *best);
  }
  emit(report(manifest, result), output, out);
  return kExitOk;
}

CoverSet parse_cover_set(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("set must look like COST:e1,e2,... (got '" + text + "')");
  CoverSet s{parse_rational(text.substr(0, colon)), {}};
  std::stringstream list(text.substr(colon + 1));
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      unsigned long e = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      s.elements.push_back(static_cast<unsigned>(e));
    } catch (const std::logic_error&) {
      throw ParseError("bad element '" + item + "' in set '" + text + "'");
    }
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rooted node-weighted prize-collecting Steiner tree solver", "pcst"};
  app.require_subcommand(1);

  std::string output;
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->require_subcommand(1);
  unsigned ce_n = 0;
  auto* gen_ce = gen->add_subcommand("counterexample", "Bipartite family defeating monotone growth");
  gen_ce->add_option("--n", ce_n, "Family parameter")->required()->check(CLI::Range(1u, 100000u));
  gen_ce->add_option("-o,--output", output, "Output file");

  RandomSpec rs;
  std::string edge_prob = "1/2";
  auto* gen_rand = gen->add_subcommand("random", "Erdős–Rényi instance with uniform integer weights");
  gen_rand->add_option("--n", rs.n, "Vertex count")->required()->check(CLI::Range(1u, 100000u));
  gen_rand->add_option("--edge-prob", edge_prob, "Edge probability as p/q")->capture_default_str();
  gen_rand->add_option("--max-cost", rs.max_cost, "Largest vertex cost")->capture_default_str();
  gen_rand->add_option("--max-penalty", rs.max_penalty, "Largest vertex penalty")->capture_default_str();
  gen_rand->add_option("--max-profit", rs.max_profit, "Largest profit; 0 omits profits")->capture_default_str();
  gen_rand->add_option("--seed", rs.seed, "RNG seed")->capture_default_str();
  gen_rand->add_option("-o,--output", output, "Output file");

  unsigned elements = 0;
  std::vector<std::string> cover_sets;
  auto* gen_sc = gen->add_subcommand("setcover", "Set-cover encoding");
  gen_sc->add_option("--elements", elements, "Number of elements (numbered from 1)")->required();
  gen_sc->add_option("--set", cover_sets, "A set as COST:e1,e2,...")->take_all();
  gen_sc->add_option("-o,--output", output, "Output file");

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("instance", sa.instance, "Instance JSON file")->required();
  auto* lmp_flag = solve_cmd->add_flag("--lmp", sa.lmp, "Multiplier-preserving variant");
  auto* base_flag = solve_cmd->add_flag("--baseline", sa.baseline, "Monotone growth baseline");
  auto* quota_opt = solve_cmd->add_option("--quota", sa.quota, "Quota problem with profit target Q");
  lmp_flag->excludes(base_flag)->excludes(quota_opt);
  base_flag->excludes(quota_opt);
  solve_cmd->add_flag("--trace", sa.trace, "Include event traces");
  solve_cmd->add_flag("--verify", sa.verify, "Run feasibility and oracle cross-checks");
  solve_cmd->add_option("-o,--output", sa.output, "Output file");

  std::string oracle_instance;
  std::string oracle_quota;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact value by enumeration");
  oracle_cmd->add_option("instance", oracle_instance, "Instance JSON file")->required();
  oracle_cmd->add_option("--quota", oracle_quota, "Quota problem with profit target Q");
  oracle_cmd->add_option("-o,--output", output, "Output file");

  std::string verify_instance;
  std::string verify_report;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a report against its instance");
  verify_cmd->add_option("instance", verify_instance, "Instance JSON file")->required();
  verify_cmd->add_option("report", verify_report, "Report JSON file")->required();
  verify_cmd->add_option("-o,--output", output, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_ce) {
      json manifest{{"command", "gen"}, {"generator", "counterexample"}, {"n", ce_n}, {"output", output_field(output)}};
      json doc = instance_to_json(gen_counterexample(ce_n));
      doc["manifest"] = manifest;
      doc["format_version"] = kFormatVersion;
      emit(doc, output, out);
      return kExitOk;
    }
    if (*gen_rand) {
      rs.edge_prob = parse_rational(edge_prob);
      json manifest{{"command", "gen"},         {"generator", "random"},      {"n", rs.n},
                    {"edge_prob", edge_prob},    {"max_cost", rs.max_cost},    {"max_penalty", rs.max_penalty},
                    {"max_profit", rs.max_profit}, {"seed", rs.seed},          {"output", output_field(output)}};
      json doc = instance_to_json(gen_random(rs));
      doc["manifest"] = manifest;
      doc["format_version"] = kFormatVersion;
      emit(doc, output, out);
      return kExitOk;
    }
    if (*gen_sc) {
      std::vector<CoverSet> sets;
      for (const auto& s : cover_sets) sets.push_back(parse_cover_set(s));
      json manifest{{"command", "gen"},
                    {"generator", "setcover"},
                    {"elements", elements},
                    {"sets", cover_sets},
                    {"output", output_field(output)}};
      json doc = instance_to_json(gen_from_set_cover(elements, sets));
      doc["manifest"] = manifest;
      doc["format_version"] = kFormatVersion;
      emit(doc, output, out);
      return kExitOk;
    }
    if (*solve_cmd) return cmd_solve(sa, out, err);
    if (*oracle_cmd) return cmd_oracle(oracle_instance, oracle_quota, output, out);
    if (*verify_cmd) return cmd_verify(verify_instance, verify_report, output, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const json::exception& e) {
    err << "error: malformed report: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pcst::cli
