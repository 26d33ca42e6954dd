#include "pcst/solver.hpp"

#include <algorithm>

#include "pcst/error.hpp"

namespace pcst {

DualSolution restrict_dual_to_tree(const DualSolution& dual, const VertexSet& tree) {
  DualSolution out;
  for (const auto& e : dual) {
    if (e.y != 0 && !e.core.empty() && is_subset(e.core, tree)) out.push_back(e);
  }
  return out;
}

namespace {

bool touches(const Instance& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex v : a) {
    for (Vertex u : g.neighbours(v)) {
      if (contains(b, u)) return true;
    }
  }
  return false;
}

}  // namespace

SolutionReport solve(const Instance& inst, const SolveOptions& options) {
  ReducedInstance reduced = reduce(inst);
  const Instance& g = reduced.graph();
  SolutionReport report;

  std::vector<VertexSet> cheap = cheap_components(reduced);
  VertexSet root_block = cheap.front();
  std::vector<InitialComponent> components;
  ComponentId next_id = 0;
  for (std::size_t i = 1; i < cheap.size(); ++i) {
    components.push_back({next_id++, cheap[i], reduced.reduced_penalty_of(cheap[i])});
  }

  std::set<ComponentId> charged;
  while (!components.empty()) {
    if (report.phases.size() > g.size()) throw InvariantError("phase count exceeded n + 1");
    PhaseRecord rec;
    rec.index = report.phases.size() + 1;
    rec.components = components;
    rec.root_block = root_block;
    rec.outcome = run_phase(reduced, components, root_block, charged, options.phase);
    for (const auto& msg : rec.outcome.violations) {
      report.violations.push_back("phase " + std::to_string(rec.index) + ": " + msg);
    }

    if (rec.outcome.kind == PhaseOutcome::Kind::AllInactive) {
      report.phases.push_back(std::move(rec));
      break;
    }
    const VertexSet& tree = rec.outcome.tree->tree.vertices;
    std::erase_if(components, [&](const InitialComponent& c) { return is_subset(c.vertices, tree); });
    if (touches(g, tree, root_block)) {
      root_block = set_union(root_block, tree);
      rec.joined_root = true;
    } else {
      components.push_back({next_id++, tree, reduced.reduced_penalty_of(tree)});
    }
    report.phases.push_back(std::move(rec));
  }

  report.tree = root_block;
  report.cost_part = inst.cost_of(report.tree);
  report.objective = inst.objective(report.tree);
  report.penalty_part = report.objective - report.cost_part;
  report.fixed_dual = reduced.fixed_dual_total();

  Rational best_value = -1;
  for (std::size_t i = 0; i < report.phases.size(); ++i) {
    const DualSolution& y = report.phases[i].outcome.dual;
    for (const auto& v : check_dual_feasibility(reduced, y)) {
      report.violations.push_back("phase " + std::to_string(i + 1) + " dual: " + v.describe(g));
    }
    report.restricted_duals.push_back(restrict_dual_to_tree(y, report.tree));
    Rational value = dual_value(report.restricted_duals.back());
    if (value > best_value) {
      best_value = value;
      report.best_restricted = i;
    }
  }
  if (!report.phases.empty()) {
    report.last_dual = report.phases.back().outcome.dual;
    Rational outside = 0;
    for (const auto& e : report.last_dual) {
      if (!intersects(e.set, report.tree)) outside += e.y;
    }
    Rational needed = reduced.reduced_penalty_of(set_difference(reduced.non_root, report.tree));
    if (needed > outside) report.violations.push_back("reduced penalty outside the tree exceeds the last dual");
  }
  return report;
}

LmpReport solve_lmp(const Instance& inst, const SolveOptions& options) {
  ReducedInstance reduced = reduce(inst);
  std::vector<Rational> transformed_penalty(inst.size());
  for (Vertex v = 0; v < inst.size(); ++v) {
    transformed_penalty[v] = reduced.is_cheap[v] ? Rational(2 * inst.penalty(v) - inst.cost(v)) : inst.penalty(v);
  }
  Instance transformed = inst.with_penalties(std::move(transformed_penalty));
  SolutionReport base = solve(transformed, options);
  const VertexSet& tree = base.tree;

  DualSolution best;
  if (base.best_restricted) best = base.restricted_duals[*base.best_restricted];
  // The last phase's dual on sets that avoid the tree. When the run ends with
  // an absorbed tree this is empty, and nothing outside T carries penalty.
  DualSolution last;
  for (const auto& e : base.last_dual) {
    if (e.y != 0 && !intersects(e.set, tree)) last.push_back(e);
  }

  DualSolution combined;
  for (const auto& e : best) combined.push_back({e.set, e.y / 2, e.core});
  for (const auto& e : last) combined.push_back({e.set, e.y / 2, e.core});
  combined = canonicalize(combined);

  LmpCertificate cert;
  VertexSet tree_non_root = set_difference(tree, VertexSet{inst.root()});
  cert.tree_reduced_cost = reduced.reduced_cost_of(tree_non_root);
  cert.best_restricted_value = dual_value(best);
  cert.outside_reduced_penalty = reduced.reduced_penalty_of(set_difference(reduced.non_root, tree));
  cert.last_dual_value = dual_value(last);
  cert.combined_value = dual_value(combined);
  cert.alpha = cert.best_restricted_value > 0 ? Rational(cert.tree_reduced_cost / cert.best_restricted_value)
                                              : Rational(0);
  cert.lhs = cert.tree_reduced_cost + 2 * cert.alpha * cert.outside_reduced_penalty;
  cert.rhs = 2 * cert.alpha * cert.combined_value;
  cert.cost_inequality_holds = cert.tree_reduced_cost <= cert.alpha * cert.best_restricted_value;
  cert.penalty_inequality_holds = 2 * cert.outside_reduced_penalty <= cert.last_dual_value;
  cert.combined_holds = cert.lhs <= cert.rhs;

  auto violations = check_dual_feasibility_general(reduced, combined);
  if (!violations.empty()) {
    throw InvariantError("combined dual infeasible for the input: " + violations.front().describe(inst));
  }

  Rational objective = inst.objective(tree);
  LmpReport out{std::move(transformed), std::move(base), std::move(objective), std::move(combined), cert};
  return out;
}

BaselineReport solve_monotone_baseline(const Instance& inst) {
  ReducedInstance reduced = reduce(inst);
  const Instance& g = reduced.graph();
  const std::size_t n = g.size();

  struct Comp {
    VertexSet vertices;
    VertexSet boundary;
    Rational total;  // Σ y over sets inside
    Rational own;
    bool active;
    bool alive;
  };
  std::vector<Comp> comps;
  std::vector<std::optional<std::size_t>> owner(n);
  auto add = [&](VertexSet vs, Rational total, bool active) {
    for (Vertex v : vs) owner[v] = comps.size();
    VertexSet b = g.boundary(vs);
    comps.push_back({std::move(vs), std::move(b), std::move(total), 0, active, true});
  };
  std::vector<VertexSet> cheap = cheap_components(reduced);
  for (std::size_t i = 0; i < cheap.size(); ++i) add(cheap[i], 0, i != 0);
  std::size_t root_comp = 0;

  BaselineReport report;
  std::vector<Rational> load(n);
  Rational tau = 0;
  while (true) {
    std::vector<std::size_t> count(n, 0);
    std::optional<std::pair<Rational, std::size_t>> exhaust;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const Comp& c = comps[i];
      if (!c.alive || !c.active) continue;
      Rational slack = reduced.reduced_penalty_of(c.vertices) - c.total;
      if (!exhaust || slack < exhaust->first) exhaust = {slack, i};
      for (Vertex v : c.boundary) ++count[v];
    }
    if (!exhaust) break;
    std::optional<std::pair<Rational, Vertex>> tight;
    for (Vertex v = 0; v < n; ++v) {
      if (owner[v] || count[v] == 0) continue;
      Rational eps = (reduced.reduced_cost[v] - load[v]) / Rational(static_cast<unsigned long>(count[v]));
      if (!tight || eps < tight->first) tight = {eps, v};
    }
    Rational eps = exhaust->first;
    if (tight && tight->first < eps) eps = tight->first;

    tau += eps;
    for (auto& c : comps) {
      if (!c.alive || !c.active) continue;
      c.own += eps;
      c.total += eps;
      for (Vertex v : c.boundary) load[v] += eps;
    }

    if (!tight || exhaust->first <= tight->first) {
      comps[exhaust->second].active = false;
      report.trace.push_back({tau, BaselineStep::Kind::Exhausted, std::nullopt, comps[exhaust->second].vertices});
      continue;
    }
    Vertex v = tight->second;
    VertexSet merged{v};
    Rational total = 0;
    bool has_root = false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      Comp& c = comps[i];
      if (!c.alive || !contains(c.boundary, v)) continue;
      merged = set_union(merged, c.vertices);
      total += c.total;
      c.alive = false;
      c.active = false;
      if (i == root_comp) has_root = true;
    }
    add(merged, total, !has_root);
    if (has_root) root_comp = comps.size() - 1;
    report.trace.push_back({tau, BaselineStep::Kind::Merge, v, comps.back().vertices});
  }

  for (const auto& c : comps) {
    if (c.own != 0) report.dual.push_back({c.vertices, c.own, {}});
  }
  report.y_total = dual_value(report.dual);
  report.fixed_dual = reduced.fixed_dual_total();
  report.dual_total = report.y_total + report.fixed_dual;
  report.root_component = comps[root_comp].vertices;
  report.root_component_objective = inst.objective(report.root_component);
  return report;
}

}  // namespace pcst
