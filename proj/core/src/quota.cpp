#include "pcst/quota.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "pcst/error.hpp"
#include "pcst/solver.hpp"

namespace pcst {

namespace {

Probe run_probe(const Instance& inst, const Rational& lambda) {
  std::vector<Rational> penalties(inst.size());
  for (Vertex v = 0; v < inst.size(); ++v) penalties[v] = lambda * inst.profit(v);
  LmpReport rep = solve_lmp(inst.with_penalties(std::move(penalties)));
  Probe p{lambda, rep.base.tree, inst.cost_of(rep.base.tree), inst.profit_of(rep.base.tree)};
  return p;
}

// Node-weighted distances from the root: costs of path vertices, root
// excluded, endpoint included. Unreachable vertices stay empty.
std::vector<std::optional<Rational>> root_distances(const Instance& inst) {
  std::vector<std::optional<Rational>> dist(inst.size());
  std::set<std::pair<Rational, Vertex>> queue;
  dist[inst.root()] = Rational(0);
  queue.insert({0, inst.root()});
  while (!queue.empty()) {
    auto [d, u] = *queue.begin();
    queue.erase(queue.begin());
    for (Vertex w : inst.neighbours(u)) {
      Rational nd = d + inst.cost(w);
      if (!dist[w] || nd < *dist[w]) {
        if (dist[w]) queue.erase({*dist[w], w});
        dist[w] = nd;
        queue.insert({nd, w});
      }
    }
  }
  return dist;
}

VertexSet kept_by_distance(const Instance& inst, const Rational& bound) {
  auto dist = root_distances(inst);
  VertexSet keep;
  for (Vertex v = 0; v < inst.size(); ++v) {
    if (dist[v] && *dist[v] <= bound) keep.push_back(v);
  }
  return keep;
}

VertexSet root_component(const Instance& inst) {
  VertexSet all(inst.size());
  for (Vertex v = 0; v < inst.size(); ++v) all[v] = v;
  std::vector<bool> seen(inst.size(), false);
  std::queue<Vertex> queue;
  queue.push(inst.root());
  seen[inst.root()] = true;
  VertexSet out;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    out.push_back(v);
    for (Vertex u : inst.neighbours(v)) {
      if (!seen[u]) {
        seen[u] = true;
        queue.push(u);
      }
    }
  }
  normalize(out);
  return out;
}

VertexSet remap(const VertexSet& set, const VertexSet& keep) {
  VertexSet out;
  for (Vertex v : set) out.push_back(keep[v]);
  normalize(out);
  return out;
}

}  // namespace

Instance prune_by_distance(const Instance& inst, const Rational& bound) {
  if (bound < 0) throw PreconditionError("negative pruning bound");
  return inst.induced(kept_by_distance(inst, bound));
}

LagrangianResult lagrangian_search(const Instance& inst, const Rational& quota, const Rational& tolerance) {
  if (!inst.has_profits()) throw PreconditionError("quota search needs profits");
  if (tolerance <= 0) throw PreconditionError("tolerance must be positive");
  Rational total = inst.profit_of(root_component(inst));
  Rational all = 0;
  for (const auto& p : inst.profits()) all += p;
  if (quota > all) throw InfeasibleError("quota " + to_string(quota) + " exceeds total profit " + to_string(all));

  LagrangianResult out;
  out.tolerance = tolerance;
  Probe lo = run_probe(inst, 0);
  out.probes = 1;
  if (lo.profit >= quota) {
    out.lower = out.upper = lo;
    out.exact = true;
    return out;
  }

  std::optional<Rational> min_profit;
  Rational cost_sum = 0;
  for (Vertex v = 0; v < inst.size(); ++v) {
    cost_sum += inst.cost(v);
    if (inst.profit(v) > 0 && (!min_profit || inst.profit(v) < *min_profit)) min_profit = inst.profit(v);
  }
  if (!min_profit || total < quota) {
    throw PreconditionError("the root's component cannot reach the quota");
  }
  Rational lambda_max = cost_sum / *min_profit + 1;
  Probe hi = run_probe(inst, lambda_max);
  ++out.probes;
  if (hi.profit < quota) throw PreconditionError("largest multiplier still misses the quota");
  if (hi.profit == quota) {
    out.lower = out.upper = hi;
    out.exact = true;
    return out;
  }
  while (hi.lambda - lo.lambda > tolerance) {
    Probe mid = run_probe(inst, (lo.lambda + hi.lambda) / 2);
    ++out.probes;
    if (mid.profit == quota) {
      out.lower = out.upper = mid;
      out.exact = true;
      return out;
    }
    (mid.profit < quota ? lo : hi) = std::move(mid);
  }
  out.lower = std::move(lo);
  out.upper = std::move(hi);
  return out;
}

namespace {

// Node of the contracted tree T'. Node 0 is r' (T1 identified).
struct MergeNode {
  VertexSet members;
  Rational cost;
  Rational profit;
  bool alive = true;
};

class Merger {
 public:
  Merger(const Instance& inst, const VertexSet& t1, const VertexSet& t2, const Rational& q)
      : inst_(inst), t1_(t1), q_(q) {
    VertexSet rest = set_difference(t2, t1);
    ref_cost_ = inst.cost_of(rest);
    ref_profit_ = inst.profit_of(rest);

    nodes_.push_back({t1, 0, 0});
    std::map<Vertex, std::size_t> node_of;
    for (Vertex v : rest) {
      node_of[v] = nodes_.size();
      nodes_.push_back({{v}, inst.cost(v), inst.profit(v)});
    }
    auto neighbours = [&](std::size_t a) {
      std::vector<std::size_t> out;
      if (a == 0) {
        for (Vertex v : rest) {
          for (Vertex u : inst.neighbours(v)) {
            if (contains(t1, u)) {
              out.push_back(node_of[v]);
              break;
            }
          }
        }
      } else {
        Vertex v = nodes_[a].members.front();
        bool to_root = false;
        for (Vertex u : inst.neighbours(v)) {
          if (contains(t1, u)) to_root = true;
          if (auto it = node_of.find(u); it != node_of.end()) out.push_back(it->second);
        }
        if (to_root) out.push_back(0);
      }
      std::sort(out.begin(), out.end());
      return out;
    };

    // BFS spanning tree of T2' from r'.
    adj_.assign(nodes_.size(), {});
    std::vector<bool> seen(nodes_.size(), false);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop();
      for (std::size_t b : neighbours(a)) {
        if (seen[b]) continue;
        seen[b] = true;
        adj_[a].insert(b);
        adj_[b].insert(a);
        queue.push(b);
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw PreconditionError("T2 does not stay connected after contracting T1");
    }
  }

  MergeResult run() {
    MergeResult out;
    while (auto edge = eligible_edge()) {
      auto [a, b] = *edge;
      adj_[a].erase(b);
      adj_[b].erase(a);
      std::vector<std::size_t> s = side(a);
      std::vector<std::size_t> r = side(b);
      adj_[a].insert(b);
      adj_[b].insert(a);
      bool ce_s = cost_effective(s);
      bool ce_r = cost_effective(r);
      if (!ce_s && !ce_r) out.violations.push_back("split with neither side cost-effective");

      bool r_gone = false;
      if (ce_s) {
        if (profit(s) >= q_) {
          drop(r, b, a, out, s);
          r_gone = true;
        } else {
          a = contract(s, out);
        }
      }
      if (!r_gone && ce_r) {
        std::vector<std::size_t> s_now = side_without(a, b);
        if (profit(r) >= q_) {
          drop(s_now, a, b, out, r);
        } else {
          contract(r, out);
        }
      }
      std::vector<std::size_t> all = alive();
      if (cost_of(all) * ref_profit_ > ref_cost_ * profit(all)) {
        out.violations.push_back("contracted tree lost cost-effectiveness");
      }
    }

    std::vector<std::size_t> chosen = extract();
    VertexSet supplement;
    bool has_root = false;
    for (std::size_t i : chosen) {
      if (i == 0 || contains(nodes_[i].members, inst_.root())) has_root = true;
      supplement = set_union(supplement, nodes_[i].members);
    }
    supplement = set_difference(supplement, t1_);
    out.supplement = supplement;
    out.tree = set_union(t1_, supplement);
    if (!has_root && !touches(supplement, t1_)) {
      out.path = connecting_path(supplement);
      out.tree = set_union(out.tree, out.path);
    }
    if (inst_.profit_of(supplement) < q_) out.violations.push_back("supplement profit below q");
    return out;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> eligible_edge() const {
    for (std::size_t a = 0; a < nodes_.size(); ++a) {
      if (!nodes_[a].alive || adj_[a].size() < 2) continue;
      for (std::size_t b : adj_[a]) {
        if (b > a && adj_[b].size() >= 2) return std::pair{a, b};
      }
    }
    return std::nullopt;
  }

  std::vector<std::size_t> side(std::size_t start) const {
    std::vector<std::size_t> out;
    std::vector<std::size_t> stack{start};
    std::set<std::size_t> seen{start};
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      out.push_back(a);
      for (std::size_t b : adj_[a]) {
        if (seen.insert(b).second) stack.push_back(b);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::size_t> side_without(std::size_t start, std::size_t cut) {
    adj_[start].erase(cut);
    adj_[cut].erase(start);
    auto out = side(start);
    adj_[start].insert(cut);
    adj_[cut].insert(start);
    return out;
  }

  std::vector<std::size_t> alive() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].alive) out.push_back(i);
    }
    return out;
  }

  Rational cost_of(const std::vector<std::size_t>& part) const {
    Rational sum = 0;
    for (std::size_t i : part) sum += nodes_[i].cost;
    return sum;
  }

  Rational profit(const std::vector<std::size_t>& part) const {
    Rational sum = 0;
    for (std::size_t i : part) sum += nodes_[i].profit;
    return sum;
  }

  bool cost_effective(const std::vector<std::size_t>& part) const {
    return cost_of(part) * ref_profit_ <= ref_cost_ * profit(part);
  }

  VertexSet members(const std::vector<std::size_t>& part) const {
    VertexSet out;
    for (std::size_t i : part) out = set_union(out, nodes_[i].members);
    return out;
  }

  void drop(const std::vector<std::size_t>& gone, std::size_t gone_end, std::size_t kept_end, MergeResult& out,
            const std::vector<std::size_t>& kept) {
    adj_[kept_end].erase(gone_end);
    for (std::size_t i : gone) {
      nodes_[i].alive = false;
      adj_[i].clear();
    }
    out.steps.push_back({MergeStep::Kind::DropSide, members(kept), members(gone)});
  }

  std::size_t contract(const std::vector<std::size_t>& part, MergeResult& out) {
    MergeNode node{members(part), cost_of(part), profit(part)};
    std::size_t id = nodes_.size();
    nodes_.push_back(std::move(node));
    adj_.emplace_back();
    for (std::size_t i : part) {
      for (std::size_t b : adj_[i]) {
        if (std::find(part.begin(), part.end(), b) != part.end()) continue;
        adj_[b].erase(i);
        adj_[b].insert(id);
        adj_[id].insert(b);
      }
      nodes_[i].alive = false;
      adj_[i].clear();
    }
    out.steps.push_back({MergeStep::Kind::Contract, {}, nodes_[id].members});
    return id;
  }

  // Connected piece of the final star with profit at least q.
  std::vector<std::size_t> extract() const {
    std::vector<std::size_t> live = alive();
    std::optional<std::size_t> single;
    for (std::size_t i : live) {
      if (nodes_[i].profit >= q_ && (!single || nodes_[i].cost < nodes_[*single].cost)) single = i;
    }
    if (single) return {*single};
    if (profit(live) <= 2 * q_) return live;

    std::size_t center = live.front();
    for (std::size_t i : live) {
      if (adj_[i].size() > adj_[center].size()) center = i;
    }
    std::vector<std::size_t> leaves(adj_[center].begin(), adj_[center].end());
    std::stable_sort(leaves.begin(), leaves.end(), [&](std::size_t x, std::size_t y) {
      // c(x)/π(x) < c(y)/π(y); zero-profit leaves go last.
      const auto& nx = nodes_[x];
      const auto& ny = nodes_[y];
      if (nx.profit == 0 || ny.profit == 0) return nx.profit != 0 && ny.profit == 0;
      return nx.cost * ny.profit < ny.cost * nx.profit;
    });
    std::vector<std::size_t> out{center};
    Rational got = nodes_[center].profit;
    for (std::size_t leaf : leaves) {
      if (got >= q_) break;
      out.push_back(leaf);
      got += nodes_[leaf].profit;
    }
    return out;
  }

  bool touches(const VertexSet& a, const VertexSet& b) const {
    for (Vertex v : a) {
      for (Vertex u : inst_.neighbours(v)) {
        if (contains(b, u)) return true;
      }
    }
    return false;
  }

  // Intermediate vertices of a minimum node-cost path from T1 to the set.
  VertexSet connecting_path(const VertexSet& target) const {
    const std::size_t n = inst_.size();
    std::vector<std::optional<Rational>> dist(n);
    std::vector<std::optional<Vertex>> pred(n);
    std::set<std::pair<Rational, Vertex>> queue;
    for (Vertex v : t1_) {
      dist[v] = Rational(0);
      queue.insert({0, v});
    }
    while (!queue.empty()) {
      auto [d, u] = *queue.begin();
      queue.erase(queue.begin());
      if (contains(target, u)) {
        VertexSet path;
        for (auto p = pred[u]; p && !contains(t1_, *p); p = pred[*p]) path.push_back(*p);
        normalize(path);
        return path;
      }
      for (Vertex w : inst_.neighbours(u)) {
        Rational nd = d + (contains(target, w) ? Rational(0) : inst_.cost(w));
        if (!dist[w] || nd < *dist[w]) {
          if (dist[w]) queue.erase({*dist[w], w});
          dist[w] = nd;
          pred[w] = u;
          queue.insert({nd, w});
        }
      }
    }
    throw InvariantError("supplement is unreachable from T1");
  }

  const Instance& inst_;
  VertexSet t1_;
  Rational q_;
  Rational ref_cost_;
  Rational ref_profit_;
  std::vector<MergeNode> nodes_;
  std::vector<std::set<std::size_t>> adj_;
};

}  // namespace

MergeResult merge_trees(const Instance& inst, const VertexSet& t1, const VertexSet& t2, const Rational& q) {
  if (!inst.has_profits()) throw PreconditionError("merge needs profits");
  if (q <= 0) throw PreconditionError("merge needs q > 0");
  if (!contains(t1, inst.root()) || !contains(t2, inst.root())) {
    throw PreconditionError("both trees must contain the root");
  }
  if (!inst.induces_connected(t1) || !inst.induces_connected(t2)) {
    throw PreconditionError("merge inputs must be connected");
  }
  if (inst.profit_of(set_difference(t2, t1)) < q) throw PreconditionError("T2 \\ T1 carries less than q");
  return Merger(inst, t1, t2, q).run();
}

QuotaReport solve_quota(const Instance& inst, const Rational& quota) {
  if (!inst.has_profits()) throw PreconditionError("quota problems need profits on every vertex");
  if (quota < 0) throw PreconditionError("negative quota");
  QuotaReport report;
  report.quota = quota;
  for (const auto& p : inst.profits()) report.total_profit += p;
  if (quota > report.total_profit) {
    throw InfeasibleError("quota " + to_string(quota) + " exceeds total profit " + to_string(report.total_profit));
  }
  VertexSet reachable = root_component(inst);
  if (inst.profit_of(reachable) < quota) {
    throw InfeasibleError("the root's component carries less profit than the quota");
  }

  auto finish = [&](VertexSet tree, std::string chosen) {
    report.tree = std::move(tree);
    report.cost = inst.cost_of(report.tree);
    report.profit = inst.profit_of(report.tree);
    report.chosen = std::move(chosen);
    if (report.profit < quota || !contains(report.tree, inst.root()) || !inst.induces_connected(report.tree)) {
      throw InvariantError("quota solution is infeasible");
    }
    return report;
  };

  if (quota <= inst.profit(inst.root())) return finish({inst.root()}, "root");

  Rational cost_sum = 0;
  std::optional<Rational> c_min;
  for (Vertex v : reachable) {
    if (v == inst.root()) continue;
    cost_sum += inst.cost(v);
    if (inst.cost(v) > 0 && (!c_min || inst.cost(v) < *c_min)) c_min = inst.cost(v);
  }
  if (!c_min) return finish(reachable, "fallback");

  std::vector<Rational> grid;
  for (Rational g = *c_min; g < cost_sum; g *= 2) grid.push_back(g);
  grid.push_back(cost_sum);
  const Rational tolerance = *c_min / report.total_profit;

  std::optional<std::size_t> best;
  std::vector<VertexSet> candidate_trees;
  for (const Rational& guess : grid) {
    QuotaCandidate cand;
    cand.opt_guess = guess;
    VertexSet keep = kept_by_distance(inst, guess);
    Instance pruned = inst.induced(keep);
    for (const auto& p : pruned.profits()) cand.pruned_total_profit += p;

    LagrangianResult search;
    try {
      search = lagrangian_search(pruned, quota, tolerance);
    } catch (const PreconditionError& e) {
      cand.note = e.what();
      report.candidates.push_back(std::move(cand));
      candidate_trees.emplace_back();
      continue;
    } catch (const InfeasibleError& e) {
      cand.note = e.what();
      report.candidates.push_back(std::move(cand));
      candidate_trees.emplace_back();
      continue;
    }

    VertexSet tree;
    if (search.exact) {
      tree = search.upper.tree;
      cand.note = "exact";
    } else {
      Rational q = quota - search.lower.profit;
      MergeResult merge = merge_trees(pruned, search.lower.tree, search.upper.tree, q);
      if (pruned.cost_of(merge.tree) <= search.upper.cost) {
        tree = merge.tree;
        cand.note = "merge";
      } else {
        tree = search.upper.tree;
        cand.note = "upper";
      }
      merge.tree = remap(merge.tree, keep);
      merge.supplement = remap(merge.supplement, keep);
      merge.path = remap(merge.path, keep);
      for (auto& step : merge.steps) {
        step.kept = remap(step.kept, keep);
        step.removed = remap(step.removed, keep);
      }
      cand.merge = std::move(merge);
    }
    search.lower.tree = remap(search.lower.tree, keep);
    search.upper.tree = remap(search.upper.tree, keep);
    cand.search = std::move(search);
    tree = remap(tree, keep);
    if (!best || inst.cost_of(tree) < inst.cost_of(candidate_trees[*best])) best = report.candidates.size();
    report.candidates.push_back(std::move(cand));
    candidate_trees.push_back(std::move(tree));
  }

  if (!best) return finish(reachable, "fallback");

  const QuotaCandidate& win = report.candidates[*best];
  report.opt_guess = win.opt_guess;
  report.pruned_total_profit = win.pruned_total_profit;
  report.search = win.search;
  const LagrangianResult& s = *win.search;
  for (const auto& cand : report.candidates) {
    if (!cand.search || cand.search->exact) continue;
    if (cand.merge) {
      for (const auto& v : cand.merge->violations) report.violations.push_back("guess " + to_string(cand.opt_guess) + ": " + v);
    }
  }
  if (s.exact) {
    report.a1 = 0;
    report.a2 = 1;
    report.deviation_identity = win.pruned_total_profit - s.upper.profit;
    report.convex_cost = s.upper.cost;
  } else {
    Rational spread = s.upper.profit - s.lower.profit;
    report.a1 = (s.upper.profit - quota) / spread;
    report.a2 = (quota - s.lower.profit) / spread;
    report.deviation_identity = report.a1 * (win.pruned_total_profit - s.lower.profit) +
                                report.a2 * (win.pruned_total_profit - s.upper.profit);
    report.convex_cost = report.a1 * s.lower.cost + report.a2 * s.upper.cost;
    if (report.deviation_identity != win.pruned_total_profit - quota) {
      report.violations.push_back("profit-deviation identity fails on the chosen pair");
    }
  }
  return finish(candidate_trees[*best], win.note);
}

}  // namespace pcst
