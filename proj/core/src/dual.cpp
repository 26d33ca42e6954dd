#include "pcst/dual.hpp"

#include <map>
#include <queue>

#include "pcst/error.hpp"

namespace pcst {

Rational dual_value(const DualSolution& dual) {
  Rational sum = 0;
  for (const auto& e : dual) sum += e.y;
  return sum;
}

DualSolution canonicalize(const DualSolution& dual) {
  std::map<VertexSet, DualEntry> merged;
  for (DualEntry e : dual) {
    normalize(e.set);
    normalize(e.core);
    auto [it, fresh] = merged.try_emplace(e.set, e);
    if (!fresh) {
      it->second.y += e.y;
      if (it->second.core.empty()) it->second.core = e.core;
    }
  }
  DualSolution out;
  for (auto& [set, e] : merged) {
    if (e.y != 0) out.push_back(std::move(e));
  }
  return out;
}

bool is_laminar(const DualSolution& dual) {
  for (std::size_t i = 0; i < dual.size(); ++i) {
    for (std::size_t j = i + 1; j < dual.size(); ++j) {
      const auto& a = dual[i].set;
      const auto& b = dual[j].set;
      if (intersects(a, b) && !is_subset(a, b) && !is_subset(b, a)) return false;
    }
  }
  return true;
}

std::string DualViolation::describe(const Instance& inst) const {
  std::string names;
  for (Vertex v : where) {
    if (!names.empty()) names += ",";
    names += inst.id(v);
  }
  switch (kind) {
    case Kind::Negative:
      return "negative dual " + to_string(lhs) + " on {" + names + "}";
    case Kind::Cost:
      return "cost constraint at " + names + ": load " + to_string(lhs) + " > " + to_string(rhs);
    case Kind::Penalty:
      return "penalty constraint on {" + names + "}: " + to_string(lhs) + " > " + to_string(rhs);
    case Kind::Domain:
      return "dual set {" + names + "} is empty or contains the root";
  }
  return {};
}

namespace {

// Sign, domain and cost constraints; shared by both checkers.
std::vector<DualViolation> check_common(const ReducedInstance& reduced, const DualSolution& dual) {
  const Instance& g = reduced.graph();
  std::vector<DualViolation> out;
  std::vector<Rational> load(g.size());
  for (const auto& e : dual) {
    if (e.y < 0) out.push_back({DualViolation::Kind::Negative, e.set, e.y, 0});
    if (e.set.empty() || contains(e.set, g.root())) {
      out.push_back({DualViolation::Kind::Domain, e.set, e.y, 0});
      continue;
    }
    for (Vertex v : g.boundary(e.set)) load[v] += e.y;
  }
  for (Vertex v : reduced.non_root) {
    if (load[v] > reduced.reduced_cost[v]) {
      out.push_back({DualViolation::Kind::Cost, {v}, load[v], reduced.reduced_cost[v]});
    }
  }
  return out;
}

}  // namespace

std::vector<DualViolation> check_dual_feasibility(const ReducedInstance& reduced,
                                                  const DualSolution& dual) {
  DualSolution canon = canonicalize(dual);
  if (!is_laminar(canon)) throw PreconditionError("dual support is not laminar");
  auto out = check_common(reduced, canon);
  for (const auto& s : canon) {
    Rational inside = 0;
    for (const auto& u : canon) {
      if (is_subset(u.set, s.set)) inside += u.y;
    }
    Rational cap = reduced.reduced_penalty_of(s.set);
    if (inside > cap) out.push_back({DualViolation::Kind::Penalty, s.set, inside, cap});
  }
  return out;
}

namespace {

// Edmonds–Karp on an adjacency-matrix network with exact capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : cap_(n, std::vector<Rational>(n)), adj_(n) {}

  void add(std::size_t a, std::size_t b, const Rational& c) {
    if (cap_[a][b] == 0 && cap_[b][a] == 0) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    cap_[a][b] += c;
  }

  Rational max_flow(std::size_t s, std::size_t t) {
    Rational total = 0;
    const std::size_t n = cap_.size();
    while (true) {
      std::vector<std::size_t> prev(n, n);
      prev[s] = s;
      std::queue<std::size_t> queue;
      queue.push(s);
      while (!queue.empty() && prev[t] == n) {
        std::size_t a = queue.front();
        queue.pop();
        for (std::size_t b : adj_[a]) {
          if (prev[b] == n && cap_[a][b] > 0) {
            prev[b] = a;
            queue.push(b);
          }
        }
      }
      if (prev[t] == n) return total;
      Rational push = cap_[prev[t]][t];
      for (std::size_t b = t; b != s; b = prev[b]) push = std::min(push, cap_[prev[b]][b]);
      for (std::size_t b = t; b != s; b = prev[b]) {
        cap_[prev[b]][b] -= push;
        cap_[b][prev[b]] += push;
      }
      total += push;
    }
  }

  /// Nodes reachable from s in the residual network.
  std::vector<bool> source_side(std::size_t s) const {
    std::vector<bool> seen(cap_.size(), false);
    std::queue<std::size_t> queue;
    queue.push(s);
    seen[s] = true;
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop();
      for (std::size_t b : adj_[a]) {
        if (!seen[b] && cap_[a][b] > 0) {
          seen[b] = true;
          queue.push(b);
        }
      }
    }
    return seen;
  }

 private:
  std::vector<std::vector<Rational>> cap_;
  std::vector<std::vector<std::size_t>> adj_;
};

}  // namespace

std::vector<DualViolation> check_dual_feasibility_general(const ReducedInstance& reduced,
                                                          const DualSolution& dual) {
  DualSolution canon = canonicalize(dual);
  auto out = check_common(reduced, canon);
  const Instance& g = reduced.graph();

  // Only entries with positive y on valid sets take part in the closure.
  DualSolution usable;
  for (const auto& e : canon) {
    if (e.y > 0 && !e.set.empty() && !contains(e.set, g.root())) usable.push_back(e);
  }
  if (usable.empty()) return out;

  const std::size_t k = usable.size();
  const std::size_t n = g.size();
  const std::size_t source = k + n;
  const std::size_t sink = source + 1;
  Rational total = dual_value(usable);
  Rational infinite = total + 1;
  FlowNetwork net(k + n + 2);
  for (std::size_t i = 0; i < k; ++i) {
    net.add(source, i, usable[i].y);
    for (Vertex v : usable[i].set) net.add(i, k + v, infinite);
  }
  for (Vertex v : reduced.non_root) {
    if (reduced.reduced_penalty[v] > 0) net.add(k + v, sink, reduced.reduced_penalty[v]);
  }
  Rational cut = net.max_flow(source, sink);
  if (total - cut > 0) {
    auto side = net.source_side(source);
    VertexSet worst;
    for (Vertex v : reduced.non_root) {
      if (side[k + v]) worst.push_back(v);
    }
    Rational inside = 0;
    for (const auto& e : usable) {
      if (is_subset(e.set, worst)) inside += e.y;
    }
    out.push_back({DualViolation::Kind::Penalty, worst, inside, reduced.reduced_penalty_of(worst)});
  }
  return out;
}

}  // namespace pcst
