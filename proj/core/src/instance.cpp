#include "pcst/instance.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "pcst/error.hpp"

namespace pcst {

Instance Instance::create(std::vector<VertexData> vertices, std::string_view root,
                          const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, Vertex, std::less<>> index;
  for (Vertex v = 0; v < vertices.size(); ++v) {
    if (!index.emplace(vertices[v].id, v).second) {
      throw ParseError("duplicate vertex id '" + vertices[v].id + "'");
    }
  }
  auto root_it = index.find(root);
  if (root_it == index.end()) throw ParseError("root '" + std::string(root) + "' is not a vertex");

  std::vector<std::pair<Vertex, Vertex>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw ParseError("edge endpoint '" + a + "' is not a vertex");
    if (ib == index.end()) throw ParseError("edge endpoint '" + b + "' is not a vertex");
    indexed.emplace_back(ia->second, ib->second);
  }
  return create(std::move(vertices), root_it->second, std::move(indexed));
}

Instance Instance::create(std::vector<VertexData> vertices, Vertex root,
                          std::vector<std::pair<Vertex, Vertex>> edges) {
  Instance inst;
  const std::size_t n = vertices.size();
  if (root >= n) throw ParseError("root index out of range");

  std::size_t with_profit = 0;
  for (const auto& v : vertices) {
    if (v.cost < 0) throw ParseError("negative cost at vertex '" + v.id + "'");
    if (v.penalty < 0) throw ParseError("negative penalty at vertex '" + v.id + "'");
    if (v.profit) {
      if (*v.profit < 0) throw ParseError("negative profit at vertex '" + v.id + "'");
      ++with_profit;
    }
  }
  if (with_profit != 0 && with_profit != n) {
    throw ParseError("profits must be given for every vertex or for none");
  }

  inst.root_ = root;
  inst.ids_.reserve(n);
  inst.cost_.reserve(n);
  inst.penalty_.reserve(n);
  if (with_profit == n && n > 0) inst.profit_.emplace();
  std::map<std::string, int, std::less<>> seen;
  for (auto& v : vertices) {
    if (!seen.emplace(v.id, 0).second) throw ParseError("duplicate vertex id '" + v.id + "'");
    inst.ids_.push_back(std::move(v.id));
    inst.cost_.push_back(std::move(v.cost));
    inst.penalty_.push_back(std::move(v.penalty));
    if (inst.profit_) inst.profit_->push_back(std::move(*v.profit));
  }

  inst.adj_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw ParseError("edge endpoint index out of range");
    if (a == b) throw ParseError("self-loop at vertex '" + inst.ids_[a] + "'");
    if (a > b) std::swap(a, b);
    inst.edges_.emplace_back(a, b);
  }
  std::sort(inst.edges_.begin(), inst.edges_.end());
  for (std::size_t i = 1; i < inst.edges_.size(); ++i) {
    if (inst.edges_[i] == inst.edges_[i - 1]) {
      throw ParseError("parallel edge between '" + inst.ids_[inst.edges_[i].first] + "' and '" +
                       inst.ids_[inst.edges_[i].second] + "'");
    }
  }
  for (auto [a, b] : inst.edges_) {
    inst.adj_[a].push_back(b);
    inst.adj_[b].push_back(a);
  }
  for (auto& list : inst.adj_) std::sort(list.begin(), list.end());
  return inst;
}

std::optional<Vertex> Instance::index_of(std::string_view id) const {
  for (Vertex v = 0; v < ids_.size(); ++v) {
    if (ids_[v] == id) return v;
  }
  return std::nullopt;
}

VertexSet Instance::boundary(std::span<const Vertex> set) const {
  VertexSet out;
  for (Vertex v : set) {
    for (Vertex u : adj_[v]) {
      if (!contains(set, u)) out.push_back(u);
    }
  }
  normalize(out);
  return out;
}

bool Instance::induces_connected(std::span<const Vertex> set) const {
  if (set.empty()) return true;
  std::vector<bool> seen(size(), false);
  std::queue<Vertex> queue;
  queue.push(set.front());
  seen[set.front()] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex u : adj_[v]) {
      if (!seen[u] && contains(set, u)) {
        seen[u] = true;
        ++reached;
        queue.push(u);
      }
    }
  }
  return reached == set.size();
}

Rational Instance::cost_of(std::span<const Vertex> set) const {
  Rational sum = 0;
  for (Vertex v : set) sum += cost_[v];
  return sum;
}

Rational Instance::penalty_of(std::span<const Vertex> set) const {
  Rational sum = 0;
  for (Vertex v : set) sum += penalty_[v];
  return sum;
}

Rational Instance::profit_of(std::span<const Vertex> set) const {
  Rational sum = 0;
  if (!profit_) return sum;
  for (Vertex v : set) sum += (*profit_)[v];
  return sum;
}

Rational Instance::objective(std::span<const Vertex> tree) const {
  Rational total = 0;
  for (Vertex v = 0; v < size(); ++v) {
    total += contains(tree, v) ? cost_[v] : penalty_[v];
  }
  return total;
}

Instance Instance::with_penalties(std::vector<Rational> penalties) const {
  if (penalties.size() != size()) throw PreconditionError("penalty vector has wrong length");
  for (const auto& p : penalties) {
    if (p < 0) throw PreconditionError("negative penalty");
  }
  Instance copy = *this;
  copy.penalty_ = std::move(penalties);
  return copy;
}

Instance Instance::with_profits(std::optional<std::vector<Rational>> profits) const {
  if (profits && profits->size() != size()) throw PreconditionError("profit vector has wrong length");
  Instance copy = *this;
  copy.profit_ = std::move(profits);
  return copy;
}

Instance Instance::induced(std::span<const Vertex> keep) const {
  if (!contains(keep, root_)) throw PreconditionError("induced subgraph must keep the root");
  std::vector<std::optional<Vertex>> remap(size());
  std::vector<VertexData> vertices;
  for (Vertex v : keep) {
    remap[v] = vertices.size();
    vertices.push_back({ids_[v], cost_[v], penalty_[v],
                        profit_ ? std::optional<Rational>((*profit_)[v]) : std::nullopt});
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [a, b] : edges_) {
    if (remap[a] && remap[b]) edges.emplace_back(*remap[a], *remap[b]);
  }
  return create(std::move(vertices), *remap[root_], std::move(edges));
}

Rational ReducedInstance::reduced_cost_of(std::span<const Vertex> set) const {
  Rational sum = 0;
  for (Vertex v : set) sum += reduced_cost[v];
  return sum;
}

Rational ReducedInstance::reduced_penalty_of(std::span<const Vertex> set) const {
  Rational sum = 0;
  for (Vertex v : set) sum += reduced_penalty[v];
  return sum;
}

Rational ReducedInstance::fixed_dual_total() const {
  Rational sum = 0;
  for (Vertex v : non_root) sum += fixed_dual[v];
  return sum;
}

ReducedInstance reduce(const Instance& inst) {
  ReducedInstance out{inst, {}, {}, {}, {}, {}};
  const std::size_t n = inst.size();
  out.is_cheap.resize(n);
  out.reduced_cost.resize(n);
  out.reduced_penalty.resize(n);
  out.fixed_dual.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const Rational& c = inst.cost(v);
    const Rational& p = inst.penalty(v);
    bool cheap = c <= p;
    out.is_cheap[v] = cheap;
    out.reduced_cost[v] = cheap ? Rational(0) : Rational(c - p);
    out.reduced_penalty[v] = cheap ? Rational(p - c) : Rational(0);
    out.fixed_dual[v] = cheap ? c : p;
    if (v != inst.root()) out.non_root.push_back(v);
  }
  return out;
}

std::vector<VertexSet> cheap_components(const ReducedInstance& reduced) {
  const Instance& g = reduced.graph();
  const std::size_t n = g.size();
  auto eligible = [&](Vertex v) { return v == g.root() || reduced.is_cheap[v]; };
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  auto collect = [&](Vertex start) {
    VertexSet comp;
    std::queue<Vertex> queue;
    queue.push(start);
    seen[start] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (Vertex u : g.neighbours(v)) {
        if (!seen[u] && eligible(u)) {
          seen[u] = true;
          queue.push(u);
        }
      }
    }
    normalize(comp);
    out.push_back(std::move(comp));
  };
  collect(g.root());
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v] && eligible(v)) collect(v);
  }
  return out;
}

}  // namespace pcst
