#include "pcst/aux_graph.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "pcst/error.hpp"

namespace pcst {

std::optional<std::size_t> AuxGraph::node_of_vertex(Vertex v) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].is_super() && nodes[i].vertex == v) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> AuxGraph::node_of_set(SetId s) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].is_super() && nodes[i].set == s) return i;
  }
  return std::nullopt;
}

std::size_t AuxGraph::add_node(AuxNode node) {
  nodes.push_back(node);
  adj.emplace_back();
  cost.emplace_back(0);
  return nodes.size() - 1;
}

void AuxGraph::add_edge(std::size_t a, std::size_t b) {
  adj[a].push_back(b);
  adj[b].push_back(a);
}

VertexSet AuxGraph::expand(const Ledger& ledger, std::size_t node) const {
  if (nodes[node].is_super()) return ledger.set(nodes[node].set).vertices;
  return {nodes[node].vertex};
}

std::vector<SetId> contracted_children(const Ledger& ledger, SetId s) {
  std::vector<SetId> out;
  std::vector<SetId> stack(ledger.set(s).children.begin(), ledger.set(s).children.end());
  while (!stack.empty()) {
    SetId cur = stack.back();
    stack.pop_back();
    const SupportSet& set = ledger.set(cur);
    if (set.exhausted) {
      out.push_back(cur);
    } else {
      stack.insert(stack.end(), set.children.begin(), set.children.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational aux_cost(const Ledger& ledger, SetId s, Vertex v) {
  const SupportSet& top = ledger.set(s);
  if (contains(ledger.component(top.core).vertices, v)) return 0;
  Rational sum = 0;
  for (SetId r : ledger.descendants(s)) {
    const SupportSet& set = ledger.set(r);
    if (set.core == top.core && contains(set.boundary, v)) sum += set.y;
  }
  return sum;
}

AuxGraph build_aux_graph(const Ledger& ledger, SetId s, const VertexSet& extra) {
  const Instance& g = ledger.reduced().graph();
  const std::size_t n = g.size();
  const SupportSet& top = ledger.set(s);
  std::vector<SetId> supers = contracted_children(ledger, s);

  VertexSet covered;
  for (SetId r : supers) covered = set_union(covered, ledger.set(r).vertices);
  VertexSet originals = set_difference(top.vertices, covered);
  for (Vertex v : extra) {
    if (contains(top.vertices, v)) throw PreconditionError("extra vertex lies inside the set");
  }
  originals = set_union(originals, extra);

  AuxGraph h;
  for (Vertex v : originals) {
    std::size_t i = h.add_node({AuxNode::Kind::Original, v, 0, v});
    h.cost[i] = aux_cost(ledger, s, v);
  }
  for (SetId r : supers) h.add_node({AuxNode::Kind::Super, 0, r, n + r});

  for (std::size_t i = 0; i < originals.size(); ++i) {
    for (std::size_t j = i + 1; j < originals.size(); ++j) {
      if (g.adjacent(originals[i], originals[j])) h.add_edge(i, j);
    }
  }
  for (std::size_t k = 0; k < supers.size(); ++k) {
    const SupportSet& r = ledger.set(supers[k]);
    std::size_t node = originals.size() + k;
    for (std::size_t i = 0; i < originals.size(); ++i) {
      if (contains(r.boundary, originals[i])) h.add_edge(i, node);
    }
    for (std::size_t l = k + 1; l < supers.size(); ++l) {
      if (intersects(r.boundary, ledger.set(supers[l]).vertices)) {
        throw InvariantError("super-vertices " + std::to_string(supers[k]) + " and " +
                             std::to_string(supers[l]) + " are adjacent");
      }
    }
  }
  for (auto& list : h.adj) std::sort(list.begin(), list.end());
  return h;
}

std::vector<std::size_t> shortest_aux_path(const AuxGraph& graph, std::size_t source,
                                           const std::vector<std::size_t>& targets) {
  const std::size_t m = graph.nodes.size();
  if (source >= m || targets.empty()) throw InvariantError("shortest path with no source or target");
  std::vector<bool> is_target(m, false);
  for (std::size_t t : targets) is_target.at(t) = true;

  // Labels are (cost, hops); a node is settled in (cost, hops, key) order,
  // so every predecessor candidate is settled before the node itself.
  std::vector<std::optional<std::pair<Rational, std::size_t>>> label(m);
  std::vector<std::size_t> pred(m, m);
  using Entry = std::tuple<Rational, std::size_t, std::size_t, std::size_t>;  // cost, hops, key, node
  std::set<Entry> queue;
  std::vector<bool> settled(m, false);
  label[source] = {graph.cost[source], 0};
  queue.insert({graph.cost[source], 0, graph.nodes[source].key, source});
  while (!queue.empty()) {
    auto [dist, hops, key, u] = *queue.begin();
    queue.erase(queue.begin());
    if (settled[u]) continue;
    settled[u] = true;
    if (is_target[u]) {
      std::vector<std::size_t> path;
      for (std::size_t x = u; x != m; x = pred[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t w : graph.adj[u]) {
      if (settled[w]) continue;
      std::pair<Rational, std::size_t> cand{dist + graph.cost[w], hops + 1};
      bool better = !label[w] || cand < *label[w] ||
                    (cand == *label[w] && graph.nodes[u].key < graph.nodes[pred[w]].key);
      if (!better) continue;
      if (label[w]) queue.erase({label[w]->first, label[w]->second, graph.nodes[w].key, w});
      label[w] = cand;
      pred[w] = u;
      queue.insert({cand.first, cand.second, graph.nodes[w].key, w});
    }
  }
  throw InvariantError("no auxiliary path reaches a target");
}

Rational path_cost(const AuxGraph& graph, const std::vector<std::size_t>& path) {
  Rational sum = 0;
  for (std::size_t i : path) sum += graph.cost[i];
  return sum;
}

}  // namespace pcst
