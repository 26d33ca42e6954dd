#include "pcst/tree_builder.hpp"

#include <algorithm>
#include <map>

#include "pcst/aux_graph.hpp"
#include "pcst/error.hpp"

namespace pcst {

namespace {

class Builder {
 public:
  Builder(const Ledger& ledger, std::set<ComponentId>& charged)
      : ledger_(ledger), g_(ledger.reduced().graph()), in_tree_(g_.size(), false), charged_(charged) {}

  TreeBuildResult run(Vertex center) {
    if (ledger_.absorbed(center)) throw PreconditionError("phase center is already absorbed");
    in_tree_[center] = true;
    for (SetId s : ledger_.maximal_sets_adjacent(center)) find_sub_tree(s, {center}, 0, true);

    TreeBuildResult out;
    out.tree.center = center;
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (in_tree_[v]) out.tree.vertices.push_back(v);
    }
    if (!g_.induces_connected(out.tree.vertices)) throw InvariantError("phase tree is not connected");

    for (const auto& c : ledger_.components()) {
      if (is_subset(c.vertices, out.tree.vertices)) {
        out.tree.components.push_back(c.id);
      } else if (intersects(c.vertices, out.tree.vertices)) {
        violations_.push_back("component " + std::to_string(c.id) + " only partly in the tree");
      }
    }
    for (auto& [core, entry] : charges_) out.charges.push_back(entry);
    check(out);
    out.calls = std::move(calls_);
    out.violations = std::move(violations_);
    return out;
  }

 private:
  bool node_in_tree(const AuxGraph& h, std::size_t node) const {
    for (Vertex v : h.expand(ledger_, node)) {
      if (in_tree_[v]) return true;
    }
    return false;
  }

  void add_originals(const AuxGraph& h, const std::vector<std::size_t>& path) {
    for (std::size_t i : path) {
      if (!h.nodes[i].is_super()) in_tree_[h.nodes[i].vertex] = true;
    }
  }

  // FindSubTree on every super of h that is still outside the tree and is
  // adjacent to one of the given original nodes.
  void spawn_adjacent(const AuxGraph& h, const std::vector<std::size_t>& path, std::size_t depth) {
    VertexSet on_path;
    for (std::size_t i : path) {
      if (!h.nodes[i].is_super()) on_path.push_back(h.nodes[i].vertex);
    }
    normalize(on_path);
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
      if (!h.nodes[i].is_super() || node_in_tree(h, i)) continue;
      SetId r = h.nodes[i].set;
      VertexSet terminals;
      for (Vertex v : on_path) {
        if (contains(ledger_.set(r).boundary, v)) terminals.push_back(v);
      }
      if (!terminals.empty()) find_sub_tree(r, terminals, depth, false);
    }
  }

  void find_sub_tree(SetId s, const VertexSet& terminals, std::size_t depth, bool direct) {
    const SupportSet& set = ledger_.set(s);
    if (!visited_.insert(s).second) {
      throw InvariantError("FindSubTree called twice on set " + std::to_string(s));
    }
    if (!charged_.insert(set.core).second) {
      throw InvariantError("core " + std::to_string(set.core) + " charged twice");
    }
    if (terminals.empty() || terminals.size() > 2) {
      throw InvariantError("FindSubTree on set " + std::to_string(s) + " with |L| = " +
                           std::to_string(terminals.size()));
    }
    for (Vertex v : terminals) {
      if (!in_tree_[v] || !contains(set.boundary, v)) {
        throw InvariantError("FindSubTree terminal " + g_.id(v) + " not on the tree boundary");
      }
    }
    calls_.push_back({s, set.core, terminals, depth, direct});

    ChargeEntry& entry = charges_[set.core];
    entry.core = set.core;
    entry.core_vertices = ledger_.component(set.core).vertices;
    entry.set = s;
    entry.age = ledger_.component_age(set.core);

    // Part I: join the terminals inside H_S.
    AuxGraph h = build_aux_graph(ledger_, s, terminals);
    std::vector<std::size_t> path{*h.node_of_vertex(terminals.front())};
    if (terminals.size() == 2) path = shortest_aux_path(h, path.front(), {*h.node_of_vertex(terminals.back())});
    entry.c1 = path_cost(h, path);
    add_originals(h, path);
    spawn_adjacent(h, path, depth + 1);

    // Part II: hang the core onto the tree.
    std::size_t levels = 0;
    connect_vertex(s, entry.core_vertices.front(), 0, entry, levels);
    entry.cvtx_depth = levels;
    for (Vertex v : entry.core_vertices) in_tree_[v] = true;
  }

  void connect_vertex(SetId sd, Vertex z, std::size_t d, ChargeEntry& entry, std::size_t& levels) {
    levels = std::max(levels, d + 1);
    const SupportSet& set = ledger_.set(sd);
    VertexSet extra;
    if (!contains(set.vertices, z)) extra.push_back(z);
    for (Vertex v : set.boundary) {
      if (in_tree_[v]) extra.push_back(v);
    }
    for (Vertex v : g_.neighbours(z)) {
      if (in_tree_[v] && !contains(set.vertices, v)) extra.push_back(v);
    }
    normalize(extra);

    AuxGraph h = build_aux_graph(ledger_, sd, extra);
    std::vector<std::size_t> targets;
    std::vector<bool> target_at_start(h.nodes.size(), false);
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
      if (node_in_tree(h, i)) {
        targets.push_back(i);
        target_at_start[i] = true;
        h.cost[i] = 0;
      }
    }
    std::size_t source = *h.node_of_vertex(z);
    std::vector<std::size_t> path = shortest_aux_path(h, source, targets);
    // Ending at a tree super instead of an original target costs the same,
    // so when the second-last node touches one, the super is the terminal.
    if (path.size() >= 2 && !h.nodes[path.back()].is_super()) {
      for (std::size_t w : h.adj[path[path.size() - 2]]) {
        if (h.nodes[w].is_super() && target_at_start[w]) {
          path.back() = w;
          break;
        }
      }
    }
    std::size_t terminal = path.back();

    // Only the second-last node may touch a tree-intersecting super.
    for (std::size_t k = 1; k + 2 < path.size(); ++k) {
      for (std::size_t w : h.adj[path[k]]) {
        if (h.nodes[w].is_super() && target_at_start[w]) {
          violations_.push_back("internal ConnectVertex node " + g_.id(h.nodes[path[k]].vertex) +
                                " touches a tree super");
        }
      }
    }

    std::vector<std::size_t> q(path.begin(), path.end() - 1);
    entry.c2 += path_cost(h, q);
    if (h.nodes[terminal].is_super() && path.size() >= 2) {
      SetId next = h.nodes[terminal].set;
      std::size_t zn = path[path.size() - 2];
      Vertex znext = h.nodes[zn].vertex;
      entry.c3 += ledger_.reduced().reduced_cost[znext] - h.cost[zn];
      const Rational& outer = ledger_.component_age(set.core);
      const Rational& inner = ledger_.component_age(ledger_.set(next).core);
      if (!(inner * 2 < outer)) {
        violations_.push_back("ConnectVertex chain age did not halve at set " + std::to_string(next));
      }
      connect_vertex(next, znext, d + 1, entry, levels);
    }
    add_originals(h, q);
    spawn_adjacent(h, path, d + 1);
  }

  void check(const TreeBuildResult& out) {
    const ReducedInstance& reduced = ledger_.reduced();
    Rational total_charge = 0;
    for (const auto& e : out.charges) {
      std::string tag = "core " + std::to_string(e.core);
      if (e.c1 > 2 * e.age) violations_.push_back(tag + ": c1 exceeds 2·age");
      if (e.c2 > 4 * e.age) violations_.push_back(tag + ": c2 exceeds 4·age");
      if (e.c3 > e.age) violations_.push_back(tag + ": c3 exceeds age");
      if (e.total() > 7 * e.age) violations_.push_back(tag + ": charge exceeds 7·age");
      total_charge += e.total();
    }
    // Vertices of initial components were paid for in earlier phases.
    VertexSet fresh = out.tree.vertices;
    for (const auto& comp : ledger_.components()) fresh = set_difference(fresh, comp.vertices);
    if (reduced.reduced_cost_of(fresh) > total_charge) {
      violations_.push_back("reduced tree cost exceeds the collected charges");
    }
    for (Vertex w : out.tree.vertices) {
      for (const auto& lc : ledger_.load_detail(w)) {
        const VertexSet& core = ledger_.component(ledger_.set(lc.set).core).vertices;
        if (!is_subset(core, out.tree.vertices)) {
          violations_.push_back("tree vertex " + g_.id(w) + " is loaded by a core outside the tree");
          break;
        }
      }
    }
  }

  const Ledger& ledger_;
  const Instance& g_;
  std::vector<bool> in_tree_;
  std::set<ComponentId>& charged_;
  std::set<SetId> visited_;
  std::map<ComponentId, ChargeEntry> charges_;
  std::vector<FstCall> calls_;
  std::vector<std::string> violations_;
};

}  // namespace

TreeBuildResult build_phase_tree(const Ledger& ledger, Vertex center, std::set<ComponentId>& charged) {
  return Builder(ledger, charged).run(center);
}

}  // namespace pcst
