#ifndef PCST_INSTANCE_HPP
#define PCST_INSTANCE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcst/rational.hpp"
#include "pcst/vertex_set.hpp"

namespace pcst {

/**
 * Rooted node-weighted prize-collecting Steiner tree instance.
 *
 * Undirected simple graph with a nonnegative cost and penalty on every
 * vertex, an optional profit vector (quota problems only) and a designated
 * root. The graph need not be connected. Immutable once built; construct
 * through Instance::create, which validates everything.
 */
class Instance {
 public:
  struct VertexData {
    std::string id;
    Rational cost;
    Rational penalty;
    std::optional<Rational> profit;
  };

  /// Validates and builds. Throws ParseError on unknown root, duplicate ids,
  /// self-loops, parallel edges, unknown endpoints, negative weights, or
  /// profits given for some vertices but not others.
  static Instance create(std::vector<VertexData> vertices, std::string_view root,
                         const std::vector<std::pair<std::string, std::string>>& edges);

  /// Same, with endpoints given as dense indices.
  static Instance create(std::vector<VertexData> vertices, Vertex root,
                         std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t size() const { return ids_.size(); }
  Vertex root() const { return root_; }
  const std::string& id(Vertex v) const { return ids_[v]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<Vertex> index_of(std::string_view id) const;

  const Rational& cost(Vertex v) const { return cost_[v]; }
  const Rational& penalty(Vertex v) const { return penalty_[v]; }
  const std::vector<Rational>& costs() const { return cost_; }
  const std::vector<Rational>& penalties() const { return penalty_; }

  bool has_profits() const { return profit_.has_value(); }
  const Rational& profit(Vertex v) const { return (*profit_)[v]; }
  const std::vector<Rational>& profits() const { return *profit_; }

  /// Sorted neighbour list.
  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return contains(adj_[u], v); }
  /// Edges with u < v, lexicographically sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  /// Γ(S): vertices outside `set` with a neighbour inside it.
  VertexSet boundary(std::span<const Vertex> set) const;
  /// True iff G[set] is connected (the empty set counts as connected).
  bool induces_connected(std::span<const Vertex> set) const;

  Rational cost_of(std::span<const Vertex> set) const;
  Rational penalty_of(std::span<const Vertex> set) const;
  Rational profit_of(std::span<const Vertex> set) const;

  /// c(T) + π(V \ T) on this instance's own weights.
  Rational objective(std::span<const Vertex> tree) const;

  /// Copy with a different weight vector; graph and ids unchanged.
  Instance with_penalties(std::vector<Rational> penalties) const;
  Instance with_profits(std::optional<std::vector<Rational>> profits) const;

  /// Subgraph induced by `keep` (must contain the root); ids are preserved.
  Instance induced(std::span<const Vertex> keep) const;

 private:
  Instance() = default;

  std::vector<std::string> ids_;
  Vertex root_ = 0;
  std::vector<Rational> cost_;
  std::vector<Rational> penalty_;
  std::optional<std::vector<Rational>> profit_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/**
 * Instance with the cheap/expensive split applied.
 *
 * A vertex is cheap when c(v) <= π(v). The fixed part of the dual is
 * p_v = c(v) for cheap and π(v) for expensive vertices; what remains is the
 * reduced cost (positive only on expensive vertices) and reduced penalty
 * (positive only on cheap vertices).
 */
struct ReducedInstance {
  Instance base;
  std::vector<bool> is_cheap;
  std::vector<Rational> reduced_cost;
  std::vector<Rational> reduced_penalty;
  std::vector<Rational> fixed_dual;  // p_v
  VertexSet non_root;                // V' = V \ {r}

  const Instance& graph() const { return base; }
  std::size_t size() const { return base.size(); }
  Rational reduced_cost_of(std::span<const Vertex> set) const;
  Rational reduced_penalty_of(std::span<const Vertex> set) const;
  /// p(V) summed over V'.
  Rational fixed_dual_total() const;
};

ReducedInstance reduce(const Instance& inst);

/// Connected components of G[{r} ∪ cheap]; the first entry is the root's.
std::vector<VertexSet> cheap_components(const ReducedInstance& reduced);

}  // namespace pcst

#endif  // PCST_INSTANCE_HPP
