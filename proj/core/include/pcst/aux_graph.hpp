#ifndef PCST_AUX_GRAPH_HPP
#define PCST_AUX_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pcst/dual_ledger.hpp"

namespace pcst {

/// Node of an auxiliary graph: an original vertex or a contracted support set.
struct AuxNode {
  enum class Kind { Original, Super };
  Kind kind = Kind::Original;
  Vertex vertex = 0;  // Original
  SetId set = 0;      // Super
  /// Total order used for deterministic tie-breaking: originals by vertex
  /// index, then supers by set id.
  std::size_t key = 0;

  bool is_super() const { return kind == Kind::Super; }
};

/**
 * Graph H_S used inside tree construction for a support set S.
 *
 * Start from G[S ∪ extra], identify every inclusion-wise maximal exhausted
 * set strictly inside S into a super node. Node costs are the auxiliary
 * costs c_S: zero on supers and on core(S), otherwise the dual load the
 * vertex receives from sets R ⊆ S with core(R) = core(S).
 */
struct AuxGraph {
  std::vector<AuxNode> nodes;  // sorted by key
  std::vector<std::vector<std::size_t>> adj;
  std::vector<Rational> cost;

  std::optional<std::size_t> node_of_vertex(Vertex v) const;
  std::optional<std::size_t> node_of_set(SetId s) const;
  std::size_t add_node(AuxNode node);
  void add_edge(std::size_t a, std::size_t b);
  /// Vertices represented by a node (the whole set for supers).
  VertexSet expand(const Ledger& ledger, std::size_t node) const;
};

/// Maximal exhausted sets strictly inside S.
std::vector<SetId> contracted_children(const Ledger& ledger, SetId s);

/// c_S(v): load on v from sets R ⊆ S with v ∈ Γ(R) and core(R) = core(S).
Rational aux_cost(const Ledger& ledger, SetId s, Vertex v);

/// Builds H_S over S plus the given extra vertices outside S. Extra vertices
/// get cost c_S(v) as well (zero when no set of S's core loads them).
AuxGraph build_aux_graph(const Ledger& ledger, SetId s, const VertexSet& extra);

/// Minimum node-weighted path from `source` to the nearest node in `targets`.
/// Path cost includes both endpoints. Ties: fewer hops, then the smaller
/// predecessor key at every step. Throws InvariantError if no target is
/// reachable or the inputs are empty.
std::vector<std::size_t> shortest_aux_path(const AuxGraph& graph, std::size_t source,
                                           const std::vector<std::size_t>& targets);

Rational path_cost(const AuxGraph& graph, const std::vector<std::size_t>& path);

}  // namespace pcst

#endif  // PCST_AUX_GRAPH_HPP
