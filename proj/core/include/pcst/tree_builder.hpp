#ifndef PCST_TREE_BUILDER_HPP
#define PCST_TREE_BUILDER_HPP

#include <set>
#include <string>
#include <vector>

#include "pcst/dual_ledger.hpp"

namespace pcst {

/// The tree built at the end of a phase, as a vertex set of G.
struct PhaseTree {
  VertexSet vertices;
  std::vector<ComponentId> components;  // initial components it spans
  Vertex center = 0;
};

/// Charge Φ(C) collected by one FindSubTree call, split by source:
/// c1 the L-path, c2 the ConnectVertex paths, c3 the non-auxiliary cost of
/// the chain vertices z_1..z_{p-1}.
struct ChargeEntry {
  ComponentId core = 0;
  VertexSet core_vertices;
  SetId set = 0;
  Rational c1;
  Rational c2;
  Rational c3;
  Rational age;
  std::size_t cvtx_depth = 0;  // p

  Rational total() const { return c1 + c2 + c3; }
};

struct FstCall {
  SetId set = 0;
  ComponentId core = 0;
  VertexSet terminals;  // L
  std::size_t depth = 0;
  bool direct = false;  // called from the phase center
};

struct TreeBuildResult {
  PhaseTree tree;
  std::vector<ChargeEntry> charges;
  std::vector<FstCall> calls;
  /// Analysis-level properties that failed (charge bounds, age halving,
  /// loader coverage). Structural breakage throws instead.
  std::vector<std::string> violations;
};

/**
 * Builds the phase tree around the tight vertex ṽ: FindSubTree on every
 * maximal support set adjacent to ṽ, which recursively connects cores via
 * shortest paths in auxiliary graphs and ConnectVertex chains.
 *
 * `charged` holds the cores charged earlier in the run; it is extended here.
 * Throws InvariantError if FindSubTree would run twice on a set or core, if
 * |L| > 2, or if an auxiliary path does not exist.
 */
TreeBuildResult build_phase_tree(const Ledger& ledger, Vertex center,
                                 std::set<ComponentId>& charged);

}  // namespace pcst

#endif  // PCST_TREE_BUILDER_HPP
