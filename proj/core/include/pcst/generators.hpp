#ifndef PCST_GENERATORS_HPP
#define PCST_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "pcst/instance.hpp"

namespace pcst {

/// The bipartite family on which monotone dual growth collapses.
/// Vertices r, x, u1..un, v1..vn, w1..wn (in that index order).
/// Throws PreconditionError for n == 0.
Instance gen_counterexample(unsigned n);

struct RandomSpec {
  unsigned n = 1;
  Rational edge_prob = 1;
  unsigned max_cost = 10;
  unsigned max_penalty = 10;
  std::uint64_t seed = 0;
  /// When nonzero, attaches integer profits uniform in [0, max_profit].
  unsigned max_profit = 0;
};

/// Erdős–Rényi graph with uniform integer weights; vertex "0" is the root.
/// A pure function of the spec (mt19937_64 with explicit range mapping, so
/// the output is identical on every platform).
Instance gen_random(const RandomSpec& spec);

struct CoverSet {
  Rational cost;
  std::vector<unsigned> elements;
};

/// Set-cover encoding: root adjacent to one vertex per set (cost = set cost,
/// penalty 0), one vertex per element (cost 0, penalty 1 + Σ set costs)
/// adjacent to the sets containing it. Throws PreconditionError when some
/// element is in no set or an element index is out of range.
Instance gen_from_set_cover(unsigned element_count, const std::vector<CoverSet>& sets);

}  // namespace pcst

#endif  // PCST_GENERATORS_HPP
