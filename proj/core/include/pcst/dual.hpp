#ifndef PCST_DUAL_HPP
#define PCST_DUAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pcst/instance.hpp"

namespace pcst {

/// One variable y_S of the reduced dual. `core` is the vertex set of the
/// initial component that owns S; it is empty for duals read from files.
struct DualEntry {
  VertexSet set;
  Rational y;
  VertexSet core;
};

using DualSolution = std::vector<DualEntry>;

Rational dual_value(const DualSolution& dual);

/// Sum of entries with identical vertex sets; drops zero entries.
DualSolution canonicalize(const DualSolution& dual);

bool is_laminar(const DualSolution& dual);

struct DualViolation {
  enum class Kind { Negative, Cost, Penalty, Domain };
  Kind kind;
  VertexSet where;  // the vertex (cost) or set (penalty)
  Rational lhs;
  Rational rhs;

  std::string describe(const Instance& inst) const;
};

/// Feasibility for the reduced dual on a laminar family: the cost constraint
/// at every v in V' and the penalty constraint at every support set.
/// For laminar support that is sufficient for all S ⊆ V'.
/// Throws PreconditionError when the family is not laminar.
std::vector<DualViolation> check_dual_feasibility(const ReducedInstance& reduced,
                                                  const DualSolution& dual);

/// Same constraints for an arbitrary family. The penalty side is decided
/// exactly by a maximum-weight closure (min s-t cut): maximize
/// Σ_{R ⊆ S} y_R - π̄(S) over all S ⊆ V'. At most one penalty violation
/// is reported, the most violated set.
std::vector<DualViolation> check_dual_feasibility_general(const ReducedInstance& reduced,
                                                          const DualSolution& dual);

}  // namespace pcst

#endif  // PCST_DUAL_HPP
