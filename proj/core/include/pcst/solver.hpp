#ifndef PCST_SOLVER_HPP
#define PCST_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "pcst/growth_engine.hpp"
#include "pcst/instance.hpp"

namespace pcst {

struct PhaseRecord {
  std::size_t index = 0;  // 1-based
  std::vector<InitialComponent> components;
  VertexSet root_block;
  PhaseOutcome outcome;
  /// Tree merged into the root block (as opposed to becoming a component).
  bool joined_root = false;
};

struct SolutionReport {
  VertexSet tree;
  Rational objective;
  Rational cost_part;
  Rational penalty_part;
  /// p(V') of the fixed part of the dual.
  Rational fixed_dual;
  std::vector<PhaseRecord> phases;
  /// ȳ^i: y^i restricted to sets whose core lies inside the final tree.
  std::vector<DualSolution> restricted_duals;
  std::optional<std::size_t> best_restricted;  // index into phases
  DualSolution last_dual;                      // y^m (empty when no phase ran)
  std::vector<std::string> violations;

  const DualSolution& phase_dual(std::size_t i) const { return phases[i].outcome.dual; }
  const Rational& end_time(std::size_t i) const { return phases[i].outcome.end_time; }
};

struct SolveOptions {
  PhaseOptions phase;
};

/// Phase-by-phase primal-dual algorithm. The objective is evaluated on the
/// instance's own costs and penalties.
SolutionReport solve(const Instance& inst, const SolveOptions& options = {});

/// ȳ_S = y_S when core(S) ⊆ tree, else 0 (zeros are dropped).
DualSolution restrict_dual_to_tree(const DualSolution& dual, const VertexSet& tree);

/// Both inequalities behind the multiplier-preserving bound, evaluated on
/// the original instance (reduced quantities).
struct LmpCertificate {
  Rational tree_reduced_cost;        // c̄(T)
  Rational best_restricted_value;    // Σ ȳ*
  Rational outside_reduced_penalty;  // π̄(V' \ T), original penalties
  Rational last_dual_value;          // Σ z
  Rational combined_value;           // Σ y'
  /// c̄(T) / Σ ȳ*, or 0 when Σ ȳ* = 0 (then c̄(T) = 0 is required).
  Rational alpha;
  /// c̄(T) + 2α·π̄(V'\T) and 2α·Σ y'.
  Rational lhs;
  Rational rhs;
  bool cost_inequality_holds = false;     // c̄(T) <= α Σ ȳ*
  bool penalty_inequality_holds = false;  // 2 π̄(V'\T) <= Σ z
  bool combined_holds = false;
};

struct LmpReport {
  Instance transformed;
  SolutionReport base;          // run on the transformed instance
  Rational original_objective;  // c(T) + π(V \ T) on the input
  DualSolution combined_dual;   // y' = ȳ*/2 + z/2
  LmpCertificate certificate;
};

/// Runs solve on π'(v) = 2π(v) - c(v) (cheap v), π'(v) = π(v) (expensive v)
/// and certifies y' against the input. Throws InvariantError when y' is
/// infeasible for the input's reduced dual.
LmpReport solve_lmp(const Instance& inst, const SolveOptions& options = {});

struct BaselineStep {
  Rational tau;
  enum class Kind { Exhausted, Merge } kind;
  std::optional<Vertex> vertex;
  VertexSet component;
};

struct BaselineReport {
  Rational dual_total;  // Σ y + p(V')
  Rational y_total;
  Rational fixed_dual;
  VertexSet root_component;
  Rational root_component_objective;
  DualSolution dual;
  std::vector<BaselineStep> trace;
};

/// Monotone growth: uniform raise on active components, exhausted ones stop,
/// a tight vertex merges with every adjacent component unconditionally.
BaselineReport solve_monotone_baseline(const Instance& inst);

}  // namespace pcst

#endif  // PCST_SOLVER_HPP
