#ifndef PCST_QUOTA_HPP
#define PCST_QUOTA_HPP

#include <optional>
#include <string>
#include <vector>

#include "pcst/instance.hpp"

namespace pcst {

/// Result of one Lagrangian probe: the multiplier-preserving solver run with
/// penalties λ·profit(v).
struct Probe {
  Rational lambda;
  VertexSet tree;
  Rational cost;
  Rational profit;
};

struct LagrangianResult {
  /// Profit of `lower` <= Q <= profit of `upper`. When a probe hits Q
  /// exactly (or λ = 0 already reaches Q), both hold the same probe and
  /// `exact` is set.
  Probe lower;
  Probe upper;
  bool exact = false;
  Rational tolerance;
  std::size_t probes = 0;
};

/// Binary search on λ in [0, λ_max], λ_max = Σc / (min positive profit) + 1,
/// until λ₂ - λ₁ <= tolerance. Throws InfeasibleError when Q exceeds the
/// total profit, and PreconditionError when the λ_max probe still falls
/// short of Q.
LagrangianResult lagrangian_search(const Instance& inst, const Rational& quota,
                                   const Rational& tolerance);

/// Removes every vertex whose node-weighted distance from the root (costs of
/// path vertices, root excluded, endpoint included) exceeds `bound`.
Instance prune_by_distance(const Instance& inst, const Rational& bound);

/// Trace of the cost-effective contraction loop.
struct MergeStep {
  enum class Kind { DropSide, Contract } kind;
  VertexSet kept;     // DropSide: the side kept
  VertexSet removed;  // DropSide: the side removed; Contract: the side contracted
};

struct MergeResult {
  VertexSet tree;        // V(T1) ∪ V(T'') ∪ connecting path
  VertexSet supplement;  // V(T'')
  VertexSet path;        // connecting path vertices outside T1 and T''
  std::vector<MergeStep> steps;
  std::vector<std::string> violations;
};

/// Supplements T1 with a connected piece of T2 carrying profit >= q.
/// Requires q > 0, T1 ⊆ V containing the root, T2 connected and containing
/// the root, and profit(T2 \ T1) >= q.
MergeResult merge_trees(const Instance& inst, const VertexSet& t1, const VertexSet& t2,
                        const Rational& q);

struct QuotaCandidate {
  Rational opt_guess;
  /// Total profit left after pruning for this guess.
  Rational pruned_total_profit;
  std::optional<LagrangianResult> search;
  std::optional<MergeResult> merge;
  std::string note;  // why a guess was skipped, when it was
};

struct QuotaReport {
  VertexSet tree;
  Rational cost;
  Rational profit;
  Rational quota;
  Rational total_profit;  // Π
  Rational opt_guess;
  Rational pruned_total_profit;
  std::optional<LagrangianResult> search;
  Rational a1;
  Rational a2;
  /// a1·π(V\T1) + a2·π(V\T2) on the pruned instance; equals its total
  /// profit minus Q on a true bracketing pair.
  Rational deviation_identity;
  /// a1·c(T1) + a2·c(T2), logged only.
  Rational convex_cost;
  std::string chosen;  // "root", "exact", "merge", "upper" or "fallback"
  std::vector<QuotaCandidate> candidates;
  std::vector<std::string> violations;
};

/// Minimum-cost rooted connected subgraph with profit >= Q via Lagrangian
/// relaxation over the multiplier-preserving solver, enumerating OPT_Q
/// guesses c_min·2^k. Throws InfeasibleError when Q > Π or the root cannot
/// reach enough profit, PreconditionError without profits.
QuotaReport solve_quota(const Instance& inst, const Rational& quota);

}  // namespace pcst

#endif  // PCST_QUOTA_HPP
