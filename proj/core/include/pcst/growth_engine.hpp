#ifndef PCST_GROWTH_ENGINE_HPP
#define PCST_GROWTH_ENGINE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcst/dual_ledger.hpp"
#include "pcst/tree_builder.hpp"

namespace pcst {

struct TraceEvent {
  enum class Kind { SetExhausted, Merge, BuildTree, AllInactive };
  Kind kind;
  Rational tau;
  std::optional<Vertex> vertex;
  std::optional<SetId> set;
  VertexSet set_vertices;
  std::optional<StarCheck> star;
  bool root_adjacent = false;
  /// SetExhausted: the frozen age of the set's core next to min{τ, π̄(C)}.
  std::optional<Rational> core_age;
  std::optional<Rational> closed_form_age;
};

std::string to_string(TraceEvent::Kind kind);

struct PhaseOutcome {
  enum class Kind { TreeBuilt, AllInactive };
  Kind kind = Kind::AllInactive;
  std::optional<TreeBuildResult> tree;
  DualSolution dual;
  Rational end_time;
  std::vector<TraceEvent> trace;
  /// Ledger audits that failed after some event, plus tree-builder findings.
  std::vector<std::string> violations;
  /// Ages of this phase's initial components at the phase end.
  std::vector<std::pair<ComponentId, Rational>> ages;
};

struct PhaseOptions {
  /// Run the full ledger audit after every event.
  bool audit_every_event = true;
};

/// One phase of dual growth followed by tree construction or termination.
/// Throws InvariantError if the event count exceeds its O(n²) bound.
PhaseOutcome run_phase(const ReducedInstance& reduced,
                       const std::vector<InitialComponent>& components,
                       const VertexSet& root_block, std::set<ComponentId>& charged,
                       const PhaseOptions& options = {});

}  // namespace pcst

#endif  // PCST_GROWTH_ENGINE_HPP
