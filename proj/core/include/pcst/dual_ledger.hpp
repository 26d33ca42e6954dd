#ifndef PCST_DUAL_LEDGER_HPP
#define PCST_DUAL_LEDGER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcst/dual.hpp"
#include "pcst/instance.hpp"

namespace pcst {

using SetId = std::size_t;
using ComponentId = std::size_t;

/// A connected vertex set that enters a phase as an atom of dual growth.
/// Ids are global across a solver run.
struct InitialComponent {
  ComponentId id = 0;
  VertexSet vertices;
  Rational reduced_penalty;
};

struct SupportSet {
  SetId id = 0;
  VertexSet vertices;
  VertexSet boundary;  // Γ(S), fixed at creation
  Rational y;          // own value y_S
  Rational subtree_y;  // Σ_{U ⊆ S} y_U
  Rational reduced_penalty;
  std::optional<SetId> parent;
  std::vector<SetId> children;
  ComponentId core = 0;
  /// Set is maximal and still growing.
  bool active = false;
  /// Left the active family through a tight penalty constraint.
  bool exhausted = false;
  Rational created_at;
  std::optional<Rational> frozen_at;
  /// Present for sets that are initial components.
  std::optional<ComponentId> component;
};

struct LedgerEvent {
  enum class Kind { VertexTight, SetExhausted };
  Kind kind;
  Rational epsilon;
  Vertex vertex = 0;  // VertexTight
  SetId set = 0;      // SetExhausted
};

struct LoadContribution {
  SetId set;
  Rational amount;
};

/// Evaluation of the age-sum trigger at a tight vertex.
struct StarCheck {
  bool holds = false;
  std::vector<ComponentId> loaders;
  Rational age_sum;
  Rational threshold;  // (3/2)·τ
};

/**
 * Dual state of one phase.
 *
 * Holds the laminar family of support sets with their y-values, which sets
 * are maximal and active, per-component ages and per-vertex dual loads.
 * Ages follow the event-driven rule: the core of every active maximal set
 * ages with τ; a component's age freezes once its set stops growing.
 *
 * The ledger keeps a pointer to the reduced instance, which must outlive it.
 */
class Ledger {
 public:
  /// Throws PreconditionError when components overlap, are adjacent to
  /// each other, or touch the root block.
  static Ledger init_phase(const ReducedInstance& reduced,
                           std::vector<InitialComponent> components,
                           VertexSet root_block);

  /// Earliest event. SetExhausted wins ties against VertexTight; among
  /// sets the lowest id, among vertices the lowest index.
  /// Throws PreconditionError when no active set remains.
  LedgerEvent next_event() const;

  /// Grows every active maximal set by eps. Throws PreconditionError on
  /// negative eps or when eps would overshoot a penalty or cost constraint.
  void raise_duals(const Rational& eps);

  /// Merges ṽ with all maximal sets adjacent to it into a new active set.
  /// Throws PreconditionError unless ṽ is tight, unabsorbed, not adjacent to
  /// the root block and the age-sum trigger fails at ṽ.
  SetId merge_at_vertex(Vertex v);

  /// Throws PreconditionError unless S is maximal, active and tight.
  void deactivate(SetId s);

  StarCheck check_star(Vertex v) const;

  // --- queries ----------------------------------------------------------
  const ReducedInstance& reduced() const { return *reduced_; }
  const Rational& time() const { return time_; }
  const std::vector<SupportSet>& sets() const { return sets_; }
  const SupportSet& set(SetId s) const { return sets_[s]; }
  const std::vector<InitialComponent>& components() const { return components_; }
  const InitialComponent& component(ComponentId c) const;
  const Rational& component_age(ComponentId c) const;
  const VertexSet& root_block() const { return root_block_; }

  std::vector<SetId> maximal_sets() const;
  std::vector<SetId> maximal_active() const;
  std::vector<SetId> maximal_inactive() const;
  bool any_active() const;

  /// Maximal set containing v, if any.
  std::optional<SetId> owner(Vertex v) const { return owner_[v]; }
  bool absorbed(Vertex v) const { return owner_[v].has_value() || in_root_block_[v]; }
  bool adjacent_to_root_block(Vertex v) const;

  const Rational& load(Vertex v) const { return load_[v]; }
  std::vector<LoadContribution> load_detail(Vertex v) const;
  Rational slack(Vertex v) const;
  bool is_tight(Vertex v) const;
  /// Number of active maximal sets S with v in Γ(S).
  std::size_t active_neighbour_count(Vertex v) const;

  /// Maximal sets with v in Γ(S), ascending id.
  std::vector<SetId> maximal_sets_adjacent(Vertex v) const;
  /// Cores of every support set S with v in Γ(S), ascending id.
  std::vector<ComponentId> loaders(Vertex v) const;
  /// All sets contained in S (S included), ascending id.
  std::vector<SetId> descendants(SetId s) const;

  /// Current dual, one entry per set (zeros included).
  DualSolution dual() const;

  /// Full structural audit: laminarity, non-adjacency of maximal sets,
  /// unique age-τ core in every active set, load bookkeeping, feasibility.
  /// Returns human-readable violations (empty when sound).
  std::vector<std::string> audit() const;

 private:
  explicit Ledger(const ReducedInstance& reduced) : reduced_(&reduced) {}
  SetId add_set(SupportSet set);
  Rational penalty_slack(const SupportSet& s) const { return s.reduced_penalty - s.subtree_y; }

  const ReducedInstance* reduced_;
  Rational time_;
  std::vector<SupportSet> sets_;
  std::vector<InitialComponent> components_;
  std::map<ComponentId, std::size_t> component_index_;
  std::vector<Rational> component_age_;
  VertexSet root_block_;
  std::vector<bool> in_root_block_;
  std::vector<std::optional<SetId>> owner_;
  std::vector<Rational> load_;
};

}  // namespace pcst

#endif  // PCST_DUAL_LEDGER_HPP
