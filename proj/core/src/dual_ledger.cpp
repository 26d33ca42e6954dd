#include "pcst/dual_ledger.hpp"

#include <algorithm>
#include <string>

#include "pcst/error.hpp"

namespace pcst {

Ledger Ledger::init_phase(const ReducedInstance& reduced, std::vector<InitialComponent> components,
                          VertexSet root_block) {
  const Instance& g = reduced.graph();
  const std::size_t n = g.size();
  Ledger ledger(reduced);
  normalize(root_block);
  ledger.root_block_ = root_block;
  ledger.in_root_block_.assign(n, false);
  for (Vertex v : root_block) {
    if (v >= n) throw PreconditionError("root block vertex out of range");
    ledger.in_root_block_[v] = true;
  }
  ledger.owner_.assign(n, std::nullopt);
  ledger.load_.assign(n, Rational(0));

  std::vector<std::optional<ComponentId>> claimed(n);
  for (auto& c : components) {
    normalize(c.vertices);
    if (c.vertices.empty()) throw PreconditionError("empty initial component");
    for (Vertex v : c.vertices) {
      if (v >= n) throw PreconditionError("component vertex out of range");
      if (ledger.in_root_block_[v] || v == g.root()) {
        throw PreconditionError("initial component overlaps the root block");
      }
      if (claimed[v]) throw PreconditionError("initial components overlap");
      claimed[v] = c.id;
    }
    if (ledger.component_index_.count(c.id)) throw PreconditionError("duplicate component id");
    ledger.component_index_[c.id] = ledger.components_.size();
    c.reduced_penalty = reduced.reduced_penalty_of(c.vertices);
    ledger.components_.push_back(c);
    ledger.component_age_.emplace_back(0);
  }
  for (const auto& c : ledger.components_) {
    for (Vertex v : g.boundary(c.vertices)) {
      if (ledger.in_root_block_[v]) throw PreconditionError("initial component touches the root block");
      if (claimed[v]) throw PreconditionError("initial components are adjacent");
    }
  }

  for (const auto& c : ledger.components_) {
    SupportSet s;
    s.vertices = c.vertices;
    s.boundary = g.boundary(c.vertices);
    s.reduced_penalty = c.reduced_penalty;
    s.core = c.id;
    s.component = c.id;
    s.created_at = 0;
    if (s.reduced_penalty == 0) {
      s.exhausted = true;
      s.frozen_at = Rational(0);
    } else {
      s.active = true;
    }
    ledger.add_set(std::move(s));
  }
  return ledger;
}

SetId Ledger::add_set(SupportSet set) {
  set.id = sets_.size();
  for (Vertex v : set.vertices) owner_[v] = set.id;
  sets_.push_back(std::move(set));
  return sets_.back().id;
}

const InitialComponent& Ledger::component(ComponentId c) const {
  auto it = component_index_.find(c);
  if (it == component_index_.end()) throw PreconditionError("unknown component id");
  return components_[it->second];
}

const Rational& Ledger::component_age(ComponentId c) const {
  auto it = component_index_.find(c);
  if (it == component_index_.end()) throw PreconditionError("unknown component id");
  return component_age_[it->second];
}

std::vector<SetId> Ledger::maximal_sets() const {
  std::vector<SetId> out;
  for (const auto& s : sets_) {
    if (!s.parent) out.push_back(s.id);
  }
  return out;
}

std::vector<SetId> Ledger::maximal_active() const {
  std::vector<SetId> out;
  for (const auto& s : sets_) {
    if (!s.parent && s.active) out.push_back(s.id);
  }
  return out;
}

std::vector<SetId> Ledger::maximal_inactive() const {
  std::vector<SetId> out;
  for (const auto& s : sets_) {
    if (!s.parent && !s.active) out.push_back(s.id);
  }
  return out;
}

bool Ledger::any_active() const {
  return std::any_of(sets_.begin(), sets_.end(), [](const SupportSet& s) { return !s.parent && s.active; });
}

bool Ledger::adjacent_to_root_block(Vertex v) const {
  for (Vertex u : reduced_->graph().neighbours(v)) {
    if (in_root_block_[u]) return true;
  }
  return false;
}

std::vector<LoadContribution> Ledger::load_detail(Vertex v) const {
  std::vector<LoadContribution> out;
  for (const auto& s : sets_) {
    if (s.y > 0 && contains(s.boundary, v)) out.push_back({s.id, s.y});
  }
  return out;
}

Rational Ledger::slack(Vertex v) const { return reduced_->reduced_cost[v] - load_[v]; }

bool Ledger::is_tight(Vertex v) const { return v != reduced_->graph().root() && slack(v) == 0; }

std::size_t Ledger::active_neighbour_count(Vertex v) const {
  std::size_t count = 0;
  for (const auto& s : sets_) {
    if (!s.parent && s.active && contains(s.boundary, v)) ++count;
  }
  return count;
}

std::vector<SetId> Ledger::maximal_sets_adjacent(Vertex v) const {
  std::vector<SetId> out;
  for (const auto& s : sets_) {
    if (!s.parent && contains(s.boundary, v)) out.push_back(s.id);
  }
  return out;
}

std::vector<ComponentId> Ledger::loaders(Vertex v) const {
  std::vector<ComponentId> out;
  for (const auto& s : sets_) {
    if (contains(s.boundary, v)) out.push_back(s.core);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SetId> Ledger::descendants(SetId s) const {
  std::vector<SetId> out;
  std::vector<SetId> stack{s};
  while (!stack.empty()) {
    SetId cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    for (SetId c : sets_[cur].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DualSolution Ledger::dual() const {
  DualSolution out;
  out.reserve(sets_.size());
  for (const auto& s : sets_) out.push_back({s.vertices, s.y, component(s.core).vertices});
  return out;
}

LedgerEvent Ledger::next_event() const {
  const Instance& g = reduced_->graph();
  std::optional<LedgerEvent> best_set;
  for (const auto& s : sets_) {
    if (s.parent || !s.active) continue;
    Rational eps = penalty_slack(s);
    if (!best_set || eps < best_set->epsilon) {
      best_set = LedgerEvent{LedgerEvent::Kind::SetExhausted, eps, 0, s.id};
    }
  }
  if (!best_set) throw PreconditionError("next_event called with no active set");

  std::vector<std::size_t> count(g.size(), 0);
  for (const auto& s : sets_) {
    if (s.parent || !s.active) continue;
    for (Vertex v : s.boundary) ++count[v];
  }
  std::optional<LedgerEvent> best_vertex;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (count[v] == 0 || absorbed(v)) continue;
    Rational eps = slack(v) / Rational(static_cast<unsigned long>(count[v]));
    if (!best_vertex || eps < best_vertex->epsilon) {
      best_vertex = LedgerEvent{LedgerEvent::Kind::VertexTight, eps, v, 0};
    }
  }
  if (best_vertex && best_vertex->epsilon < best_set->epsilon) return *best_vertex;
  return *best_set;
}

void Ledger::raise_duals(const Rational& eps) {
  if (eps < 0) throw PreconditionError("negative dual increment");
  if (eps == 0) return;
  const Instance& g = reduced_->graph();
  std::vector<std::size_t> count(g.size(), 0);
  for (const auto& s : sets_) {
    if (s.parent || !s.active) continue;
    if (penalty_slack(s) < eps) throw PreconditionError("raise overshoots a penalty constraint");
    for (Vertex v : s.boundary) ++count[v];
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (count[v] > 0 && slack(v) < eps * Rational(static_cast<unsigned long>(count[v]))) {
      throw PreconditionError("raise overshoots the cost constraint at " + g.id(v));
    }
  }
  time_ += eps;
  for (auto& s : sets_) {
    if (s.parent || !s.active) continue;
    s.y += eps;
    s.subtree_y += eps;
    for (Vertex v : s.boundary) load_[v] += eps;
    component_age_[component_index_.at(s.core)] = time_;
  }
}

StarCheck Ledger::check_star(Vertex v) const {
  if (!is_tight(v)) throw PreconditionError("(star) test on a vertex that is not tight");
  StarCheck out;
  out.loaders = loaders(v);
  out.age_sum = 0;
  for (ComponentId c : out.loaders) out.age_sum += component_age(c);
  out.threshold = Rational(3, 2) * time_;
  out.holds = out.age_sum >= out.threshold;
  return out;
}

SetId Ledger::merge_at_vertex(Vertex v) {
  const Instance& g = reduced_->graph();
  if (!is_tight(v)) throw PreconditionError("merge at a vertex that is not tight");
  if (absorbed(v)) throw PreconditionError("merge at an absorbed vertex");
  if (adjacent_to_root_block(v)) throw PreconditionError("merge at a vertex next to the root block");
  if (check_star(v).holds) throw PreconditionError("merge while the age-sum trigger holds");

  std::vector<SetId> children = maximal_sets_adjacent(v);
  std::vector<SetId> active;
  for (SetId c : children) {
    if (sets_[c].active) active.push_back(c);
  }
  if (active.size() != 1) {
    throw InvariantError("merge at " + g.id(v) + " sees " + std::to_string(active.size()) +
                         " active sets");
  }

  SupportSet s;
  s.vertices = {v};
  s.subtree_y = 0;
  for (SetId c : children) {
    s.vertices = set_union(s.vertices, sets_[c].vertices);
    s.subtree_y += sets_[c].subtree_y;
  }
  s.boundary = g.boundary(s.vertices);
  s.reduced_penalty = reduced_->reduced_penalty_of(s.vertices);
  s.children = children;
  s.core = sets_[active.front()].core;
  s.active = true;
  s.created_at = time_;

  for (SetId c : children) {
    if (c == active.front()) continue;
    if (component_age(sets_[c].core) >= component_age(s.core)) {
      throw InvariantError("merge at " + g.id(v) + " would create two cores of maximum age");
    }
  }

  SetId id = add_set(std::move(s));
  for (SetId c : children) {
    sets_[c].parent = id;
    if (sets_[c].active) {
      sets_[c].active = false;
      sets_[c].frozen_at = time_;
    }
  }
  return id;
}

void Ledger::deactivate(SetId s) {
  if (s >= sets_.size()) throw PreconditionError("unknown set id");
  SupportSet& set = sets_[s];
  if (set.parent) throw PreconditionError("deactivate on a non-maximal set");
  if (!set.active) throw PreconditionError("deactivate on an inactive set");
  if (penalty_slack(set) != 0) throw PreconditionError("deactivate while the penalty constraint is slack");
  set.active = false;
  set.exhausted = true;
  set.frozen_at = time_;
}

std::vector<std::string> Ledger::audit() const {
  const Instance& g = reduced_->graph();
  std::vector<std::string> out;
  auto name = [&](SetId s) { return "set " + std::to_string(s); };

  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const auto& a = sets_[i];
    if (a.boundary != g.boundary(a.vertices)) out.push_back(name(i) + ": stale boundary");
    for (std::size_t j = i + 1; j < sets_.size(); ++j) {
      const auto& b = sets_[j];
      if (intersects(a.vertices, b.vertices) && !is_subset(a.vertices, b.vertices) &&
          !is_subset(b.vertices, a.vertices)) {
        out.push_back(name(i) + " and " + name(j) + " cross");
      }
      if (!a.parent && !b.parent) {
        if (intersects(a.vertices, b.vertices)) out.push_back(name(i) + " and " + name(j) + " overlap");
        if (intersects(a.boundary, b.vertices)) {
          out.push_back("maximal " + name(i) + " and " + name(j) + " are adjacent");
        }
      }
    }

    Rational below = a.y;
    for (SetId c : a.children) {
      if (!is_subset(sets_[c].vertices, a.vertices)) out.push_back(name(c) + " escapes its parent");
      below += sets_[c].subtree_y;
    }
    if (below != a.subtree_y) out.push_back(name(i) + ": subtree sum out of date");
    if (a.subtree_y > a.reduced_penalty) out.push_back(name(i) + ": penalty constraint violated");
    if (a.exhausted && !a.parent && a.subtree_y != a.reduced_penalty) {
      out.push_back(name(i) + ": exhausted but not tight");
    }

    // Unique core: the core has strictly the largest age among the
    // components inside the set.
    const Rational& core_age = component_age(a.core);
    if (!is_subset(component(a.core).vertices, a.vertices)) out.push_back(name(i) + ": core outside set");
    for (const auto& c : components_) {
      if (c.id == a.core || !is_subset(c.vertices, a.vertices)) continue;
      if (component_age(c.id) >= core_age) out.push_back(name(i) + ": core age is not unique");
    }
    if (!a.parent && a.active && core_age != time_) out.push_back(name(i) + ": active core lags τ");
  }

  std::vector<Rational> load(g.size());
  for (const auto& s : sets_) {
    for (Vertex v : s.boundary) load[v] += s.y;
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (load[v] != load_[v]) out.push_back("load bookkeeping off at " + g.id(v));
  }
  for (const auto& viol : check_dual_feasibility(*reduced_, dual())) out.push_back(viol.describe(g));
  return out;
}

}  // namespace pcst
