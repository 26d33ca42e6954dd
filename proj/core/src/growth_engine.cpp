#include "pcst/growth_engine.hpp"

#include <algorithm>

#include "pcst/error.hpp"

namespace pcst {

std::string to_string(TraceEvent::Kind kind) {
  switch (kind) {
    case TraceEvent::Kind::SetExhausted:
      return "set_exhausted";
    case TraceEvent::Kind::Merge:
      return "merge";
    case TraceEvent::Kind::BuildTree:
      return "build_tree";
    case TraceEvent::Kind::AllInactive:
      return "all_inactive";
  }
  return "unknown";
}

namespace {

TraceEvent exhausted_event(const Ledger& ledger, SetId s) {
  const SupportSet& set = ledger.set(s);
  TraceEvent ev{TraceEvent::Kind::SetExhausted, ledger.time(), std::nullopt, s, set.vertices};
  ev.core_age = ledger.component_age(set.core);
  ev.closed_form_age = std::min(ledger.time(), ledger.component(set.core).reduced_penalty);
  return ev;
}

}  // namespace

PhaseOutcome run_phase(const ReducedInstance& reduced, const std::vector<InitialComponent>& components,
                       const VertexSet& root_block, std::set<ComponentId>& charged,
                       const PhaseOptions& options) {
  Ledger ledger = Ledger::init_phase(reduced, components, root_block);
  PhaseOutcome out;
  auto audit = [&] {
    if (!options.audit_every_event) return;
    for (auto& msg : ledger.audit()) out.violations.push_back("τ=" + to_string(ledger.time()) + ": " + msg);
  };

  for (const auto& s : ledger.sets()) {
    if (s.exhausted) out.trace.push_back(exhausted_event(ledger, s.id));
  }
  audit();

  const std::size_t n = reduced.size();
  const std::size_t limit = 4 * n * n + 10;
  std::size_t events = 0;
  while (true) {
    if (!ledger.any_active()) {
      out.kind = PhaseOutcome::Kind::AllInactive;
      out.trace.push_back({TraceEvent::Kind::AllInactive, ledger.time()});
      break;
    }
    if (++events > limit) throw InvariantError("phase exceeded its event bound");

    LedgerEvent ev = ledger.next_event();
    ledger.raise_duals(ev.epsilon);
    if (ev.kind == LedgerEvent::Kind::SetExhausted) {
      ledger.deactivate(ev.set);
      out.trace.push_back(exhausted_event(ledger, ev.set));
      audit();
      continue;
    }

    Vertex v = ev.vertex;
    if (reduced.reduced_cost[v] <= 0) {
      throw InvariantError("vertex " + reduced.graph().id(v) + " became tight with zero reduced cost");
    }
    StarCheck star = ledger.check_star(v);
    bool root_adjacent = ledger.adjacent_to_root_block(v);
    if (star.holds || root_adjacent) {
      TraceEvent te{TraceEvent::Kind::BuildTree, ledger.time(), v};
      te.star = star;
      te.root_adjacent = root_adjacent;
      out.trace.push_back(std::move(te));
      out.tree = build_phase_tree(ledger, v, charged);
      out.trace.back().set_vertices = out.tree->tree.vertices;
      for (const auto& msg : out.tree->violations) out.violations.push_back(msg);
      out.kind = PhaseOutcome::Kind::TreeBuilt;
      break;
    }
    SetId s = ledger.merge_at_vertex(v);
    TraceEvent te{TraceEvent::Kind::Merge, ledger.time(), v, s, ledger.set(s).vertices};
    te.star = star;
    out.trace.push_back(std::move(te));
    audit();
  }

  out.dual = ledger.dual();
  out.end_time = ledger.time();
  for (const auto& c : ledger.components()) out.ages.emplace_back(c.id, ledger.component_age(c.id));
  return out;
}

}  // namespace pcst
