#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pcst/aux_graph.hpp"
#include "pcst/error.hpp"
#include "pcst/growth_engine.hpp"

using namespace pcst;
using pcst::fixture::ids;
using pcst::fixture::make;
using pcst::fixture::set_of;

namespace {

std::vector<InitialComponent> initial(const ReducedInstance& red) {
  auto comps = cheap_components(red);
  std::vector<InitialComponent> out;
  for (std::size_t i = 1; i < comps.size(); ++i) {
    out.push_back({i - 1, comps[i], red.reduced_penalty_of(comps[i])});
  }
  return out;
}

// r - X - a - m - b: a exhausts at 1, m tightens at 4 with a frozen loader.
Instance frozen_loader() {
  return make({{"r", 0, 0}, {"X", 100, 0}, {"a", 0, 1}, {"m", 5, 0}, {"b", 0, 10}}, "r",
              {{"r", "X"}, {"X", "a"}, {"a", "m"}, {"m", "b"}});
}

}  // namespace

TEST(Ledger, CounterexampleFirstEvent) {
  Instance g = gen_counterexample(3);
  ReducedInstance red = reduce(g);
  Ledger led = Ledger::init_phase(red, initial(red), {g.root()});
  EXPECT_EQ(led.maximal_active().size(), 6u);
  LedgerEvent e = led.next_event();
  EXPECT_EQ(e.kind, LedgerEvent::Kind::VertexTight);
  EXPECT_EQ(e.epsilon, 1);
  EXPECT_EQ(g.id(e.vertex), "v1");
  EXPECT_THROW(led.raise_duals(2), PreconditionError);
  led.raise_duals(1);
  EXPECT_EQ(led.time(), 1);
  Vertex v1 = *g.index_of("v1");
  EXPECT_TRUE(led.is_tight(v1));
  EXPECT_EQ(led.load(v1), 4);
  EXPECT_EQ(led.load(*g.index_of("x")), 1);
  StarCheck star = led.check_star(v1);
  EXPECT_TRUE(star.holds);
  EXPECT_EQ(star.loaders.size(), 4u);
  EXPECT_EQ(star.age_sum, 4);
  EXPECT_EQ(star.threshold, Rational(3, 2));
  EXPECT_THROW(led.merge_at_vertex(v1), PreconditionError);
  EXPECT_TRUE(led.audit().empty());
}

TEST(Ledger, RejectsBadComponents) {
  Instance g = gen_counterexample(2);
  ReducedInstance red = reduce(g);
  Vertex u1 = *g.index_of("u1");
  Vertex x = *g.index_of("x");
  EXPECT_THROW(Ledger::init_phase(red, {{0, {u1}, 2}, {1, {u1}, 2}}, {0}), PreconditionError);
  EXPECT_THROW(Ledger::init_phase(red, {{0, {x}, 0}}, {0}), PreconditionError);
}

TEST(Ledger, ExhaustThenMerge) {
  Instance g = frozen_loader();
  ReducedInstance red = reduce(g);
  Ledger led = Ledger::init_phase(red, initial(red), {0});
  LedgerEvent first = led.next_event();
  ASSERT_EQ(first.kind, LedgerEvent::Kind::SetExhausted);
  EXPECT_EQ(first.epsilon, 1);
  led.raise_duals(first.epsilon);
  led.deactivate(first.set);
  LedgerEvent second = led.next_event();
  ASSERT_EQ(second.kind, LedgerEvent::Kind::VertexTight);
  EXPECT_EQ(g.id(second.vertex), "m");
  EXPECT_EQ(second.epsilon, 3);
  led.raise_duals(second.epsilon);
  StarCheck star = led.check_star(second.vertex);
  EXPECT_FALSE(star.holds);
  EXPECT_EQ(star.age_sum, 5);
  EXPECT_EQ(star.threshold, 6);
  SetId merged = led.merge_at_vertex(second.vertex);
  EXPECT_EQ(ids(g, led.set(merged).vertices), (std::vector<std::string>{"a", "m", "b"}));
  EXPECT_EQ(led.component(led.set(merged).core).vertices, set_of(g, {"b"}));
  EXPECT_TRUE(led.set(merged).active);
  EXPECT_TRUE(led.audit().empty());
}

TEST(GrowthEngine, AllInactiveWithMerge) {
  Instance g = frozen_loader();
  ReducedInstance red = reduce(g);
  std::set<ComponentId> charged;
  PhaseOutcome out = run_phase(red, initial(red), {0}, charged);
  EXPECT_EQ(out.kind, PhaseOutcome::Kind::AllInactive);
  EXPECT_EQ(out.end_time, 10);
  EXPECT_EQ(dual_value(out.dual), 11);
  EXPECT_TRUE(out.violations.empty());
  std::vector<TraceEvent::Kind> kinds;
  for (const auto& e : out.trace) kinds.push_back(e.kind);
  EXPECT_EQ(kinds, (std::vector<TraceEvent::Kind>{TraceEvent::Kind::SetExhausted, TraceEvent::Kind::Merge,
                                                  TraceEvent::Kind::SetExhausted, TraceEvent::Kind::AllInactive}));
  ASSERT_TRUE(out.trace[0].core_age);
  EXPECT_EQ(*out.trace[0].core_age, *out.trace[0].closed_form_age);
}

TEST(GrowthEngine, CounterexamplePhaseOneStar) {
  Instance g = gen_counterexample(3);
  ReducedInstance red = reduce(g);
  std::set<ComponentId> charged;
  PhaseOutcome out = run_phase(red, initial(red), {0}, charged);
  ASSERT_EQ(out.kind, PhaseOutcome::Kind::TreeBuilt);
  EXPECT_EQ(out.end_time, 1);
  ASSERT_TRUE(out.tree);
  EXPECT_EQ(ids(g, out.tree->tree.vertices), (std::vector<std::string>{"u1", "u2", "u3", "v1", "w1"}));
  EXPECT_EQ(g.id(out.tree->tree.center), "v1");
  ASSERT_EQ(out.tree->charges.size(), 4u);
  for (const auto& c : out.tree->charges) {
    // Path v1 -> core: only the terminal carries auxiliary cost.
    EXPECT_EQ(c.c1, 1);
    EXPECT_EQ(c.c2, 0);
    EXPECT_EQ(c.c3, 0);
    EXPECT_EQ(c.age, 1);
  }
  EXPECT_EQ(charged.size(), 4u);
  EXPECT_TRUE(out.violations.empty());
  for (const auto& call : out.tree->calls) EXPECT_EQ(call.terminals.size(), 1u);
}

TEST(TreeBuilder, CoreChargedOnlyOnce) {
  Instance g = gen_counterexample(2);
  ReducedInstance red = reduce(g);
  auto comps = initial(red);
  std::set<ComponentId> charged;
  Ledger led = Ledger::init_phase(red, comps, {0});
  led.raise_duals(led.next_event().epsilon);
  Vertex v1 = *g.index_of("v1");
  build_phase_tree(led, v1, charged);
  EXPECT_THROW(build_phase_tree(led, v1, charged), InvariantError);
}

TEST(AuxGraph, PathTieBreaks) {
  AuxGraph h;
  for (std::size_t k = 0; k < 5; ++k) h.add_node({AuxNode::Kind::Original, static_cast<Vertex>(k), 0, k});
  // 0 - 1 - 3, 0 - 2 - 3, 0 - 4 (target) with equal costs.
  h.add_edge(0, 2);
  h.add_edge(0, 1);
  h.add_edge(1, 3);
  h.add_edge(2, 3);
  h.cost = {1, 2, 2, 0, 3};
  EXPECT_EQ(shortest_aux_path(h, 0, {3}), (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_EQ(path_cost(h, {0, 1, 3}), 3);
  // Same cost through 4 directly, fewer hops wins.
  h.add_edge(3, 4);
  EXPECT_EQ(shortest_aux_path(h, 0, {3, 4}), (std::vector<std::size_t>{0, 1, 3}));
  h.add_edge(0, 4);
  h.cost[4] = 2;
  EXPECT_EQ(shortest_aux_path(h, 0, {3, 4}), (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(shortest_aux_path(h, 4, {4}), (std::vector<std::size_t>{4}));
  AuxGraph lonely;
  lonely.add_node({AuxNode::Kind::Original, 0, 0, 0});
  lonely.add_node({AuxNode::Kind::Original, 1, 0, 1});
  EXPECT_THROW(shortest_aux_path(lonely, 0, {1}), InvariantError);
}

TEST(AuxGraph, CostsInsideStar) {
  Instance g = gen_counterexample(3);
  ReducedInstance red = reduce(g);
  Ledger led = Ledger::init_phase(red, initial(red), {0});
  led.raise_duals(1);
  Vertex v1 = *g.index_of("v1");
  SetId s = *led.owner(*g.index_of("u2"));
  EXPECT_EQ(aux_cost(led, s, v1), 1);
  EXPECT_EQ(aux_cost(led, s, *g.index_of("u2")), 0);
  EXPECT_EQ(aux_cost(led, s, *g.index_of("x")), 0);
  AuxGraph h = build_aux_graph(led, s, {v1});
  EXPECT_EQ(h.nodes.size(), 2u);
  EXPECT_TRUE(contracted_children(led, s).empty());
}
