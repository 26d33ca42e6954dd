#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pcst/error.hpp"
#include "pcst/io.hpp"

using namespace pcst;

TEST(Counterexample, Shape) {
  Instance g = gen_counterexample(3);
  ASSERT_EQ(g.size(), 11u);
  EXPECT_EQ(g.id(g.root()), "r");
  EXPECT_EQ(g.edges().size(), 2u + 9u + 3u);
  Vertex x = *g.index_of("x");
  EXPECT_EQ(g.cost(x), 2);
  EXPECT_EQ(g.neighbours(x), (VertexSet{0, *g.index_of("u1")}));
  EXPECT_EQ(g.cost(*g.index_of("v2")), 4);
  EXPECT_EQ(g.penalty(*g.index_of("w3")), 3);
  EXPECT_EQ(g.neighbours(*g.index_of("w2")), (VertexSet{*g.index_of("v2")}));
  EXPECT_THROW(gen_counterexample(0), PreconditionError);
}

TEST(Counterexample, SingleLayer) {
  Instance g = gen_counterexample(1);
  EXPECT_EQ(g.size(), 5u);
  EXPECT_TRUE(g.induces_connected(VertexSet{0, 1, 2, 3, 4}));
}

TEST(Random, DeterministicPerSeed) {
  auto a = dump(instance_to_json(gen_random(fixture::spec(9, Rational(1, 2), 7, 10, 10, 5))));
  auto b = dump(instance_to_json(gen_random(fixture::spec(9, Rational(1, 2), 7, 10, 10, 5))));
  auto c = dump(instance_to_json(gen_random(fixture::spec(9, Rational(1, 2), 8, 10, 10, 5))));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Random, FrozenDraw) {
  // Pinned so a change in the draw order shows up here.
  Instance g = gen_random(fixture::spec(3, Rational(1, 5), 1, 10, 10, 5));
  EXPECT_EQ(g.cost(0), 2);
  EXPECT_EQ(g.penalty(0), 1);
  EXPECT_EQ(g.cost(1), 7);
  EXPECT_EQ(g.profit(1), 3);
  EXPECT_EQ(g.cost(2), 9);
  EXPECT_TRUE(g.edges().empty());
}

TEST(Random, EdgeProbabilityExtremes) {
  Instance full = gen_random(fixture::spec(6, 1, 3));
  EXPECT_EQ(full.edges().size(), 15u);
  Instance empty = gen_random(fixture::spec(6, 0, 3));
  EXPECT_TRUE(empty.edges().empty());
  EXPECT_FALSE(full.has_profits());
}

TEST(SetCover, Encoding) {
  Instance g = gen_from_set_cover(3, {{2, {1, 2}}, {3, {3}}, {6, {1, 2, 3}}});
  ASSERT_EQ(g.size(), 7u);
  Vertex s1 = *g.index_of("s1");
  Vertex e3 = *g.index_of("e3");
  EXPECT_EQ(g.cost(s1), 2);
  EXPECT_EQ(g.penalty(s1), 0);
  EXPECT_EQ(g.cost(e3), 0);
  EXPECT_EQ(g.penalty(e3), 12);
  EXPECT_TRUE(g.adjacent(g.root(), s1));
  EXPECT_TRUE(g.adjacent(e3, *g.index_of("s2")));
  EXPECT_FALSE(g.adjacent(e3, s1));
  EXPECT_THROW(gen_from_set_cover(2, {{1, {1}}}), PreconditionError);
  EXPECT_THROW(gen_from_set_cover(2, {{1, {1, 3}}}), PreconditionError);
}
