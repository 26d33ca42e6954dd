#include <gtest/gtest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "pcst/error.hpp"
#include "pcst/oracle.hpp"

using namespace pcst;
using pcst::fixture::ids;
using pcst::fixture::make;

TEST(Oracle, CounterexampleOptima) {
  // Frozen from the reference enumerator in fixtures.hpp.
  EXPECT_EQ(brute_pcst(gen_counterexample(3)).value, 12);
  EXPECT_EQ(brute_pcst(gen_counterexample(4)).value, 19);
  EXPECT_EQ(brute_pcst(gen_counterexample(1)).value, 2);
  EXPECT_EQ(fixture::Reference::solve(gen_counterexample(3)), 12);
  EXPECT_EQ(fixture::Reference::solve(gen_counterexample(4)), 19);
}

TEST(Oracle, SetCoverOptima) {
  Instance a = gen_from_set_cover(3, {{2, {1, 2}}, {3, {3}}, {6, {1, 2, 3}}});
  auto ra = brute_pcst(a);
  EXPECT_EQ(ra.value, 5);
  EXPECT_EQ(ids(a, ra.witness), (std::vector<std::string>{"r", "s1", "s2", "e1", "e2", "e3"}));
  Instance b = gen_from_set_cover(2, {{1, {1}}, {1, {2}}, {5, {1, 2}}});
  EXPECT_EQ(brute_pcst(b).value, 2);
}

TEST(Oracle, DiamondTakesCheaperSide) {
  Instance g = make({{"r", 0, 0}, {"a", 2, 0}, {"b", 1, 0}, {"t", 0, 10}}, "r",
                    {{"r", "a"}, {"r", "b"}, {"a", "t"}, {"b", "t"}});
  auto res = brute_pcst(g);
  EXPECT_EQ(res.value, 1);
  EXPECT_EQ(ids(g, res.witness), (std::vector<std::string>{"r", "b", "t"}));
}

TEST(Oracle, RootAloneCountsItsCost) {
  Instance g = make({{"r", 4, 9}, {"a", 1, 1}}, "r", {});
  auto res = brute_pcst(g);
  EXPECT_EQ(res.value, 5);
  EXPECT_EQ(res.witness, (VertexSet{0}));
}

TEST(Oracle, MatchesReferenceOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    unsigned n = 1 + seed % 10;
    Rational p = seed % 3 == 0 ? Rational(1, 4) : seed % 3 == 1 ? Rational(1, 2) : Rational(4, 5);
    Instance g = gen_random(fixture::spec(n, p, seed));
    auto res = brute_pcst(g);
    EXPECT_EQ(res.value, fixture::Reference::solve(g)) << "seed " << seed;
    EXPECT_EQ(g.objective(res.witness), res.value);
    EXPECT_TRUE(g.induces_connected(res.witness));
  }
}

TEST(Oracle, QuotaOnPath) {
  Instance g = make({{"r", 0, 0, 0}, {"a", 1, 0, 1}, {"b", 1, 0, 1}}, "r", {{"r", "a"}, {"a", "b"}});
  auto one = brute_quota(g, 1);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->value, 1);
  EXPECT_EQ(ids(g, one->witness), (std::vector<std::string>{"r", "a"}));
  auto two = brute_quota(g, 2);
  ASSERT_TRUE(two);
  EXPECT_EQ(two->value, 2);
  EXPECT_FALSE(brute_quota(g, 3));
  EXPECT_EQ(brute_quota(g, 0)->witness, (VertexSet{0}));
}

TEST(Oracle, SizeLimits) {
  OracleLimits small;
  small.max_vertices = 5;
  small.max_dual_vertices = 3;
  EXPECT_THROW(brute_pcst(gen_counterexample(2), small), LimitError);
  EXPECT_THROW(exhaustive_dual_check(reduce(gen_counterexample(1)), {}, small), LimitError);

  ::setenv("PCST_MAX_ORACLE_N", "7", 1);
  OracleLimits env = OracleLimits::from_environment();
  ::unsetenv("PCST_MAX_ORACLE_N");
  EXPECT_EQ(env.max_vertices, 7u);
  EXPECT_EQ(env.max_dual_vertices, 7u);
  EXPECT_EQ(OracleLimits::from_environment().max_vertices, 20u);
}
