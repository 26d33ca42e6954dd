#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "pcst/error.hpp"
#include "pcst/oracle.hpp"
#include "pcst/quota.hpp"

using namespace pcst;
using pcst::fixture::ids;
using pcst::fixture::make;

namespace {

Instance path3() {
  return make({{"r", 0, 0, 0}, {"a", 1, 0, 1}, {"b", 1, 0, 1}}, "r", {{"r", "a"}, {"a", "b"}});
}

}  // namespace

TEST(Quota, PathSmallQuota) {
  Instance g = path3();
  QuotaReport rep = solve_quota(g, 1);
  EXPECT_EQ(ids(g, rep.tree), (std::vector<std::string>{"r", "a"}));
  EXPECT_EQ(rep.cost, 1);
  EXPECT_EQ(rep.profit, 1);
  EXPECT_TRUE(rep.violations.empty());
}

TEST(Quota, RootAloneSuffices) {
  Instance g = make({{"r", 2, 0, 5}, {"a", 1, 0, 1}}, "r", {{"r", "a"}});
  QuotaReport rep = solve_quota(g, 5);
  EXPECT_EQ(rep.tree, (VertexSet{0}));
  EXPECT_EQ(rep.chosen, "root");
  EXPECT_EQ(rep.cost, 2);
}

TEST(Quota, Errors) {
  Instance g = path3();
  EXPECT_THROW(solve_quota(g, 3), InfeasibleError);
  EXPECT_THROW(solve_quota(gen_counterexample(2), 1), PreconditionError);
  Instance split = make({{"r", 0, 0, 0}, {"a", 1, 0, 1}, {"b", 1, 0, 4}}, "r", {{"r", "a"}});
  EXPECT_THROW(solve_quota(split, 2), InfeasibleError);
}

TEST(Quota, PruneByDistance) {
  Instance star = make({{"r", 0, 0, 0}, {"a", 1, 0, 1}, {"b", 2, 0, 1}, {"c", 3, 0, 1}, {"d", 1, 0, 1}}, "r",
                       {{"r", "a"}, {"r", "b"}, {"r", "c"}, {"c", "d"}});
  Instance kept = prune_by_distance(star, 2);
  EXPECT_EQ(kept.ids(), (std::vector<std::string>{"r", "a", "b"}));
  EXPECT_EQ(prune_by_distance(star, 4).size(), 5u);
  EXPECT_EQ(prune_by_distance(star, 0).size(), 1u);
}

TEST(Quota, MergeAddsEnoughProfit) {
  // r - a - b - c - d, T1 = {r}, T2 everything.
  Instance g = make({{"r", 0, 0, 0}, {"a", 1, 0, 0}, {"b", 1, 0, 2}, {"c", 1, 0, 1}, {"d", 5, 0, 3}}, "r",
                    {{"r", "a"}, {"a", "b"}, {"b", "c"}, {"c", "d"}});
  MergeResult m = merge_trees(g, {0}, {0, 1, 2, 3, 4}, 2);
  EXPECT_TRUE(contains(m.tree, g.root()));
  EXPECT_TRUE(g.induces_connected(m.tree));
  EXPECT_GE(g.profit_of(m.tree), 2);
  EXPECT_TRUE(m.violations.empty());
  EXPECT_THROW(merge_trees(g, {0}, {0, 1}, 1), PreconditionError);
  EXPECT_THROW(merge_trees(g, {0}, {0, 1, 2}, 0), PreconditionError);
}

TEST(Quota, LagrangianSearchBrackets) {
  Instance g = gen_random(fixture::spec(8, 1, 77, 10, 10, 5));
  Rational total = 0;
  for (const auto& p : g.profits()) total += p;
  Rational q = total / 2;
  LagrangianResult s = lagrangian_search(g, q, Rational(1, 64));
  EXPECT_LE(s.lower.profit, q);
  EXPECT_GE(s.upper.profit, q);
  if (!s.exact) EXPECT_LE(s.upper.lambda - s.lower.lambda, Rational(1, 64));
  EXPECT_GT(s.probes, 0u);
}

TEST(Quota, RandomProperties) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    unsigned n = 2 + seed % 8;
    Instance g = gen_random(fixture::spec(n, Rational(3, 5), 4000 + seed, 10, 0, 6));
    Rational total = 0;
    for (const auto& p : g.profits()) total += p;
    Rational q = 1 + Rational(static_cast<long>(seed % 5));
    if (q > total) continue;
    auto best = brute_quota(g, q);
    if (!best) {
      EXPECT_THROW(solve_quota(g, q), InfeasibleError) << seed;
      continue;
    }
    QuotaReport rep = solve_quota(g, q);
    EXPECT_GE(rep.profit, q) << seed;
    EXPECT_TRUE(g.induces_connected(rep.tree)) << seed;
    EXPECT_TRUE(contains(rep.tree, g.root())) << seed;
    EXPECT_TRUE(rep.violations.empty()) << seed;
    EXPECT_GE(rep.cost, best->value) << seed;
    EXPECT_LE(to_double(rep.cost), 20.0 * (1.0 + std::log(static_cast<double>(n))) * to_double(best->value) + 1e-9)
        << seed;
    if (rep.search && !rep.search->exact) {
      EXPECT_EQ(rep.a1 + rep.a2, 1) << seed;
      EXPECT_EQ(rep.deviation_identity, rep.pruned_total_profit - q) << seed;
      EXPECT_LE(rep.search->upper.lambda - rep.search->lower.lambda, rep.search->tolerance) << seed;
    }
  }
}
