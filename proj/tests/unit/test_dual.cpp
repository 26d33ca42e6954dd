#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "pcst/dual.hpp"
#include "pcst/error.hpp"
#include "pcst/oracle.hpp"

using namespace pcst;
using pcst::fixture::make;

namespace {

// r - a - b - c, a and c cheap with reduced penalty 3 and 1, b expensive.
Instance chain() {
  return make({{"r", 0, 0}, {"a", 0, 3}, {"b", 2, 0}, {"c", 1, 2}}, "r", {{"r", "a"}, {"a", "b"}, {"b", "c"}});
}

bool has_kind(const std::vector<DualViolation>& v, DualViolation::Kind k) {
  for (const auto& e : v) {
    if (e.kind == k) return true;
  }
  return false;
}

}  // namespace

TEST(Dual, CanonicalizeMergesAndDropsZeros) {
  DualSolution d{{{2, 1}, 1, {}}, {{1}, 0, {}}, {{1, 2}, Rational(1, 2), {}}};
  auto c = canonicalize(d);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].set, (VertexSet{1, 2}));
  EXPECT_EQ(c[0].y, Rational(3, 2));
  EXPECT_EQ(dual_value(d), Rational(3, 2));
}

TEST(Dual, Laminarity) {
  EXPECT_TRUE(is_laminar({{{1}, 1, {}}, {{1, 2}, 1, {}}, {{3}, 1, {}}}));
  EXPECT_FALSE(is_laminar({{{1, 2}, 1, {}}, {{2, 3}, 1, {}}}));
}

TEST(Dual, LaminarCheck) {
  ReducedInstance red = reduce(chain());
  EXPECT_TRUE(check_dual_feasibility(red, {{{1}, 2, {}}}).empty());
  EXPECT_TRUE(check_dual_feasibility(red, {{{1}, 2, {}}, {{3}, 0, {}}}).empty());
  auto cost = check_dual_feasibility(red, {{{1}, 3, {}}});  // loads b by 3 > 2
  EXPECT_TRUE(has_kind(cost, DualViolation::Kind::Cost));
  auto pen = check_dual_feasibility(red, {{{3}, 2, {}}});  // π̄(c) = 1
  EXPECT_TRUE(has_kind(pen, DualViolation::Kind::Penalty));
  auto neg = check_dual_feasibility(red, {{{1}, -1, {}}});
  EXPECT_TRUE(has_kind(neg, DualViolation::Kind::Negative));
  auto dom = check_dual_feasibility(red, {{{0, 1}, 1, {}}});
  EXPECT_TRUE(has_kind(dom, DualViolation::Kind::Domain));
  EXPECT_THROW(check_dual_feasibility(red, {{{1, 2}, 1, {}}, {{2, 3}, 1, {}}}), PreconditionError);
}

TEST(Dual, CrossingFamilyViolatesOnlyAtUnion) {
  // Only the root borders the sets, so no cost constraint is involved.
  Instance g = make({{"r", 0, 0}, {"a", 0, 1}, {"b", 0, 1}, {"c", 0, 1}}, "r", {{"r", "a"}, {"r", "b"}, {"r", "c"}});
  ReducedInstance red = reduce(g);
  DualSolution d{{{1, 2}, 2, {}}, {{2, 3}, 2, {}}};
  auto general = check_dual_feasibility_general(red, d);
  ASSERT_EQ(general.size(), 1u);
  EXPECT_EQ(general[0].where, (VertexSet{1, 2, 3}));
  EXPECT_EQ(general[0].lhs, 4);
  EXPECT_EQ(general[0].rhs, 3);
  auto ex = exhaustive_dual_check(red, d);
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_EQ(ex[0].where, (VertexSet{1, 2, 3}));
}

TEST(Dual, GeneralCheckAgreesWithEnumeration) {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 200; ++round) {
    unsigned n = 2 + rng() % 7;
    Instance g = gen_random(fixture::spec(n, Rational(1, 2), rng(), 4, 6));
    ReducedInstance red = reduce(g);
    if (red.non_root.empty()) continue;
    DualSolution d;
    unsigned sets = 1 + rng() % 4;
    for (unsigned k = 0; k < sets; ++k) {
      VertexSet s;
      for (Vertex v : red.non_root) {
        if (rng() % 2) s.push_back(v);
      }
      if (s.empty()) s.push_back(red.non_root.front());
      d.push_back({s, Rational(static_cast<long>(rng() % 7), 2), {}});
    }
    bool general_ok = check_dual_feasibility_general(red, d).empty();
    bool exhaustive_ok = exhaustive_dual_check(red, d).empty();
    EXPECT_EQ(general_ok, exhaustive_ok) << "round " << round;
    if (is_laminar(d)) EXPECT_EQ(check_dual_feasibility(red, d).empty(), exhaustive_ok) << "round " << round;
  }
}
