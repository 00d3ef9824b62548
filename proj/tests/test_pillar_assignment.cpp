#include <gtest/gtest.h>

#include <numeric>

#include "test_support.hpp"

namespace circlecolor {
namespace {

using testing::system_over;
using testing::triangle14;

Pillar pillar(std::int64_t num, std::int64_t den, int color, std::int64_t key) {
  return {Position(num, den), color, key};
}

TEST(AssignInterval, EarlierOrderWins) {
  const PillarAssignmentState state(system_over(5, {{1, 3}}),
                                    {pillar(2, 5, 1, 1), pillar(1, 2, 2, 0)});
  EXPECT_EQ(assign_interval(0, state), std::optional<std::size_t>(1));
}

TEST(AssignInterval, PillarOutsideGivesNone) {
  const PillarAssignmentState state(system_over(5, {{1, 3}}), {pillar(7, 10, 1, 0)});
  EXPECT_EQ(assign_interval(0, state), std::nullopt);
}

TEST(AssignInterval, SingleContainedPillar) {
  const PillarAssignmentState state(system_over(5, {{1, 4}}), {pillar(3, 10, 1, 5)});
  EXPECT_EQ(assign_interval(0, state), std::optional<std::size_t>(0));
}

TEST(PillarAssignmentState, RejectsInvalidPillars) {
  const auto s = system_over(5, {{1, 3}});
  EXPECT_THROW(PillarAssignmentState(s, {pillar(1, 5, 1, 0)}), InvalidPosition);
  EXPECT_THROW(PillarAssignmentState(s, {pillar(1, 2, 1, 0), pillar(1, 2, 2, 1)}), InvalidPosition);
  EXPECT_THROW(PillarAssignmentState(s, {pillar(1, 2, 1, 0), pillar(2, 3, 2, 0)}), InvalidPosition);
  EXPECT_THROW(PillarAssignmentState(s, {pillar(1, 2, 0, 0)}), InvalidPosition);
}

TEST(RecomputeAssignment, EmptyPillarSet) {
  const PillarAssignmentState state(triangle14());
  for (const auto& a : state.assignment()) EXPECT_EQ(a, std::nullopt);
}

TEST(RecomputeAssignment, OnePillarInsideEveryInterval) {
  const PillarAssignmentState state(triangle14(), {pillar(7, 14, 1, 0)});
  for (const auto& a : state.assignment()) EXPECT_EQ(a, std::optional<std::size_t>(0));
  EXPECT_TRUE(state.complete());
}

TEST(RecomputeAssignment, CrossingPairSharesIntersectionPillar) {
  const PillarAssignmentState state(normalize({{1, 3}, {2, 4}}), {pillar(1, 2, 1, 0)});
  EXPECT_EQ(state.assigned(0), std::optional<std::size_t>(0));
  EXPECT_EQ(state.assigned(1), std::optional<std::size_t>(0));
}

TEST(RecomputeAssignment, IsAPureFunctionOfSystemAndPillars) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = gen_uniform_matching(2 + rng.below(20), rng.next());
    auto pts = testing::random_pillars(s, 1 + rng.below(6), rng);
    std::vector<Pillar> pillars;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      pillars.push_back({pts[k], 1 + static_cast<int>(rng.below(3)),
                         static_cast<std::int64_t>(rng.below(1000) * 10 + k)});
    }
    const PillarAssignmentState a(s, pillars);
    const auto b = recompute_assignment(a);
    EXPECT_EQ(a.assignment(), b.assignment());
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto p = a.assigned(i);
      bool any = false;
      for (std::size_t q = 0; q < pillars.size(); ++q) {
        if (!s[i].contains(pillars[q].pos)) continue;
        any = true;
        ASSERT_TRUE(p.has_value());
        EXPECT_LE(pillars[*p].order_key, pillars[q].order_key);
      }
      EXPECT_EQ(any, p.has_value());
    }
  }
}

TEST(CheckCondition1, SamePillarIsFine) {
  const PillarAssignmentState state(normalize({{1, 3}, {2, 4}}), {pillar(1, 2, 1, 0)});
  EXPECT_TRUE(check_condition1(state).empty());
}

TEST(CheckCondition1, DistinctColorsAreFine) {
  const PillarAssignmentState state(normalize({{1, 3}, {2, 4}}),
                                    {pillar(3, 10, 1, 0), pillar(7, 10, 2, 1)});
  ASSERT_NE(state.assigned(0), state.assigned(1));
  EXPECT_TRUE(check_condition1(state).empty());
}

TEST(CheckCondition1, SameColorDistinctPillarsViolates) {
  const PillarAssignmentState state(normalize({{1, 3}, {2, 4}}),
                                    {pillar(3, 10, 1, 0), pillar(7, 10, 1, 1)});
  const auto v = check_condition1(state);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0], (Condition1Violation{0, 1, 0, 1}));
}

TEST(PDegree, EmptySystem) {
  const std::vector<Position> pts{Position(1, 3), Position(2, 3)};
  EXPECT_EQ(p_degree(IntervalSystem{}, pts, pts[0], pts[1]), 0U);
  EXPECT_EQ(p_degree_oracle(IntervalSystem{}, pts, pts[0], pts[1]), 0U);
}

TEST(PDegree, TriangleBetweenMembers) {
  const auto s = triangle14();
  const std::vector<Position> pts{Position(3, 14), Position(9, 14)};
  EXPECT_EQ(p_degree(s, pts, pts[0], pts[1]), 2U);
  EXPECT_EQ(p_degree_oracle(s, pts, pts[0], pts[1]), 2U);
}

TEST(PDegree, TriangleWindowInsideMiddleSegment) {
  // Only endpoint 6/14 lies in (5/14, 7/14); its partner 12/14 is in (9/14, 1).
  const auto s = triangle14();
  const std::vector<Position> pts{Position(3, 14), Position(9, 14)};
  EXPECT_EQ(p_degree(s, pts, Position(5, 14), Position(7, 14)), 1U);
  EXPECT_EQ(p_degree_oracle(s, pts, Position(5, 14), Position(7, 14)), 1U);
}

TEST(PDegree, IllegalPairs) {
  const auto s = triangle14();
  const std::vector<Position> pts{Position(3, 14), Position(9, 14)};
  EXPECT_THROW(p_degree(s, pts, pts[1], pts[0]), IllegalPair);
  EXPECT_THROW(p_degree(s, pts, Position(2, 14), pts[1]), IllegalPair);
  EXPECT_THROW(p_degree(s, pts, Position(5, 14), Position(11, 14)), IllegalPair);
  EXPECT_THROW(p_degree(s, pts, pts[0], Position(7, 14)), IllegalPair);
  EXPECT_THROW(p_degree_oracle(s, pts, Position(5, 14), Position(11, 14)), IllegalPair);
  EXPECT_THROW(p_degree_oracle(s, pts, pts[0], Position(7, 14)), IllegalPair);
}

// Counting bound d_P(p1,p2) <= w|P| for p1 < p2 in P, plus agreement with the
// segment-pair enumeration oracle.
TEST(PDegree, CountingBoundAndDifferential) {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const auto s = gen_uniform_matching(1 + rng.below(14), rng.next());
    const std::size_t omega = clique_number_exact(s);
    const auto pts = testing::random_pillars(s, 2 + rng.below(7), rng);
    const std::size_t a = rng.below(pts.size() - 1);
    const std::size_t b = a + 1 + rng.below(pts.size() - a - 1);
    const auto d = p_degree(s, pts, pts[a], pts[b]);
    EXPECT_LE(d, omega * pts.size());
    EXPECT_EQ(d, p_degree_oracle(s, pts, pts[a], pts[b]));

    // window strictly inside one segment
    const auto segs = segments_of(pts);
    const auto& seg = segs[rng.below(segs.size())];
    const auto inner = testing::random_pillars(s, 40, rng);
    std::vector<Position> in_seg;
    for (const auto& p : inner) {
      if (seg.contains(p)) in_seg.push_back(p);
    }
    if (in_seg.size() >= 2) {
      EXPECT_EQ(p_degree(s, pts, in_seg.front(), in_seg.back()),
                p_degree_oracle(s, pts, in_seg.front(), in_seg.back()));
    }
  }
}

TEST(OrderedDegree, NoPillars) {
  const PillarAssignmentState state(triangle14());
  EXPECT_EQ(ordered_degree(state, {Rational::zero(), Rational::one()}), 0U);
}

TEST(OrderedDegree, WindowWithOneAssignedEnd) {
  const PillarAssignmentState state(triangle14(), {pillar(7, 14, 1, 0)});
  EXPECT_EQ(ordered_degree(state, {Rational(1, 14), Rational(3, 14)}), 1U);
}

TEST(OrderedDegree, SameSegmentPairCountsOnce) {
  // (4,10) and (6,12) both have ends in (3/14,9/14) and (9/14,1).
  const PillarAssignmentState state(triangle14(), {pillar(3, 14, 1, 0), pillar(9, 14, 2, 1)});
  EXPECT_EQ(state.assigned(1), state.assigned(2));
  EXPECT_EQ(ordered_degree(state, {Rational(3, 14), Rational(7, 14)}), 1U);
  EXPECT_EQ(ordered_degree(state, {Rational(3, 14), Rational(9, 14)}), 2U);
}

TEST(OrderedDegree, WindowMustAvoidPillars) {
  const PillarAssignmentState state(triangle14(), {pillar(3, 14, 1, 0)});
  EXPECT_THROW(ordered_degree(state, {Rational(1, 14), Rational(5, 14)}), IllegalWindow);
}

TEST(MaxDegree, EmptyPillarSet) {
  EXPECT_EQ(max_degree(PillarAssignmentState(triangle14())), 0U);
}

TEST(MaxDegree, OnePillarCoveringEverything) {
  const PillarAssignmentState state(system_over(7, {{1, 4}, {2, 5}, {3, 6}}), {pillar(1, 2, 1, 0)});
  EXPECT_EQ(segment_degrees(state), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(max_degree(state), 1U);
}

// An interior segment S = (a,b) of P has (P,order)-degree at most d_P(a,b).
TEST(OrderedDegree, BoundedByPDegreeOnSegments) {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = gen_uniform_matching(1 + rng.below(16), rng.next());
    const auto pts = testing::random_pillars(s, 2 + rng.below(6), rng);
    std::vector<std::int64_t> keys(pts.size());
    std::iota(keys.begin(), keys.end(), 0);
    for (std::size_t i = keys.size(); i > 1; --i) std::swap(keys[i - 1], keys[rng.below(i)]);
    std::vector<Pillar> pillars;
    for (std::size_t k = 0; k < pts.size(); ++k) pillars.push_back({pts[k], 1, keys[k]});
    const PillarAssignmentState state(s, pillars);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      EXPECT_LE(ordered_degree(state, {pts[k].value(), pts[k + 1].value()}),
                p_degree(s, pts, pts[k], pts[k + 1]));
    }
  }
}

} // namespace
} // namespace circlecolor
