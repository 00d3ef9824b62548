#include <gtest/gtest.h>

#include "test_support.hpp"

namespace circlecolor {
namespace {

using testing::overlaps_by_sets;
using testing::system_over;

TEST(Rational, ReducesAndComparesExactly) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(6, 14).num(), 3);
  EXPECT_EQ(Rational(6, 14).den(), 7);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(midpoint(Rational(1, 5), Rational(2, 5)), Rational(3, 10));
  EXPECT_EQ(Rational::parse("9/14"), Rational(9, 14));
  EXPECT_THROW(Rational(1, 0), InvalidPosition);
  EXPECT_THROW(Rational::parse("x/2"), InvalidPosition);
}

TEST(Rational, PositionRejectsClosedEnds) {
  EXPECT_THROW(Position(0, 3), InvalidPosition);
  EXPECT_THROW(Position(3, 3), InvalidPosition);
  EXPECT_NO_THROW(Position(1, 3));
}

TEST(Normalize, MapsRanksOntoTwoNPlusOne) {
  const auto s = normalize({{10, 30}, {20, 40}});
  ASSERT_EQ(s.size(), 2U);
  EXPECT_EQ(s[0].left, Position(1, 5));
  EXPECT_EQ(s[0].right, Position(3, 5));
  EXPECT_EQ(s[1].left, Position(2, 5));
  EXPECT_EQ(s[1].right, Position(4, 5));
}

TEST(Normalize, EmptyInput) {
  const auto s = normalize(RawIntervals{});
  EXPECT_EQ(s.size(), 0U);
  EXPECT_TRUE(s.endpoints().empty());
}

TEST(Normalize, NestedPair) {
  const auto s = normalize({{1, 4}, {2, 3}});
  EXPECT_EQ(s[0], (Interval{Position(1, 5), Position(4, 5)}));
  EXPECT_EQ(s[1], (Interval{Position(2, 5), Position(3, 5)}));
  EXPECT_FALSE(overlaps(s[0], s[1]));
}

TEST(Normalize, Errors) {
  EXPECT_THROW(normalize({{1, 5}, {5, 9}}), DuplicateEndpoint);
  EXPECT_THROW(normalize({{4, 4}}), DegenerateInterval);
  EXPECT_THROW(normalize({{7, 2}}), DegenerateInterval);
}

TEST(Normalize, RanksAreABijectionAndOverlapIsPreserved) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(20);
    RawIntervals raw;
    std::set<std::int64_t> used;
    while (raw.size() < n) {
      auto a = static_cast<std::int64_t>(rng.below(1000)) - 500;
      auto b = static_cast<std::int64_t>(rng.below(1000)) - 500;
      if (a == b || used.contains(a) || used.contains(b)) continue;
      used.insert(a);
      used.insert(b);
      raw.emplace_back(std::min(a, b), std::max(a, b));
    }
    const auto s = normalize(raw);
    const auto den = static_cast<std::int64_t>(2 * n + 1);
    for (std::size_t k = 0; k < s.endpoints().size(); ++k) {
      EXPECT_EQ(s.endpoints()[k].pos, Position(static_cast<std::int64_t>(k) + 1, den));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto [a1, b1] = raw[i];
        const auto [a2, b2] = raw[j];
        const bool raw_overlap = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
        EXPECT_EQ(overlaps(s[i], s[j]), raw_overlap);
      }
    }
    EXPECT_EQ(normalize(ranks_of(s)), s);
  }
}

TEST(Overlaps, Examples) {
  EXPECT_TRUE(overlaps({Position(1, 5), Position(3, 5)}, {Position(2, 5), Position(4, 5)}));
  EXPECT_FALSE(overlaps({Position(1, 5), Position(4, 5)}, {Position(2, 5), Position(3, 5)}));
  EXPECT_FALSE(overlaps({Position(1, 7), Position(2, 7)}, {Position(3, 7), Position(4, 7)}));
}

TEST(Overlaps, SymmetricIrreflexiveAndMatchesSetDefinition) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = gen_uniform_matching(12, seed);
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_FALSE(overlaps(s[i], s[i]));
      for (std::size_t j = 0; j < s.size(); ++j) {
        EXPECT_EQ(overlaps(s[i], s[j]), overlaps(s[j], s[i]));
        if (i != j) EXPECT_EQ(overlaps(s[i], s[j]), overlaps_by_sets(s[i], s[j]));
      }
    }
  }
}

TEST(OverlapGraph, CrossingPairIsK2) {
  const auto g = overlap_graph(normalize({{10, 30}, {20, 40}}));
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_EQ(g.edge_count(), 1U);
  EXPECT_EQ(g.component_count(), 1U);
}

TEST(OverlapGraph, ThreeStaggeredIntervalsFormATriangle) {
  const auto s = system_over(7, {{1, 4}, {2, 5}, {3, 6}});
  const auto g = overlap_graph(s);
  EXPECT_EQ(g.edge_count(), 3U);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_TRUE(g.adjacent(i, j));
  }
  EXPECT_EQ(g.component_count(), 1U);
}

TEST(OverlapGraph, NestedPairIsTwoIsolatedVertices) {
  const auto g = overlap_graph(normalize({{1, 4}, {2, 3}}));
  EXPECT_EQ(g.edge_count(), 0U);
  EXPECT_EQ(g.component_count(), 2U);
  EXPECT_NE(g.component(0), g.component(1));
}

TEST(OverlapGraph, ComponentsAreTransitiveClosure) {
  // two blocks side by side plus a path a-b-c inside the first
  const auto s = normalize({{1, 3}, {2, 5}, {4, 6}, {7, 9}, {8, 10}});
  const auto g = overlap_graph(s);
  EXPECT_EQ(g.component_count(), 2U);
  EXPECT_EQ(g.component(0), g.component(2));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.component(3), g.component(4));
}

TEST(Segments, Examples) {
  EXPECT_EQ(segments_of(std::vector<Position>{}),
            (std::vector<Segment>{{Rational::zero(), Rational::one()}}));
  EXPECT_EQ(segments_of(std::vector<Position>{Position(1, 2)}),
            (std::vector<Segment>{{Rational::zero(), Rational(1, 2)}, {Rational(1, 2), Rational::one()}}));
  EXPECT_EQ(segments_of(std::vector<Position>{Position(1, 4), Position(3, 4)}),
            (std::vector<Segment>{{Rational::zero(), Rational(1, 4)},
                                  {Rational(1, 4), Rational(3, 4)},
                                  {Rational(3, 4), Rational::one()}}));
}

TEST(Segments, PartitionTheUnitInterval) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = gen_uniform_matching(1 + rng.below(15), rng.next());
    const auto pts = testing::random_pillars(s, rng.below(10), rng);
    const auto segs = segments_of(pts);
    ASSERT_EQ(segs.size(), pts.size() + 1);
    EXPECT_EQ(segs.front().lo, Rational::zero());
    EXPECT_EQ(segs.back().hi, Rational::one());
    for (std::size_t k = 0; k + 1 < segs.size(); ++k) {
      EXPECT_EQ(segs[k].hi, segs[k + 1].lo);
      EXPECT_LT(segs[k].lo, segs[k].hi);
    }
    for (const auto& p : pts) {
      for (const auto& seg : segs) EXPECT_FALSE(seg.contains(p));
    }
    for (const auto& e : s.endpoints()) {
      EXPECT_TRUE(segs[segment_index(pts, e.pos)].contains(e.pos));
    }
  }
}

TEST(IntervalSystem, RejectsSharedEndpoints) {
  EXPECT_THROW(system_over(7, {{1, 3}, {3, 5}}), DuplicateEndpoint);
  EXPECT_THROW(system_over(7, {{4, 2}}), DegenerateInterval);
}

} // namespace
} // namespace circlecolor
