#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace circlecolor {

struct Interval {
  Position left;
  Position right;

  bool contains(const Rational& x) const { return left.value() < x && x < right.value(); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Endpoints interleave: the intervals intersect and neither contains the other.
inline bool overlaps(const Interval& a, const Interval& b) {
  return (a.left < b.left && b.left < a.right && a.right < b.right) ||
         (b.left < a.left && a.left < b.right && b.right < a.right);
}

struct Endpoint {
  Position pos;
  std::size_t interval;
  bool is_left;
};

/// Finite set of open subintervals of (0,1) with pairwise distinct endpoints.
class IntervalSystem {
public:
  IntervalSystem() = default;

  explicit IntervalSystem(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    endpoints_.reserve(2 * intervals_.size());
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
      const auto& iv = intervals_[i];
      if (!(iv.left < iv.right)) {
        throw DegenerateInterval("interval " + std::to_string(i) + " has left >= right");
      }
      endpoints_.push_back({iv.left, i, true});
      endpoints_.push_back({iv.right, i, false});
    }
    std::sort(endpoints_.begin(), endpoints_.end(),
              [](const Endpoint& a, const Endpoint& b) { return a.pos < b.pos; });
    for (std::size_t k = 1; k < endpoints_.size(); ++k) {
      if (endpoints_[k - 1].pos == endpoints_[k].pos) {
        throw DuplicateEndpoint("endpoint " + endpoints_[k].pos.to_string() +
                                " is shared by two intervals");
      }
    }
  }

  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  /// All 2n endpoints in increasing order.
  const std::vector<Endpoint>& endpoints() const { return endpoints_; }

  bool is_endpoint(const Rational& x) const {
    auto it = std::lower_bound(endpoints_.begin(), endpoints_.end(), x,
                               [](const Endpoint& e, const Rational& v) { return e.pos.value() < v; });
    return it != endpoints_.end() && it->pos.value() == x;
  }

  /// A pillar is any point of (0,1) that is not an endpoint.
  bool is_pillar_position(const Rational& x) const {
    return Rational::zero() < x && x < Rational::one() && !is_endpoint(x);
  }

  /// Smallest endpoint strictly greater than x, if any.
  std::optional<Position> next_endpoint_after(const Rational& x) const {
    auto it = std::upper_bound(endpoints_.begin(), endpoints_.end(), x,
                               [](const Rational& v, const Endpoint& e) { return v < e.pos.value(); });
    if (it == endpoints_.end()) return std::nullopt;
    return it->pos;
  }

  friend bool operator==(const IntervalSystem& a, const IntervalSystem& b) {
    return a.intervals_ == b.intervals_;
  }

private:
  std::vector<Interval> intervals_;
  std::vector<Endpoint> endpoints_;
};

/// Maps arbitrary distinct integer endpoints onto ranks r/(2n+1), r = 1..2n.
inline IntervalSystem normalize(std::span<const std::pair<std::int64_t, std::int64_t>> raw) {
  const std::size_t n = raw.size();
  std::vector<std::int64_t> values;
  values.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].first >= raw[i].second) {
      throw DegenerateInterval("interval " + std::to_string(i) + " = [" +
                               std::to_string(raw[i].first) + "," +
                               std::to_string(raw[i].second) + "] is not l < r");
    }
    values.push_back(raw[i].first);
    values.push_back(raw[i].second);
  }
  std::vector<std::int64_t> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw DuplicateEndpoint("endpoint value " + std::to_string(*dup) + " appears twice");
  }
  const auto den = static_cast<std::int64_t>(2 * n + 1);
  auto rank_of = [&](std::int64_t v) {
    return static_cast<std::int64_t>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                     sorted.begin()) + 1;
  };
  std::vector<Interval> intervals;
  intervals.reserve(n);
  for (const auto& [l, r] : raw) {
    intervals.push_back({Position(rank_of(l), den), Position(rank_of(r), den)});
  }
  return IntervalSystem(std::move(intervals));
}

inline IntervalSystem normalize(const std::vector<std::pair<std::int64_t, std::int64_t>>& raw) {
  return normalize(std::span<const std::pair<std::int64_t, std::int64_t>>(raw));
}

/// Inverse of normalize for a normalized system: the 1-based endpoint ranks.
inline std::vector<std::pair<std::int64_t, std::int64_t>> ranks_of(const IntervalSystem& s) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out(s.size());
  const auto& eps = s.endpoints();
  for (std::size_t k = 0; k < eps.size(); ++k) {
    auto& slot = out[eps[k].interval];
    (eps[k].is_left ? slot.first : slot.second) = static_cast<std::int64_t>(k) + 1;
  }
  return out;
}

class OverlapGraph {
public:
  OverlapGraph() = default;

  explicit OverlapGraph(const IntervalSystem& s)
      : n_(s.size()), adj_(n_ * n_, 0), neighbors_(n_), component_(n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (overlaps(s[i], s[j])) {
          adj_[i * n_ + j] = adj_[j * n_ + i] = 1;
          neighbors_[i].push_back(j);
          neighbors_[j].push_back(i);
          ++edges_;
        }
      }
    }
    label_components();
  }

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return neighbors_[i]; }
  std::size_t component(std::size_t i) const { return component_[i]; }
  std::size_t component_count() const { return components_; }

private:
  void label_components() {
    std::vector<bool> seen(n_, false);
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < n_; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      stack.push_back(root);
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        component_[v] = components_;
        for (std::size_t w : neighbors_[v]) {
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      ++components_;
    }
  }

  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::size_t components_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::size_t> component_;
};

inline OverlapGraph overlap_graph(const IntervalSystem& s) { return OverlapGraph(s); }

/// Open interval (lo, hi) with lo, hi in [0,1].
struct Segment {
  Rational lo = Rational::zero();
  Rational hi = Rational::one();

  bool contains(const Rational& x) const { return lo < x && x < hi; }
  bool contains(const Interval& iv) const { return lo <= iv.left.value() && iv.right.value() <= hi; }
  /// Open intervals (lo,hi) and (a,b) share no point.
  bool disjoint_from(const Rational& a, const Rational& b) const { return hi <= a || b <= lo; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// The |points|+1 segments of a sorted point set, left to right.
inline std::vector<Segment> segments_of(std::span<const Position> points) {
  std::vector<Segment> out;
  out.reserve(points.size() + 1);
  Rational lo = Rational::zero();
  for (const auto& p : points) {
    out.push_back({lo, p.value()});
    lo = p.value();
  }
  out.push_back({lo, Rational::one()});
  return out;
}

/// Index of the segment of `points` (sorted) that contains x, where x is not a point.
inline std::size_t segment_index(std::span<const Position> points, const Rational& x) {
  return static_cast<std::size_t>(
      std::lower_bound(points.begin(), points.end(), x,
                       [](const Position& p, const Rational& v) { return p.value() < v; }) -
      points.begin());
}

} // namespace circlecolor
