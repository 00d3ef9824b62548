#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "interval_system.hpp"

namespace circlecolor {

/// A point that is not an endpoint, with a color and a rank under the
/// assignment order (smaller order_key = earlier).
struct Pillar {
  Position pos;
  int color = 1;
  std::int64_t order_key = 0;

  friend bool operator==(const Pillar&, const Pillar&) = default;
};

using Assignment = std::vector<std::optional<std::size_t>>;

/// Pillar set with order and coloring, plus the induced interval -> pillar map.
///
/// Every interval that contains a pillar is assigned to the contained pillar
/// with the smallest order_key. The assignment is recomputed eagerly whenever
/// the pillar list changes through this class.
class PillarAssignmentState {
public:
  PillarAssignmentState() = default;

  explicit PillarAssignmentState(IntervalSystem system, std::vector<Pillar> pillars = {})
      : system_(std::move(system)), pillars_(std::move(pillars)) {
    validate_pillars();
    recompute();
  }

  const IntervalSystem& system() const { return system_; }
  const std::vector<Pillar>& pillars() const { return pillars_; }
  const Pillar& pillar(std::size_t p) const { return pillars_[p]; }
  const Assignment& assignment() const { return assignment_; }
  std::optional<std::size_t> assigned(std::size_t interval) const { return assignment_[interval]; }

  /// Pillar positions in increasing order.
  std::vector<Position> sorted_positions() const {
    std::vector<Position> out;
    out.reserve(pillars_.size());
    for (const auto& p : pillars_) out.push_back(p.pos);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::int64_t max_order_key() const {
    std::int64_t m = -1;
    for (const auto& p : pillars_) m = std::max(m, p.order_key);
    return m;
  }

  std::size_t covered_count() const {
    return static_cast<std::size_t>(
        std::count_if(assignment_.begin(), assignment_.end(), [](const auto& a) { return a.has_value(); }));
  }

  bool complete() const { return covered_count() == system_.size(); }

  void append(std::span<const Pillar> more) {
    pillars_.insert(pillars_.end(), more.begin(), more.end());
    validate_pillars();
    recompute();
  }

  void recompute();

private:
  void validate_pillars() const {
    std::vector<Position> pos;
    std::vector<std::int64_t> keys;
    for (const auto& p : pillars_) {
      if (system_.is_endpoint(p.pos)) {
        throw InvalidPosition("pillar at " + p.pos.to_string() + " coincides with an endpoint");
      }
      if (p.color < 1) {
        throw InvalidPosition("pillar colors must be positive");
      }
      pos.push_back(p.pos);
      keys.push_back(p.order_key);
    }
    std::sort(pos.begin(), pos.end());
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) {
      throw InvalidPosition("two pillars share a position");
    }
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
      throw InvalidPosition("two pillars share an order key");
    }
  }

  IntervalSystem system_;
  std::vector<Pillar> pillars_;
  Assignment assignment_;
};

/// The contained pillar that comes first under the order, if any.
inline std::optional<std::size_t> assign_interval(std::size_t interval,
                                                  const PillarAssignmentState& state) {
  const Interval& iv = state.system()[interval];
  std::optional<std::size_t> best;
  for (std::size_t p = 0; p < state.pillars().size(); ++p) {
    const Pillar& pl = state.pillar(p);
    if (iv.contains(pl.pos) && (!best || pl.order_key < state.pillar(*best).order_key)) {
      best = p;
    }
  }
  return best;
}

inline void PillarAssignmentState::recompute() {
  assignment_.assign(system_.size(), std::nullopt);
  for (std::size_t i = 0; i < system_.size(); ++i) {
    assignment_[i] = assign_interval(i, *this);
  }
}

inline PillarAssignmentState recompute_assignment(PillarAssignmentState state) {
  state.recompute();
  return state;
}

struct Condition1Violation {
  std::size_t first;
  std::size_t second;
  std::size_t first_pillar;
  std::size_t second_pillar;

  friend bool operator==(const Condition1Violation&, const Condition1Violation&) = default;
};

/// Overlapping intervals assigned to distinct pillars of one color.
inline std::vector<Condition1Violation> check_condition1(const PillarAssignmentState& state) {
  std::vector<Condition1Violation> out;
  const auto& sys = state.system();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto pi = state.assigned(i);
    if (!pi) continue;
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      const auto pj = state.assigned(j);
      if (!pj || *pi == *pj) continue;
      if (state.pillar(*pi).color == state.pillar(*pj).color && overlaps(sys[i], sys[j])) {
        out.push_back({i, j, *pi, *pj});
      }
    }
  }
  return out;
}

/// Number of segment pairs {S1, S2} joined by an interval, where S1 is a
/// segment of `points` disjoint from (p1,p2) and S2 is a segment of
/// points+{p1,p2} inside (p1,p2).
///
/// `points` must be sorted. Either both p1 and p2 belong to `points`, or
/// (p1,p2) lies inside one segment of `points`.
inline std::size_t p_degree(const IntervalSystem& system, std::span<const Position> points,
                            const Position& p1, const Position& p2) {
  if (!(p1 < p2)) throw IllegalPair("p_degree needs p1 < p2");
  if (system.is_endpoint(p1) || system.is_endpoint(p2)) {
    throw IllegalPair("p1 and p2 must not be interval endpoints");
  }
  const bool in1 = std::binary_search(points.begin(), points.end(), p1);
  const bool in2 = std::binary_search(points.begin(), points.end(), p2);
  const bool both_members = in1 && in2;
  if (!both_members) {
    if (in1 || in2 || segment_index(points, p1) != segment_index(points, p2)) {
      throw IllegalPair("(p1,p2) must join two members or lie inside one segment");
    }
  }
  const std::size_t window_segment = both_members ? 0 : segment_index(points, p1);

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& iv : system.intervals()) {
    const bool l_in = p1 < iv.left && iv.left < p2;
    const bool r_in = p1 < iv.right && iv.right < p2;
    if (l_in == r_in) continue;
    const Position& inside = l_in ? iv.left : iv.right;
    const Position& outside = l_in ? iv.right : iv.left;
    const std::size_t outer = segment_index(points, outside);
    if (!both_members && outer == window_segment) continue;
    const std::size_t inner = both_members ? segment_index(points, inside) : 0;
    pairs.emplace(outer, inner);
  }
  return pairs.size();
}

/// Number of distinct pillars that receive an interval with an end in the
/// window J. J must not contain a pillar.
inline std::size_t ordered_degree(const PillarAssignmentState& state, const Segment& window) {
  for (const auto& p : state.pillars()) {
    if (window.contains(p.pos)) {
      throw IllegalWindow("window (" + window.lo.to_string() + "," + window.hi.to_string() +
                          ") contains pillar " + p.pos.to_string());
    }
  }
  std::set<std::size_t> hit;
  for (const auto& e : state.system().endpoints()) {
    if (!window.contains(e.pos)) continue;
    if (const auto p = state.assigned(e.interval)) hit.insert(*p);
  }
  return hit.size();
}

/// Per-segment (P,order)-degree, indexed left to right.
inline std::vector<std::size_t> segment_degrees(const PillarAssignmentState& state) {
  const auto points = state.sorted_positions();
  std::vector<std::set<std::size_t>> hit(points.size() + 1);
  for (const auto& e : state.system().endpoints()) {
    if (const auto p = state.assigned(e.interval)) {
      hit[segment_index(points, e.pos)].insert(*p);
    }
  }
  std::vector<std::size_t> out;
  out.reserve(hit.size());
  for (const auto& h : hit) out.push_back(h.size());
  return out;
}

/// Maximum (P,order)-degree over all segments of P.
inline std::size_t max_degree(const PillarAssignmentState& state) {
  const auto d = segment_degrees(state);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

} // namespace circlecolor
