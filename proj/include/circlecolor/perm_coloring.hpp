#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "interval_system.hpp"
#include "pillar_assignment.hpp"

namespace circlecolor {

/// The intervals assigned to one pillar. All of them contain `pos`, so their
/// overlap graph is a permutation graph.
struct Fiber {
  std::size_t pillar = 0;
  Position pos;
  std::vector<std::size_t> intervals;
};

/// One fiber per pillar, in pillar index order (possibly empty).
inline std::vector<Fiber> fibers_of(const PillarAssignmentState& state) {
  std::vector<Fiber> out(state.pillars().size());
  for (std::size_t p = 0; p < out.size(); ++p) {
    out[p].pillar = p;
    out[p].pos = state.pillar(p).pos;
  }
  for (std::size_t i = 0; i < state.system().size(); ++i) {
    if (const auto p = state.assigned(i)) out[*p].intervals.push_back(i);
  }
  return out;
}

namespace detail {

// Fiber members sorted by left endpoint.
inline std::vector<std::size_t> by_left_end(const Fiber& f, const IntervalSystem& system) {
  std::vector<std::size_t> order = f.intervals;
  for (std::size_t i : order) {
    if (!system[i].contains(f.pos)) {
      throw IntervalMissesPillar("interval " + std::to_string(i) + " does not contain pillar " +
                                 f.pos.to_string());
    }
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return system[a].left < system[b].left; });
  return order;
}

} // namespace detail

/// Right-end ranks (1-based) of the fiber's intervals listed by left end.
/// Two members overlap iff their ranks form an ascent.
inline std::vector<int> fiber_permutation(const Fiber& f, const IntervalSystem& system) {
  const auto order = detail::by_left_end(f, system);
  std::vector<std::size_t> by_right(order.size());
  std::iota(by_right.begin(), by_right.end(), std::size_t{0});
  std::sort(by_right.begin(), by_right.end(), [&](std::size_t a, std::size_t b) {
    return system[order[a]].right < system[order[b]].right;
  });
  std::vector<int> perm(order.size());
  for (std::size_t r = 0; r < by_right.size(); ++r) perm[by_right[r]] = static_cast<int>(r) + 1;
  return perm;
}

/// Patience sorting into decreasing piles: each element goes on the
/// lowest-numbered pile whose top exceeds it. Returns the 1-based pile of
/// every element. Pile tops stay increasing, so the pile count equals the
/// longest increasing subsequence.
inline std::vector<int> patience_piles(std::span<const int> sequence) {
  std::vector<int> tops;
  std::vector<int> pile(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const int x = sequence[i];
    auto it = std::upper_bound(tops.begin(), tops.end(), x);
    if (it == tops.end()) {
      tops.push_back(x);
      pile[i] = static_cast<int>(tops.size());
    } else {
      *it = x;
      pile[i] = static_cast<int>(it - tops.begin()) + 1;
    }
  }
  return pile;
}

/// Optimal coloring of a fiber; result is aligned with f.intervals.
inline std::vector<int> patience_color(const Fiber& f, const IntervalSystem& system) {
  const auto order = detail::by_left_end(f, system);
  const auto perm = fiber_permutation(f, system);
  const auto piles = patience_piles(perm);
  std::map<std::size_t, int> color_of;
  for (std::size_t k = 0; k < order.size(); ++k) color_of[order[k]] = piles[k];
  std::vector<int> out;
  out.reserve(f.intervals.size());
  for (std::size_t i : f.intervals) out.push_back(color_of.at(i));
  return out;
}

struct IntervalColor {
  std::optional<std::size_t> pillar;
  int class_color = 0;
  int fiber_color = 0;
  int final_color = 0;

  friend bool operator==(const IntervalColor&, const IntervalColor&) = default;
};

struct ClassColoring {
  std::vector<IntervalColor> intervals;
  std::size_t num_classes = 0;
  std::size_t num_final_colors = 0;

  std::vector<int> final_colors() const {
    std::vector<int> out;
    out.reserve(intervals.size());
    for (const auto& c : intervals) out.push_back(c.final_color);
    return out;
  }
};

/// Colors every interval by (pillar color, pile within its fiber) and
/// flattens the realized pairs to 1..m in lexicographic order.
///
/// Fiber colors repeat across fibers of one class: condition (1) forbids
/// edges between distinct same-colored fibers.
inline ClassColoring compose(const PillarAssignmentState& state, std::span<const Fiber> fibers) {
  if (!state.complete()) {
    throw IncompleteAssignment(std::to_string(state.system().size() - state.covered_count()) +
                               " intervals are not assigned to a pillar");
  }
  ClassColoring out;
  out.intervals.resize(state.system().size());
  for (const auto& f : fibers) {
    const auto colors = patience_color(f, state.system());
    const int cls = state.pillar(f.pillar).color;
    for (std::size_t k = 0; k < f.intervals.size(); ++k) {
      auto& slot = out.intervals[f.intervals[k]];
      slot.pillar = f.pillar;
      slot.class_color = cls;
      slot.fiber_color = colors[k];
    }
  }
  std::set<std::pair<int, int>> realized;
  std::set<int> classes;
  for (const auto& c : out.intervals) {
    realized.emplace(c.class_color, c.fiber_color);
    classes.insert(c.class_color);
  }
  std::map<std::pair<int, int>, int> flat;
  for (const auto& pair : realized) flat.emplace(pair, static_cast<int>(flat.size()) + 1);
  for (auto& c : out.intervals) c.final_color = flat.at({c.class_color, c.fiber_color});
  out.num_classes = classes.size();
  out.num_final_colors = flat.size();
  return out;
}

inline ClassColoring compose(const PillarAssignmentState& state) {
  const auto fibers = fibers_of(state);
  return compose(state, fibers);
}

} // namespace circlecolor
