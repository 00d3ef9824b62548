#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "balanced_order.hpp"
#include "errors.hpp"
#include "interval_system.hpp"
#include "oracles.hpp"
#include "perm_coloring.hpp"
#include "pillar_assignment.hpp"

namespace circlecolor {

enum class Profile { Default, Omega2, Custom };

inline std::string to_string(Profile p) {
  switch (p) {
    case Profile::Default: return "default";
    case Profile::Omega2: return "omega2";
    case Profile::Custom: return "custom";
  }
  return "custom";
}

/// ceil(log2(x)) for x >= 1.
constexpr std::int64_t ceil_log2(std::int64_t x) {
  return static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(x - 1)));
}

/// Constants of one augmentation run.
///
/// quota:   P1-degree at which the greedy scan places a spacing pillar.
/// budget:  bound on the (P,order)-degree of every segment.
/// palette: pillar colors are drawn from 1..palette_size.
struct AugmentConfig {
  std::int64_t omega = 2;
  std::int64_t quota = 10;
  std::int64_t budget = 12;
  std::int64_t palette_size = 14;
  Profile profile = Profile::Omega2;

  /// omega >= 3: Q = w+8, B = w+ceil(2 log2 w)+8, palette = w+2 ceil(2 log2 w)+8.
  static AugmentConfig make_default(std::int64_t omega) {
    const std::int64_t lg = ceil_log2(omega * omega); // ceil(2 log2 w)
    return {omega, omega + 8, omega + lg + 8, omega + 2 * lg + 8, Profile::Default};
  }

  static AugmentConfig make_omega2() { return {2, 10, 12, 14, Profile::Omega2}; }

  static AugmentConfig make_custom(std::int64_t omega, std::int64_t quota, std::int64_t budget,
                                   std::int64_t palette) {
    return {omega, quota, budget, palette, Profile::Custom};
  }

  /// The profile the pipeline picks when no config is supplied.
  static AugmentConfig for_omega(std::int64_t omega) {
    return omega == 2 ? make_omega2() : make_default(omega);
  }
};

/// Worst-case sizes implied by the counting bound (Q - w)|P1*| < w B.
struct ClosureReport {
  std::int64_t max_quota_pillars = 0;
  std::int64_t max_new_pillars = 0;
  std::int64_t k_max = 0;
  bool budget_closes = false;  // B >= Q + k_max
  bool palette_closes = false; // palette >= B + k_max
  bool palette_within_7w = false;

  bool ok() const { return budget_closes && palette_closes && palette_within_7w; }
};

inline ClosureReport closure(const AugmentConfig& cfg) {
  ClosureReport r;
  if (cfg.quota <= cfg.omega) return r;
  r.max_quota_pillars = (cfg.omega * cfg.budget - 1) / (cfg.quota - cfg.omega);
  r.max_new_pillars = r.max_quota_pillars + 1;
  r.k_max = colors_needed(static_cast<std::size_t>(r.max_new_pillars));
  r.budget_closes = cfg.budget >= cfg.quota + r.k_max;
  r.palette_closes = cfg.palette_size >= cfg.budget + r.k_max;
  r.palette_within_7w = cfg.palette_size <= 7 * cfg.omega;
  return r;
}

/// Everything one augmentation step decided, before it is merged.
struct AugmentContext {
  Segment segment;
  std::size_t interval = 0;
  std::vector<std::size_t> p1;            // pillar indices, ascending
  std::vector<Position> quota_pillars;    // ascending
  Position star;
  std::vector<Position> new_positions;    // quota_pillars + star, ascending
  std::vector<int> fresh_colors;          // ascending
  BalancedOrderResult balanced;
};

/// Summary of one step, as emitted by --trace.
struct StepRecord {
  std::size_t step = 0;
  std::size_t interval = 0;
  Segment segment;
  std::size_t p1_size = 0;
  std::vector<int> p1_colors;
  std::size_t quota_pillars = 0;
  std::size_t new_pillars = 0;
  int k = 0;
  std::vector<int> fresh_colors;
  std::size_t covered_before = 0;
  std::size_t covered_after = 0;
  std::size_t max_degree = 0;
  bool prior_assignments_kept = true;
  std::size_t condition1_violations = 0;
};

/// Lowest-indexed unassigned interval and the segment of P containing it.
inline std::optional<std::pair<std::size_t, Segment>> find_uncovered(
    const PillarAssignmentState& state) {
  for (std::size_t i = 0; i < state.system().size(); ++i) {
    if (state.assigned(i)) continue;
    const auto points = state.sorted_positions();
    const auto segs = segments_of(points);
    return std::pair{i, segs[segment_index(points, state.system()[i].left)]};
  }
  return std::nullopt;
}

/// Pillars that receive some interval with an end in S.
inline std::vector<std::size_t> compute_P1(const PillarAssignmentState& state, const Segment& s) {
  std::set<std::size_t> hit;
  for (const auto& e : state.system().endpoints()) {
    if (!s.contains(e.pos)) continue;
    if (const auto p = state.assigned(e.interval)) hit.insert(*p);
  }
  return {hit.begin(), hit.end()};
}

/// Spacing pillars inside S such that every stretch between consecutive ones
/// has P1-degree exactly `quota`, and the trailing stretch at most `quota`.
///
/// Scans the endpoints in S left to right, collecting the P1-segments reached
/// by the other end of each interval. When an endpoint would push the window
/// past `quota`, a pillar goes into the gap just before it and the window
/// restarts with that endpoint.
inline std::vector<Position> greedy_quota_pillars(const IntervalSystem& system,
                                                  std::span<const Position> p1_positions,
                                                  const Segment& s, std::int64_t quota) {
  if (quota < 1) throw Error("quota must be positive");
  std::vector<Position> out;
  if (p1_positions.empty()) return out;
  const std::size_t home = segment_index(p1_positions, midpoint(s.lo, s.hi));
  std::set<std::size_t> window;
  std::optional<Position> previous;
  for (const auto& e : system.endpoints()) {
    if (!s.contains(e.pos)) continue;
    const Interval& iv = system[e.interval];
    const Position& other = e.is_left ? iv.right : iv.left;
    const std::size_t seg = segment_index(p1_positions, other);
    if (seg != home && !window.contains(seg)) {
      if (static_cast<std::int64_t>(window.size()) == quota) {
        out.emplace_back(midpoint(previous->value(), e.pos.value()));
        window.clear();
      }
      window.insert(seg);
    }
    previous = e.pos;
  }
  return out;
}

/// P1-degree of the window (a,b) inside a P1-segment.
inline std::size_t window_p1_degree(const IntervalSystem& system,
                                    std::span<const Position> p1_positions, const Rational& a,
                                    const Rational& b) {
  if (p1_positions.empty()) return 0;
  const std::size_t home = segment_index(p1_positions, midpoint(a, b));
  std::set<std::size_t> reached;
  for (const auto& e : system.endpoints()) {
    if (!(a < e.pos.value() && e.pos.value() < b)) continue;
    const Interval& iv = system[e.interval];
    const std::size_t seg = segment_index(p1_positions, e.is_left ? iv.right : iv.left);
    if (seg != home) reached.insert(seg);
  }
  return reached.size();
}

/// Point for p*: middle of the endpoint gap just inside I's right end, or of
/// the part of that gap right of a spacing pillar sitting in it.
inline Position star_position(const IntervalSystem& system, const Interval& target,
                              std::span<const Position> quota_pillars) {
  const auto& eps = system.endpoints();
  auto it = std::lower_bound(eps.begin(), eps.end(), target.right,
                             [](const Endpoint& e, const Position& v) { return e.pos < v; });
  Rational lo = std::prev(it)->pos.value();
  for (const auto& q : quota_pillars) {
    if (lo < q.value() && q < target.right) lo = q.value();
  }
  return Position(midpoint(lo, target.right.value()));
}

/// Picks S, P1, the spacing pillars, p* and fresh colors, and orders the new
/// pillars. Does not modify the state.
inline AugmentContext plan_step(const PillarAssignmentState& state, const AugmentConfig& cfg) {
  const auto found = find_uncovered(state);
  if (!found) throw Error("plan_step called on a complete assignment");
  const auto& sys = state.system();

  AugmentContext ctx;
  ctx.interval = found->first;
  ctx.segment = found->second;
  ctx.p1 = compute_P1(state, ctx.segment);

  std::vector<Position> p1_positions;
  std::set<int> p1_colors;
  for (std::size_t p : ctx.p1) {
    p1_positions.push_back(state.pillar(p).pos);
    p1_colors.insert(state.pillar(p).color);
  }
  std::sort(p1_positions.begin(), p1_positions.end());
  ctx.quota_pillars = greedy_quota_pillars(sys, p1_positions, ctx.segment, cfg.quota);

  ctx.star = star_position(sys, sys[ctx.interval], ctx.quota_pillars);

  ctx.new_positions = ctx.quota_pillars;
  ctx.new_positions.push_back(ctx.star);
  std::sort(ctx.new_positions.begin(), ctx.new_positions.end());

  const int k = colors_needed(ctx.new_positions.size());
  for (int c = 1; c <= cfg.palette_size && static_cast<int>(ctx.fresh_colors.size()) < k; ++c) {
    if (!p1_colors.contains(c)) ctx.fresh_colors.push_back(c);
  }
  if (static_cast<int>(ctx.fresh_colors.size()) < k) {
    throw PaletteExhausted("need " + std::to_string(k) + " colors outside the " +
                           std::to_string(p1_colors.size()) + " used by P1, palette has " +
                           std::to_string(cfg.palette_size));
  }
  ctx.balanced = build_balanced(ctx.new_positions, ctx.fresh_colors, sys);
  return ctx;
}

/// One augmentation: new pillars go after every existing pillar, so prior
/// assignments survive and the uncovered interval gets covered. Verifies
/// condition (1) and the degree budget afterwards.
inline StepRecord augment_step(PillarAssignmentState& state, const AugmentConfig& cfg,
                               AugmentContext* context_out = nullptr) {
  AugmentContext ctx = plan_step(state, cfg);
  const Assignment before = state.assignment();

  StepRecord rec;
  rec.interval = ctx.interval;
  rec.segment = ctx.segment;
  rec.p1_size = ctx.p1.size();
  for (std::size_t p : ctx.p1) rec.p1_colors.push_back(state.pillar(p).color);
  std::sort(rec.p1_colors.begin(), rec.p1_colors.end());
  rec.p1_colors.erase(std::unique(rec.p1_colors.begin(), rec.p1_colors.end()), rec.p1_colors.end());
  rec.quota_pillars = ctx.quota_pillars.size();
  rec.new_pillars = ctx.new_positions.size();
  rec.k = static_cast<int>(ctx.fresh_colors.size());
  rec.fresh_colors = ctx.fresh_colors;
  rec.covered_before = state.covered_count();

  std::vector<Pillar> added = ctx.balanced.ordered_pillars;
  const std::int64_t base = state.max_order_key() + 1;
  for (auto& p : added) p.order_key += base;
  state.append(added);

  rec.covered_after = state.covered_count();
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i] && state.assigned(i) != before[i]) rec.prior_assignments_kept = false;
  }
  rec.condition1_violations = check_condition1(state).size();
  rec.max_degree = max_degree(state);

  if (!rec.prior_assignments_kept || !state.assigned(ctx.interval) ||
      rec.condition1_violations != 0) {
    throw InvariantViolated("augmentation step broke the pillar assignment at interval " +
                            std::to_string(ctx.interval));
  }
  if (static_cast<std::int64_t>(rec.max_degree) > cfg.budget) {
    throw BudgetViolated("max degree " + std::to_string(rec.max_degree) + " exceeds budget " +
                         std::to_string(cfg.budget));
  }
  if (context_out) *context_out = std::move(ctx);
  return rec;
}

struct ColoringResult {
  std::size_t omega = 0;
  std::optional<AugmentConfig> config; // absent when omega <= 1
  PillarAssignmentState state;
  ClassColoring coloring;
  std::vector<StepRecord> steps;

  std::size_t pillar_colors() const {
    std::set<int> colors;
    for (const auto& p : state.pillars()) colors.insert(p.color);
    return colors.size();
  }
};

struct ColorOptions {
  std::optional<AugmentConfig> config;
  std::optional<std::size_t> omega; // skips the clique oracle when known
  std::size_t clique_cap = kDefaultCliqueCap;
  std::function<void(const StepRecord&)> on_step;
};

/// Pillars for an edgeless system: one per uncovered interval, all color 1.
inline PillarAssignmentState trivial_cover(const IntervalSystem& system) {
  PillarAssignmentState state(system);
  std::int64_t key = 0;
  while (const auto found = find_uncovered(state)) {
    const Pillar p{star_position(system, system[found->first], {}), 1, key++};
    state.append(std::span<const Pillar>(&p, 1));
  }
  return state;
}

/// Complete pillar assignment followed by per-fiber optimal coloring.
inline ColoringResult color_system(const IntervalSystem& system, const ColorOptions& opts = {}) {
  ColoringResult out;
  out.omega = opts.omega ? *opts.omega : clique_number_exact(system, opts.clique_cap);
  if (!opts.config && out.omega <= 1) {
    out.state = trivial_cover(system);
    out.coloring = compose(out.state);
    return out;
  }
  out.config = opts.config ? *opts.config
                           : AugmentConfig::for_omega(static_cast<std::int64_t>(out.omega));
  out.state = PillarAssignmentState(system);
  std::size_t step = 0;
  while (!out.state.complete()) {
    StepRecord rec = augment_step(out.state, *out.config);
    rec.step = step++;
    if (opts.on_step) opts.on_step(rec);
    out.steps.push_back(std::move(rec));
  }
  out.coloring = compose(out.state);
  return out;
}

} // namespace circlecolor
