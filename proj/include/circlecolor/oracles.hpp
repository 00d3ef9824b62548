#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "interval_system.hpp"
#include "perm_coloring.hpp"
#include "pillar_assignment.hpp"

namespace circlecolor {

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct VerificationReport {
  bool passed = true;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string witness = {}) {
    passed = passed && ok;
    checks.push_back({std::move(name), ok, std::move(witness)});
  }

  void merge(const VerificationReport& other) {
    for (const auto& c : other.checks) add(c.name, c.passed, c.witness);
  }
};

inline constexpr std::size_t kDefaultCliqueCap = 500;
inline constexpr std::size_t kDefaultChromaticCap = 16;

namespace detail {

// Branch and bound with greedy-coloring bounds (MCQ style).
class MaxCliqueSearch {
public:
  explicit MaxCliqueSearch(const OverlapGraph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> all(g_.size());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    std::stable_sort(all.begin(), all.end(), [&](std::size_t a, std::size_t b) {
      return g_.neighbors(a).size() > g_.neighbors(b).size();
    });
    std::vector<std::size_t> current;
    if (!all.empty()) expand(current, all);
    return best_;
  }

private:
  void color_sort(const std::vector<std::size_t>& cand, std::vector<std::size_t>& order,
                  std::vector<std::size_t>& bound) const {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v : cand) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        const bool clash = std::any_of(classes[k].begin(), classes[k].end(),
                                       [&](std::size_t w) { return g_.adjacent(v, w); });
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    order.clear();
    bound.clear();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (std::size_t v : classes[k]) {
        order.push_back(v);
        bound.push_back(k + 1);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, const std::vector<std::size_t>& cand) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    color_sort(cand, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      std::vector<std::size_t> next;
      for (std::size_t j = 0; j < i; ++j) {
        if (g_.adjacent(v, order[j])) next.push_back(order[j]);
      }
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
    }
  }

  const OverlapGraph& g_;
  std::vector<std::size_t> best_;
};

} // namespace detail

/// A maximum clique of the overlap graph (interval indices, ascending).
inline std::vector<std::size_t> max_clique(const IntervalSystem& system,
                                           std::size_t cap = kDefaultCliqueCap) {
  if (system.size() > cap) {
    throw TooLarge("clique oracle capped at " + std::to_string(cap) + " intervals, got " +
                   std::to_string(system.size()));
  }
  const OverlapGraph g(system);
  auto clique = detail::MaxCliqueSearch(g).run();
  std::sort(clique.begin(), clique.end());
  return clique;
}

inline std::size_t clique_number_exact(const IntervalSystem& system,
                                       std::size_t cap = kDefaultCliqueCap) {
  return max_clique(system, cap).size();
}

/// Exact chromatic number by backtracking over colors, starting at the clique
/// lower bound.
inline std::size_t chromatic_number_exact(const IntervalSystem& system,
                                          std::size_t cap = kDefaultChromaticCap) {
  const std::size_t n = system.size();
  if (n > cap) {
    throw TooLarge("chromatic oracle capped at " + std::to_string(cap) + " intervals, got " +
                   std::to_string(n));
  }
  if (n == 0) return 0;
  const OverlapGraph g(system);
  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.neighbors(a).size() > g.neighbors(b).size();
  });
  std::vector<std::size_t> color(n, 0);

  std::function<bool(std::size_t, std::size_t, std::size_t)> place =
      [&](std::size_t idx, std::size_t used, std::size_t k) -> bool {
    if (idx == n) return true;
    const std::size_t v = order[idx];
    for (std::size_t c = 1; c <= std::min(k, used + 1); ++c) {
      const bool clash = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                     [&](std::size_t w) { return color[w] == c; });
      if (clash) continue;
      color[v] = c;
      if (place(idx + 1, std::max(used, c), k)) return true;
      color[v] = 0;
    }
    return false;
  };

  for (std::size_t k = std::max<std::size_t>(1, clique_number_exact(system, cap)); k <= n; ++k) {
    std::fill(color.begin(), color.end(), 0);
    if (place(0, 0, k)) return k;
  }
  return n;
}

/// Fails with the first monochromatic overlapping pair.
inline VerificationReport verify_proper(const IntervalSystem& system, std::span<const int> colors) {
  VerificationReport report;
  if (colors.size() != system.size()) {
    report.add("proper", false,
               "coloring has " + std::to_string(colors.size()) + " entries for " +
                   std::to_string(system.size()) + " intervals");
    return report;
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (colors[i] < 1) {
      report.add("proper", false, "interval " + std::to_string(i) + " is uncolored");
      return report;
    }
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      if (colors[i] == colors[j] && overlaps(system[i], system[j])) {
        report.add("proper", false, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
        return report;
      }
    }
  }
  report.add("proper", true);
  return report;
}

/// Every connected component of every pillar-color class sits on a single
/// pillar that all its intervals strictly contain.
inline VerificationReport verify_permutation_certificate(const PillarAssignmentState& state,
                                                         const ClassColoring& coloring) {
  VerificationReport report;
  const auto& sys = state.system();
  if (!state.complete()) {
    report.add("permutation_certificate", false, "assignment is incomplete");
    return report;
  }
  if (coloring.intervals.size() != sys.size()) {
    report.add("permutation_certificate", false, "coloring size mismatch");
    return report;
  }
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto p = state.assigned(i);
    if (coloring.intervals[i].pillar != p ||
        coloring.intervals[i].class_color != state.pillar(*p).color) {
      report.add("permutation_certificate", false,
                 "interval " + std::to_string(i) + " disagrees with the pillar assignment");
      return report;
    }
  }
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < sys.size(); ++i) classes[coloring.intervals[i].class_color].push_back(i);

  for (const auto& [cls, members] : classes) {
    std::vector<bool> seen(sys.size(), false);
    std::vector<bool> in_class(sys.size(), false);
    for (std::size_t i : members) in_class[i] = true;
    for (std::size_t root : members) {
      if (seen[root]) continue;
      std::vector<std::size_t> component;
      std::vector<std::size_t> stack{root};
      seen[root] = true;
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        component.push_back(v);
        for (std::size_t w = 0; w < sys.size(); ++w) {
          if (in_class[w] && !seen[w] && overlaps(sys[v], sys[w])) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      const std::size_t pillar = *state.assigned(component.front());
      for (std::size_t v : component) {
        if (*state.assigned(v) != pillar || !sys[v].contains(state.pillar(pillar).pos)) {
          std::string witness = "class " + std::to_string(cls) + " component {";
          for (std::size_t k = 0; k < component.size(); ++k) {
            witness += (k ? "," : "") + std::to_string(component[k]);
          }
          report.add("permutation_certificate", false, witness + "} spans several pillars");
          return report;
        }
      }
    }
  }
  report.add("permutation_certificate", true);
  return report;
}

/// Literal enumeration of segment pairs for the P-degree; shares no code with
/// p_degree.
inline std::size_t p_degree_oracle(const IntervalSystem& system, std::span<const Position> points,
                                   const Position& p1, const Position& p2) {
  if (!(p1 < p2) || system.is_endpoint(p1) || system.is_endpoint(p2)) {
    throw IllegalPair("oracle: p1 < p2 must be non-endpoint points");
  }
  std::vector<Rational> base;
  for (const auto& p : points) base.push_back(p.value());
  std::sort(base.begin(), base.end());
  const bool m1 = std::find(base.begin(), base.end(), p1.value()) != base.end();
  const bool m2 = std::find(base.begin(), base.end(), p2.value()) != base.end();
  bool legal = m1 && m2;
  if (!m1 && !m2) {
    legal = std::none_of(base.begin(), base.end(), [&](const Rational& x) {
      return p1.value() <= x && x <= p2.value();
    });
  }
  if (!legal) throw IllegalPair("oracle: illegal (p1,p2) placement");

  auto segments = [](std::vector<Rational> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Segment> out;
    Rational lo = Rational::zero();
    for (const auto& x : pts) {
      out.push_back({lo, x});
      lo = x;
    }
    out.push_back({lo, Rational::one()});
    return out;
  };
  auto outer = segments(base);
  auto refined = base;
  refined.push_back(p1.value());
  refined.push_back(p2.value());
  auto inner = segments(refined);

  std::size_t count = 0;
  for (const auto& s1 : outer) {
    if (!s1.disjoint_from(p1.value(), p2.value())) continue;
    for (const auto& s2 : inner) {
      if (!(p1.value() <= s2.lo && s2.hi <= p2.value())) continue;
      const bool joined = std::any_of(system.intervals().begin(), system.intervals().end(),
                                      [&](const Interval& iv) {
                                        return (s1.contains(iv.left) && s2.contains(iv.right)) ||
                                               (s1.contains(iv.right) && s2.contains(iv.left));
                                      });
      if (joined) ++count;
    }
  }
  return count;
}

} // namespace circlecolor
