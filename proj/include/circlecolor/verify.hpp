#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>
#include <set>
#include <string>

#include "augment.hpp"
#include "oracles.hpp"
#include "perm_coloring.hpp"
#include "pillar_assignment.hpp"

namespace circlecolor {

/// Color-count bounds for clique number omega: at most 7w classes and 7w^2
/// final colors when w >= 2, a single color when w <= 1.
inline VerificationReport check_bounds(std::size_t omega, std::size_t pillar_colors,
                                       std::size_t final_colors) {
  VerificationReport r;
  if (omega >= 2) {
    r.add("class_bound", pillar_colors <= 7 * omega,
          std::to_string(pillar_colors) + " pillar colors vs 7w = " + std::to_string(7 * omega));
    r.add("final_bound", final_colors <= 7 * omega * omega,
          std::to_string(final_colors) + " final colors vs 7w^2 = " +
              std::to_string(7 * omega * omega));
  } else {
    r.add("final_bound", final_colors <= 1,
          std::to_string(final_colors) + " final colors for w <= 1");
  }
  return r;
}

inline std::size_t distinct_pillar_colors(const PillarAssignmentState& state) {
  std::set<int> colors;
  for (const auto& p : state.pillars()) colors.insert(p.color);
  return colors.size();
}

/// Full certificate check of a finished coloring against its pillar state.
inline VerificationReport verify_all(const PillarAssignmentState& state,
                                     const ClassColoring& coloring, std::size_t omega) {
  VerificationReport r;
  r.add("complete", state.complete(),
        std::to_string(state.system().size() - state.covered_count()) + " uncovered");
  const auto violations = check_condition1(state);
  r.add("condition1", violations.empty(),
        violations.empty() ? std::string{}
                           : "(" + std::to_string(violations.front().first) + "," +
                                 std::to_string(violations.front().second) + ")");
  const auto finals = coloring.final_colors();
  r.merge(verify_proper(state.system(), finals));
  r.merge(verify_permutation_certificate(state, coloring));
  std::set<int> distinct(finals.begin(), finals.end());
  r.merge(check_bounds(omega, distinct_pillar_colors(state), distinct.size()));
  return r;
}

/// Per-step augmentation invariants; returns one message per violation.
inline std::vector<std::string> check_step(const StepRecord& rec, const AugmentConfig& cfg) {
  std::vector<std::string> out;
  const std::string at = "step " + std::to_string(rec.step) + ": ";
  if (static_cast<std::int64_t>(rec.max_degree) > cfg.budget) {
    out.push_back(at + "max degree " + std::to_string(rec.max_degree) + " > budget");
  }
  for (int c : rec.fresh_colors) {
    if (std::find(rec.p1_colors.begin(), rec.p1_colors.end(), c) != rec.p1_colors.end()) {
      out.push_back(at + "fresh color " + std::to_string(c) + " is used by P1");
    }
  }
  if (rec.covered_after <= rec.covered_before) out.push_back(at + "coverage did not grow");
  if ((cfg.quota - cfg.omega) * static_cast<std::int64_t>(rec.quota_pillars) >=
      cfg.omega * cfg.budget) {
    out.push_back(at + "spacing pillar count " + std::to_string(rec.quota_pillars) +
                  " breaks (Q-w)|P1*| < wB");
  }
  if (!rec.prior_assignments_kept) out.push_back(at + "a prior assignment moved");
  if (rec.condition1_violations != 0) out.push_back(at + "condition (1) violated");
  return out;
}

inline VerificationReport verify_result(const ColoringResult& result) {
  return verify_all(result.state, result.coloring, result.omega);
}

} // namespace circlecolor
