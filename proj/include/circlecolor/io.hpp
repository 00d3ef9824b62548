#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "augment.hpp"
#include "errors.hpp"
#include "interval_system.hpp"
#include "oracles.hpp"
#include "perm_coloring.hpp"
#include "pillar_assignment.hpp"

namespace circlecolor {

using json = nlohmann::json;

inline constexpr const char* kSystemFormat = "interval-system/v1";
inline constexpr const char* kPillarFormat = "pillar-assignment/v1";
inline constexpr const char* kColoringFormat = "coloring/v1";

namespace detail {

inline void expect_format(const json& j, const char* format) {
  if (!j.is_object() || !j.contains("format") || j.at("format") != format) {
    throw FormatError(std::string("expected a '") + format + "' document");
  }
}

inline json position_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

inline Position position_from(const json& j) {
  return Position(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON document: ") + e.what());
  }
}

} // namespace detail

/// Endpoints are written as their ranks 1..2n.
inline json system_to_json(const IntervalSystem& s) {
  json intervals = json::array();
  for (const auto& [l, r] : ranks_of(s)) intervals.push_back({l, r});
  return {{"format", kSystemFormat}, {"intervals", intervals}};
}

inline IntervalSystem system_from_json(const json& j) {
  return detail::guarded([&] {
    detail::expect_format(j, kSystemFormat);
    RawIntervals raw;
    for (const auto& pair : j.at("intervals")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw FormatError("each interval must be a [left, right] pair");
      }
      raw.emplace_back(pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>());
    }
    return normalize(raw);
  });
}

inline json state_to_json(const PillarAssignmentState& state) {
  json pillars = json::array();
  for (const auto& p : state.pillars()) {
    pillars.push_back({{"pos", detail::position_json(p.pos)},
                       {"color", p.color},
                       {"order_key", p.order_key}});
  }
  json assignment = json::array();
  for (const auto& a : state.assignment()) {
    assignment.push_back(a ? json(*a) : json(nullptr));
  }
  return {{"format", kPillarFormat}, {"pillars", pillars}, {"assignment", assignment}};
}

/// Pillars as stored plus the assignment the file claims.
struct PillarAssignmentFile {
  std::vector<Pillar> pillars;
  Assignment assignment;
};

inline PillarAssignmentFile state_file_from_json(const json& j) {
  return detail::guarded([&] {
    detail::expect_format(j, kPillarFormat);
    PillarAssignmentFile out;
    for (const auto& p : j.at("pillars")) {
      out.pillars.push_back({detail::position_from(p.at("pos")), p.at("color").get<int>(),
                             p.at("order_key").get<std::int64_t>()});
    }
    for (const auto& a : j.at("assignment")) {
      out.assignment.push_back(a.is_null() ? std::nullopt
                                           : std::optional<std::size_t>(a.get<std::size_t>()));
    }
    return out;
  });
}

inline json coloring_intervals_json(const ClassColoring& c) {
  json rows = json::array();
  for (std::size_t i = 0; i < c.intervals.size(); ++i) {
    const auto& row = c.intervals[i];
    rows.push_back({{"index", i},
                    {"pillar", row.pillar ? json(*row.pillar) : json(nullptr)},
                    {"class_color", row.class_color},
                    {"fiber_color", row.fiber_color},
                    {"final_color", row.final_color}});
  }
  return rows;
}

inline json coloring_to_json(const ColoringResult& r) {
  json summary = {{"n", r.state.system().size()},
                  {"omega", r.omega},
                  {"num_classes", r.coloring.num_classes},
                  {"num_final_colors", r.coloring.num_final_colors},
                  {"pillar_colors", r.pillar_colors()},
                  {"pillars", r.state.pillars().size()},
                  {"steps", r.steps.size()}};
  if (r.config) {
    summary["profile"] = to_string(r.config->profile);
    summary["quota"] = r.config->quota;
    summary["budget"] = r.config->budget;
    summary["palette_size"] = r.config->palette_size;
  } else {
    summary["profile"] = "trivial";
  }
  return {{"format", kColoringFormat},
          {"intervals", coloring_intervals_json(r.coloring)},
          {"summary", summary},
          {"pillar_assignment", state_to_json(r.state)}};
}

/// A coloring/v1 document: per-interval colors and the embedded assignment.
struct ColoringFile {
  ClassColoring coloring;
  std::optional<PillarAssignmentFile> assignment;
  std::optional<std::size_t> omega;
};

inline ColoringFile coloring_from_json(const json& j) {
  return detail::guarded([&] {
    detail::expect_format(j, kColoringFormat);
    ColoringFile out;
    std::set<int> classes;
    std::set<int> finals;
    const auto& rows = j.at("intervals");
    out.coloring.intervals.resize(rows.size());
    for (const auto& row : rows) {
      const auto index = row.at("index").get<std::size_t>();
      if (index >= rows.size()) throw FormatError("interval index out of range");
      auto& slot = out.coloring.intervals[index];
      const auto& pillar = row.at("pillar");
      slot.pillar = pillar.is_null() ? std::nullopt
                                     : std::optional<std::size_t>(pillar.get<std::size_t>());
      slot.class_color = row.at("class_color").get<int>();
      slot.fiber_color = row.at("fiber_color").get<int>();
      slot.final_color = row.at("final_color").get<int>();
      classes.insert(slot.class_color);
      finals.insert(slot.final_color);
    }
    out.coloring.num_classes = classes.size();
    out.coloring.num_final_colors = finals.size();
    if (j.contains("pillar_assignment")) {
      out.assignment = state_file_from_json(j.at("pillar_assignment"));
    }
    if (j.contains("summary") && j.at("summary").contains("omega")) {
      out.omega = j.at("summary").at("omega").get<std::size_t>();
    }
    return out;
  });
}

inline json segment_json(const Segment& s) {
  return {{"lo", detail::position_json(s.lo)}, {"hi", detail::position_json(s.hi)}};
}

inline json step_to_json(const StepRecord& r) {
  return {{"step", r.step},
          {"interval", r.interval},
          {"segment", segment_json(r.segment)},
          {"p1_size", r.p1_size},
          {"p1_colors", r.p1_colors},
          {"quota_pillars", r.quota_pillars},
          {"new_pillars", r.new_pillars},
          {"k", r.k},
          {"fresh_colors", r.fresh_colors},
          {"covered_before", r.covered_before},
          {"covered_after", r.covered_after},
          {"max_degree", r.max_degree},
          {"prior_assignments_kept", r.prior_assignments_kept},
          {"condition1_violations", r.condition1_violations}};
}

inline json report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
  }
  return {{"passed", r.passed}, {"checks", checks}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

inline void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

} // namespace circlecolor
