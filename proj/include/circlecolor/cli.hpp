#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "augment.hpp"
#include "corpus.hpp"
#include "generator.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "svg.hpp"
#include "verify.hpp"

namespace circlecolor::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

namespace detail {

inline void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
  if (path && !path->empty() && *path != "-") {
    write_text_file(*path, text);
  } else {
    out << text;
  }
}

inline std::vector<Position> parse_positions(const std::string& csv) {
  std::vector<Position> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.emplace_back(Rational::parse(item));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct GenArgs {
  std::string model = "uniform_matching";
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::string output;
};

struct ColorArgs {
  std::string input;
  std::string output;
  std::string profile;
  std::optional<std::int64_t> quota;
  std::optional<std::int64_t> budget;
  std::optional<std::int64_t> palette;
  bool trace = false;
  std::size_t clique_cap = kDefaultCliqueCap;
};

struct VerifyArgs {
  std::string input;
  std::string coloring;
  std::size_t clique_cap = kDefaultCliqueCap;
};

struct OracleArgs {
  std::string kind;
  std::string input;
  std::string pillars;
  std::string p1;
  std::string p2;
  std::size_t cap = 0;
};

struct ExportArgs {
  bool svg = false;
  std::string input;
  std::string coloring;
  std::string output;
};

struct CorpusArgs {
  std::size_t count = 100;
  std::size_t nmin = 5;
  std::size_t nmax = 100;
  std::uint64_t seed = 1;
  std::string model = "uniform_matching";
  std::size_t threads = 0;
  std::string output;
};

inline int do_gen(const GenArgs& a, std::ostream& out) {
  const auto system = generate({parse_model(a.model), a.n, a.seed});
  emit(out, a.output, system_to_json(system).dump(2) + "\n");
  return kOk;
}

inline int do_color(const ColorArgs& a, std::ostream& out, std::ostream& err) {
  const auto system = system_from_json(read_json_file(a.input));
  ColorOptions opts;
  opts.clique_cap = a.clique_cap;
  const std::size_t omega = clique_number_exact(system, a.clique_cap);
  opts.omega = omega;
  const auto w = static_cast<std::int64_t>(omega);
  if (a.profile == "custom") {
    if (!a.quota || !a.budget || !a.palette) {
      err << "error: --profile custom needs --quota, --budget and --palette\n";
      return kUsageError;
    }
    opts.config = AugmentConfig::make_custom(w, *a.quota, *a.budget, *a.palette);
  } else if (a.quota || a.budget || a.palette) {
    err << "error: --quota/--budget/--palette require --profile custom\n";
    return kUsageError;
  } else if (omega >= 2) {
    if (a.profile == "default") opts.config = AugmentConfig::make_default(w);
    if (a.profile == "omega2") opts.config = AugmentConfig::make_omega2();
  }
  if (a.trace) {
    opts.on_step = [&err](const StepRecord& rec) { err << step_to_json(rec).dump() << "\n"; };
  }
  const auto result = color_system(system, opts);
  const auto report = verify_result(result);
  if (!report.passed) {
    err << report_to_json(report).dump(2) << "\n";
    return kVerificationFailed;
  }
  emit(out, a.output, coloring_to_json(result).dump(2) + "\n");
  return kOk;
}

inline int do_verify(const VerifyArgs& a, std::ostream& out) {
  const auto system = system_from_json(read_json_file(a.input));
  const auto file = coloring_from_json(read_json_file(a.coloring));
  const std::size_t omega = clique_number_exact(system, a.clique_cap);

  VerificationReport report;
  const auto finals = file.coloring.final_colors();
  report.merge(verify_proper(system, finals));
  if (!file.assignment) {
    report.add("pillar_assignment", false, "coloring file has no embedded pillar assignment");
  } else {
    try {
      const PillarAssignmentState state(system, file.assignment->pillars);
      report.add("assignment_matches", state.assignment() == file.assignment->assignment,
                 "stored assignment differs from the recomputed one");
      report.merge(verify_all(state, file.coloring, omega));
    } catch (const Error& e) {
      report.add("pillar_assignment", false, e.what());
    }
  }
  out << report_to_json(report).dump(2) << "\n";
  return report.passed ? kOk : kVerificationFailed;
}

inline int do_oracle(const OracleArgs& a, std::ostream& out) {
  const auto system = system_from_json(read_json_file(a.input));
  json result = {{"oracle", a.kind}};
  if (a.kind == "clique") {
    const auto clique = max_clique(system, a.cap ? a.cap : kDefaultCliqueCap);
    result["omega"] = clique.size();
    result["members"] = clique;
  } else if (a.kind == "chromatic") {
    result["chi"] = chromatic_number_exact(system, a.cap ? a.cap : kDefaultChromaticCap);
  } else {
    const auto points = parse_positions(a.pillars);
    const Position p1(Rational::parse(a.p1));
    const Position p2(Rational::parse(a.p2));
    result["p_degree"] = p_degree(system, points, p1, p2);
    result["p_degree_oracle"] = p_degree_oracle(system, points, p1, p2);
  }
  out << result.dump(2) << "\n";
  return kOk;
}

inline int do_stats(const std::string& input, std::ostream& out) {
  const auto system = system_from_json(read_json_file(input));
  const OverlapGraph g(system);
  out << json{{"n", system.size()},
              {"omega", clique_number_exact(system)},
              {"edges", g.edge_count()},
              {"components", g.component_count()}}
             .dump(2)
      << "\n";
  return kOk;
}

inline int do_export(const ExportArgs& a, std::ostream& out) {
  const auto system = system_from_json(read_json_file(a.input));
  std::vector<int> colors;
  std::vector<Pillar> pillars;
  if (!a.coloring.empty()) {
    const auto file = coloring_from_json(read_json_file(a.coloring));
    colors = file.coloring.final_colors();
    if (file.assignment) pillars = file.assignment->pillars;
  }
  emit(out, a.output, export_svg(system, colors, pillars));
  return kOk;
}

inline int do_corpus(const CorpusArgs& a, std::ostream& out) {
  if (a.nmin > a.nmax) throw Error("--nmin must not exceed --nmax");
  CorpusOptions opt{a.count, a.nmin, a.nmax, a.seed, parse_model(a.model), a.threads};
  const auto summary = run_corpus(opt);
  json rows = json::array();
  std::size_t worst_final = 0;
  for (const auto& inst : summary.instances) {
    rows.push_back({{"index", inst.index},
                    {"seed", inst.seed},
                    {"n", inst.n},
                    {"omega", inst.omega},
                    {"pillar_colors", inst.pillar_colors},
                    {"final_colors", inst.final_colors},
                    {"steps", inst.steps},
                    {"verified", inst.verified},
                    {"step_violations", inst.step_violations},
                    {"error", inst.error},
                    {"millis", inst.millis}});
    worst_final = std::max(worst_final, inst.final_colors);
  }
  const json doc = {{"count", summary.instances.size()},
                    {"passed", summary.passed()},
                    {"failed", summary.instances.size() - summary.passed()},
                    {"max_final_colors", worst_final},
                    {"seconds", summary.seconds},
                    {"instances", rows}};
  emit(out, a.output, doc.dump(2) + "\n");
  return summary.passed() == summary.instances.size() ? kOk : kVerificationFailed;
}

} // namespace detail

/// Entry point shared by the executable and the tests.
/// Exit codes: 0 success, 1 verification failure, 2 usage or IO error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Color circle graphs given as interval systems with at most 7w^2 colors",
               "circlecolor"};
  app.require_subcommand(1);

  detail::GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an interval-system/v1 instance");
  gen_cmd->add_option("--model", gen.model, "uniform_matching|crossing_clique|nested_chain|blocks")
      ->check(CLI::IsMember({"uniform_matching", "crossing_clique", "nested_chain", "blocks"}));
  gen_cmd->add_option("--n", gen.n, "Number of intervals (clique size for crossing_clique)");
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  detail::ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Color an interval system");
  color_cmd->add_option("-i,--input", color.input, "interval-system/v1 file")->required();
  color_cmd->add_option("-o,--output", color.output, "coloring/v1 output (default stdout)");
  color_cmd->add_option("--profile", color.profile, "default|omega2|custom")
      ->check(CLI::IsMember({"default", "omega2", "custom"}));
  color_cmd->add_option("--quota", color.quota, "Spacing quota Q (custom profile)");
  color_cmd->add_option("--budget", color.budget, "Degree budget B (custom profile)");
  color_cmd->add_option("--palette", color.palette, "Palette size (custom profile)");
  color_cmd->add_flag("--trace", color.trace, "One JSON line per augmentation step on stderr");
  color_cmd->add_option("--clique-cap", color.clique_cap, "Size cap for the clique oracle");

  detail::VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring and its certificates");
  verify_cmd->add_option("-i,--input", verify.input, "interval-system/v1 file")->required();
  verify_cmd->add_option("-c,--coloring", verify.coloring, "coloring/v1 file")->required();
  verify_cmd->add_option("--clique-cap", verify.clique_cap, "Size cap for the clique oracle");

  detail::OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run a brute-force reference");
  oracle_cmd->add_option("kind", oracle.kind, "clique|chromatic|pdegree")
      ->required()
      ->check(CLI::IsMember({"clique", "chromatic", "pdegree"}));
  oracle_cmd->add_option("-i,--input", oracle.input, "interval-system/v1 file")->required();
  oracle_cmd->add_option("--pillars", oracle.pillars, "Comma-separated pillar set, e.g. 3/14,9/14");
  oracle_cmd->add_option("--p1", oracle.p1, "Left point of the pair (num/den)");
  oracle_cmd->add_option("--p2", oracle.p2, "Right point of the pair (num/den)");
  oracle_cmd->add_option("--cap", oracle.cap, "Size cap override");

  std::string stats_input;
  auto* stats_cmd = app.add_subcommand("stats", "n, clique number, edges, components");
  stats_cmd->add_option("-i,--input", stats_input, "interval-system/v1 file")->required();

  detail::ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "Export a chord diagram");
  export_cmd->add_flag("--svg", exp.svg, "SVG output")->required();
  export_cmd->add_option("-i,--input", exp.input, "interval-system/v1 file")->required();
  export_cmd->add_option("-c,--coloring", exp.coloring, "coloring/v1 file");
  export_cmd->add_option("-o,--output", exp.output, "SVG file (default stdout)");

  detail::CorpusArgs corpus;
  auto* corpus_cmd = app.add_subcommand("corpus", "Generate, color and verify a batch");
  corpus_cmd->add_option("--count", corpus.count, "Number of instances");
  corpus_cmd->add_option("--nmin", corpus.nmin, "Smallest instance size");
  corpus_cmd->add_option("--nmax", corpus.nmax, "Largest instance size");
  corpus_cmd->add_option("--seed", corpus.seed, "Base seed");
  corpus_cmd->add_option("--model", corpus.model, "Generator model")
      ->check(CLI::IsMember({"uniform_matching", "crossing_clique", "nested_chain", "blocks"}));
  corpus_cmd->add_option("--threads", corpus.threads, "Worker threads (0 = all cores)");
  corpus_cmd->add_option("-o,--output", corpus.output, "Summary JSON (default stdout)");

  std::vector<std::string> storage{"circlecolor"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*gen_cmd) return detail::do_gen(gen, out);
    if (*color_cmd) return detail::do_color(color, out, err);
    if (*verify_cmd) return detail::do_verify(verify, out);
    if (*oracle_cmd) return detail::do_oracle(oracle, out);
    if (*stats_cmd) return detail::do_stats(stats_input, out);
    if (*export_cmd) return detail::do_export(exp, out);
    if (*corpus_cmd) return detail::do_corpus(corpus, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

} // namespace circlecolor::cli
