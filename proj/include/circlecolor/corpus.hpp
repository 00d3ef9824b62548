#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "augment.hpp"
#include "generator.hpp"
#include "verify.hpp"

namespace circlecolor {

struct CorpusOptions {
  std::size_t count = 100;
  std::size_t nmin = 5;
  std::size_t nmax = 100;
  std::uint64_t seed = 1;
  Model model = Model::UniformMatching;
  std::size_t threads = 0; // 0 = hardware concurrency
};

struct CorpusInstance {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t omega = 0;
  std::size_t pillar_colors = 0;
  std::size_t final_colors = 0;
  std::size_t steps = 0;
  bool verified = false;
  std::vector<std::string> step_violations;
  std::string error;
  double millis = 0.0;

  bool ok() const { return verified && step_violations.empty() && error.empty(); }
};

struct CorpusSummary {
  std::vector<CorpusInstance> instances;
  double seconds = 0.0;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                  [](const auto& i) { return i.ok(); }));
  }
};

/// Instance i uses seed SplitMix64(seed + i).next() and n drawn from
/// [nmin, nmax] by the same generator.
inline GenSpec corpus_spec(const CorpusOptions& opt, std::size_t i) {
  SplitMix64 rng(opt.seed + i);
  GenSpec spec;
  spec.model = opt.model;
  spec.seed = rng.next();
  spec.n = opt.nmin + rng.below(opt.nmax - opt.nmin + 1);
  return spec;
}

/// Generate, color, verify one instance and collect step-invariant failures.
inline CorpusInstance run_instance(const GenSpec& spec, std::size_t index = 0) {
  CorpusInstance out;
  out.index = index;
  out.seed = spec.seed;
  out.n = spec.n;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto system = generate(spec);
    const auto result = color_system(system);
    out.omega = result.omega;
    out.pillar_colors = result.pillar_colors();
    out.final_colors = result.coloring.num_final_colors;
    out.steps = result.steps.size();
    out.verified = verify_result(result).passed;
    if (result.config) {
      for (const auto& rec : result.steps) {
        const auto v = check_step(rec, *result.config);
        out.step_violations.insert(out.step_violations.end(), v.begin(), v.end());
      }
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  return out;
}

/// Runs independent instances on a small thread pool; results are in index
/// order regardless of scheduling.
inline CorpusSummary run_corpus(const CorpusOptions& opt) {
  CorpusSummary summary;
  summary.instances.resize(opt.count);
  const auto start = std::chrono::steady_clock::now();
  std::size_t workers = opt.threads ? opt.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(opt.count, 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < opt.count; i = next++) {
        summary.instances[i] = run_instance(corpus_spec(opt, i), i);
      }
    });
  }
  for (auto& t : pool) t.join();
  summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

} // namespace circlecolor
