#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "interval_system.hpp"

namespace circlecolor {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, then
/// the standard xor-shift-multiply finalizer. Fixed here so instances are
/// reproducible from (model, n, seed) in any language.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection of the biased low range.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

private:
  std::uint64_t state_;
};

enum class Model { UniformMatching, CrossingClique, NestedChain, Blocks };

inline std::string to_string(Model m) {
  switch (m) {
    case Model::UniformMatching: return "uniform_matching";
    case Model::CrossingClique: return "crossing_clique";
    case Model::NestedChain: return "nested_chain";
    case Model::Blocks: return "blocks";
  }
  return "uniform_matching";
}

inline Model parse_model(const std::string& name) {
  if (name == "uniform_matching") return Model::UniformMatching;
  if (name == "crossing_clique") return Model::CrossingClique;
  if (name == "nested_chain") return Model::NestedChain;
  if (name == "blocks") return Model::Blocks;
  throw Error("unknown generator model '" + name + "'");
}

struct GenSpec {
  Model model = Model::UniformMatching;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

using RawIntervals = std::vector<std::pair<std::int64_t, std::int64_t>>;

namespace detail {

// Fisher-Yates shuffle of 1..2n, consecutive entries paired.
inline RawIntervals random_matching(std::size_t n, SplitMix64& rng, std::int64_t offset) {
  std::vector<std::int64_t> pts(2 * n);
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<std::int64_t>(i) + 1 + offset;
  for (std::size_t i = pts.size(); i > 1; --i) {
    std::swap(pts[i - 1], pts[rng.below(i)]);
  }
  RawIntervals raw;
  raw.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto a = pts[2 * k];
    const auto b = pts[2 * k + 1];
    raw.emplace_back(std::min(a, b), std::max(a, b));
  }
  return raw;
}

} // namespace detail

inline IntervalSystem gen_uniform_matching(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return normalize(detail::random_matching(n, rng, 0));
}

/// (i, k+i) for i = 1..k: pairwise crossing, overlap graph K_k.
inline IntervalSystem gen_crossing_clique(std::size_t k) {
  RawIntervals raw;
  for (std::size_t i = 1; i <= k; ++i) {
    raw.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(k + i));
  }
  return normalize(raw);
}

/// (i, 2k+1-i): each interval nests inside the previous one.
inline IntervalSystem gen_nested_chain(std::size_t k) {
  RawIntervals raw;
  for (std::size_t i = 1; i <= k; ++i) {
    raw.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(2 * k + 1 - i));
  }
  return normalize(raw);
}

/// Side-by-side uniform matchings of 1..8 intervals each; several components.
inline IntervalSystem gen_blocks(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  RawIntervals raw;
  std::int64_t offset = 0;
  while (raw.size() < n) {
    const std::size_t size = std::min<std::size_t>(1 + rng.below(8), n - raw.size());
    const auto block = detail::random_matching(size, rng, offset);
    raw.insert(raw.end(), block.begin(), block.end());
    offset += static_cast<std::int64_t>(2 * size);
  }
  return normalize(raw);
}

inline IntervalSystem generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::UniformMatching: return gen_uniform_matching(spec.n, spec.seed);
    case Model::CrossingClique: return gen_crossing_clique(spec.n);
    case Model::NestedChain: return gen_nested_chain(spec.n);
    case Model::Blocks: return gen_blocks(spec.n, spec.seed);
  }
  return {};
}

} // namespace circlecolor
