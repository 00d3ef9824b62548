#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "interval_system.hpp"
#include "pillar_assignment.hpp"

namespace circlecolor {

struct BalancedOrderResult {
  std::vector<Pillar> ordered_pillars; // order_key ascending
  int k_used = 0;
};

/// Smallest k with m <= 2^k - 1, i.e. ceil(log2(m + 1)).
constexpr int colors_needed(std::size_t m) { return static_cast<int>(std::bit_width(m)); }

namespace detail {

inline void balanced_split(std::span<const Position> block, std::span<const int> palette,
                           int depth, BalancedOrderResult& out) {
  if (block.empty()) return;
  const std::size_t root = (block.size() + 1) / 2 - 1; // ceil(m/2)-th, 0-based
  const auto k = static_cast<int>(palette.size());
  out.ordered_pillars.push_back({block[root], palette[static_cast<std::size_t>(k - 1 - depth)],
                                 static_cast<std::int64_t>(out.ordered_pillars.size())});
  out.k_used = std::max(out.k_used, depth + 1);
  balanced_split(block.first(root), palette, depth + 1, out);
  balanced_split(block.subspan(root + 1), palette, depth + 1, out);
}

} // namespace detail

/// Orders and colors a pillar set so that it forms a pillar assignment of
/// maximum degree at most k = |palette|.
///
/// The median of each block comes first and takes the block's top color;
/// the left half is ordered before the right half, both after the median.
/// The pillar at recursion depth d gets palette[k-1-d].
inline BalancedOrderResult build_balanced(std::span<const Position> positions,
                                          std::span<const int> palette,
                                          const IntervalSystem& system) {
  if (positions.size() > (std::size_t{1} << std::min<std::size_t>(palette.size(), 62)) - 1) {
    throw PaletteTooSmall(std::to_string(positions.size()) + " pillars need more than " +
                          std::to_string(palette.size()) + " colors");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0 && !(positions[i - 1] < positions[i])) {
      throw InvalidPosition("balanced order needs strictly increasing positions");
    }
    if (system.is_endpoint(positions[i])) {
      throw InvalidPosition("position " + positions[i].to_string() + " is an endpoint");
    }
  }
  BalancedOrderResult out;
  out.ordered_pillars.reserve(positions.size());
  detail::balanced_split(positions, palette, 0, out);
  return out;
}

} // namespace circlecolor
