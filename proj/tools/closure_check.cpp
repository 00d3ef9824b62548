// Checks that the built-in constant profiles close: for every clique number in
// range the palette fits in 7w colors and the budget absorbs the quota plus the
// worst-case number of fresh colors per augmentation step.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "circlecolor/augment.hpp"

int main(int argc, char** argv) {
  using circlecolor::AugmentConfig;
  const std::int64_t max_omega = argc > 1 ? std::stoll(argv[1]) : 1'000'000;

  const auto w2 = circlecolor::closure(AugmentConfig::make_omega2());
  if (!w2.ok()) {
    std::cerr << "omega2 profile does not close at w = 2\n";
    return EXIT_FAILURE;
  }
  std::int64_t worst_slack = INT64_MAX;
  for (std::int64_t w = 3; w <= max_omega; ++w) {
    const auto cfg = AugmentConfig::make_default(w);
    const auto r = circlecolor::closure(cfg);
    if (!r.ok()) {
      std::cerr << "default profile fails at w = " << w << " (Q=" << cfg.quota
                << " B=" << cfg.budget << " palette=" << cfg.palette_size
                << " k_max=" << r.k_max << ")\n";
      return EXIT_FAILURE;
    }
    worst_slack = std::min(worst_slack, cfg.budget - cfg.quota - r.k_max);
  }
  std::cout << "closure ok: omega2 at w=2 (k_max=" << w2.k_max << "), default for 3 <= w <= "
            << max_omega << " (min budget slack " << worst_slack << ")\n";
  return EXIT_SUCCESS;
}
