#pragma once

#include <cstddef>
#include <cstdlib>

namespace sigmakit {

// Budgets for the enumeration-heavy operations. block_budget can be
// overridden with the SIGMA_KIT_BUDGET environment variable.
struct Config {
  std::size_t block_budget = 1'000'000;  // max blocks per closure level
  int group_bound = 10'000;              // max order for table-backed groups
  int inventory_bound = 512;             // normal subgroup enumeration bound
  int image_extra_depth = 8;             // verify-or-deepen headroom
  int max_level = 64;                    // component certification bound

  static Config defaults() {
    Config c;
    if (const char* env = std::getenv("SIGMA_KIT_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) c.block_budget = static_cast<std::size_t>(v);
    }
    return c;
  }
};

inline const Config& config() {
  static const Config c = Config::defaults();
  return c;
}

}  // namespace sigmakit
