#include "legtors/config.hpp"

#include <cstdlib>
#include <string>

namespace legtors {

Config& config() {
  static Config cfg;
  return cfg;
}

void apply_env_overrides() {
  if (const char* s = std::getenv("LEGTORS_PRECISION_BITS")) {
    try {
      long bits = std::stol(s);
      if (bits >= 53 && bits <= 1 << 20) config().numeric_precision_bits = bits;
    } catch (...) {
      // ignore malformed values
    }
  }
}

}  // namespace legtors
