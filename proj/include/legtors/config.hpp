#pragma once

namespace legtors {

// Global numeric knobs. Values are read once per operation; callers that
// need reproducibility should set them before starting work.
struct Config {
  // Precision (bits) for complex embeddings, root isolation and algebraic
  // heights. Overridden by the LEGTORS_PRECISION_BITS environment variable.
  long numeric_precision_bits = 200;
  // Working precision for rational heights; 64 bits is plenty for the
  // 1e-12 tolerances used throughout.
  long height_precision_bits = 64;
  // Cap on division-polynomial memo tables.
  long divpoly_cache_cap = 256;
};

Config& config();

// Applies LEGTORS_PRECISION_BITS if set. Called by the CLI at startup.
void apply_env_overrides();

}  // namespace legtors
