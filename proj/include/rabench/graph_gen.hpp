#pragma once

#include <array>
#include <cstdint>

#include "rabench/csr_graph.hpp"

namespace rabench {

struct GenConfig {
  unsigned scale = 10;        // |V| = 2^scale
  unsigned edge_factor = 8;   // |E| = edge_factor * 2^scale
  uint64_t seed = 1;
  std::array<double, 4> rmat_probs = {0.55, 0.1, 0.1, 0.25};
};

// Generates the scale-free input graph by recursive-quadrant sampling and
// materializes it as CSR. Deterministic for a fixed seed: each edge's draws
// come from a splittable generator keyed by (seed, edge index). Weights are
// uniform in [1, 2^scale]. Duplicates and self-loops are kept.
CsrGraph generate(const GenConfig& cfg);

}  // namespace rabench
