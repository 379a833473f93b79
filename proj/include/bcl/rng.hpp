#pragma once

#include <cstdint>
#include <vector>

#include "bcl/linalg.hpp"

namespace bcl {

// Counter-based deterministic generator. Every draw is a pure function of
// (seed, stream, counter), so parallel sampling is reproducible and
// independent of worker count or call interleaving.
struct CounterRng {
  uint64_t seed = 0;
  uint64_t stream = 0;

  // uniform in [0, 1)
  double uniform(uint64_t counter) const;
  // uniform in [lo, hi)
  double uniform(uint64_t counter, double lo, double hi) const;
  // standard normal (Box-Muller; consumes counters 2k and 2k+1)
  double gaussian(uint64_t counter) const;
};

// Stable stream id derived from a label, for carving independent substreams.
uint64_t stream_id(const char* label, uint64_t index = 0);

// `count` points uniform on the unit sphere in R^dim; identical seed gives an
// identical sequence. dim >= 1 (dim == 1 yields points in {-1, +1}).
std::vector<Vec> sample_sphere(int dim, int count, uint64_t seed);

// Single unit vector, addressable by index (used by scan loops).
Vec sphere_point(int dim, uint64_t seed, uint64_t stream, uint64_t index);

}  // namespace bcl
