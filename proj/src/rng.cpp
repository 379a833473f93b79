#include "bcl/rng.hpp"

#include <cmath>

#include "bcl/common.hpp"

namespace bcl {

namespace {

inline uint64_t mix64(uint64_t z) {
  // splitmix64 finalizer
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t keyed(uint64_t seed, uint64_t stream, uint64_t counter) {
  uint64_t h = mix64(seed);
  h = mix64(h ^ (stream * 0x9e3779b97f4a7c15ULL));
  h = mix64(h ^ counter);
  return h;
}

}  // namespace

double CounterRng::uniform(uint64_t counter) const {
  return double(keyed(seed, stream, counter) >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(uint64_t counter, double lo, double hi) const {
  return lo + (hi - lo) * uniform(counter);
}

double CounterRng::gaussian(uint64_t counter) const {
  double u1 = uniform(2 * counter);
  double u2 = uniform(2 * counter + 1);
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

uint64_t stream_id(const char* label, uint64_t index) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (const char* p = label; *p; ++p) {
    h ^= uint64_t(uint8_t(*p));
    h *= 1099511628211ULL;
  }
  return mix64(h ^ mix64(index));
}

Vec sphere_point(int dim, uint64_t seed, uint64_t stream, uint64_t index) {
  if (dim < 1) throw BadParameters("sphere_point: dim must be >= 1");
  CounterRng rng{seed, stream};
  Vec v(dim);
  for (uint64_t attempt = 0;; ++attempt) {
    for (int t = 0; t < dim; ++t)
      v[t] = rng.gaussian(index * uint64_t(dim + 1) * 4 + uint64_t(t) + attempt * 1000003ULL);
    double n = norm(v);
    if (n > 1e-8) {
      for (double& x : v) x /= n;
      return v;
    }
  }
}

std::vector<Vec> sample_sphere(int dim, int count, uint64_t seed) {
  if (dim < 1) throw BadParameters("sample_sphere: dim must be >= 1");
  if (count < 1) throw BadParameters("sample_sphere: count must be >= 1");
  std::vector<Vec> out;
  out.reserve(count);
  uint64_t s = stream_id("sample_sphere");
  for (int k = 0; k < count; ++k) out.push_back(sphere_point(dim, seed, s, uint64_t(k)));
  return out;
}

}  // namespace bcl
