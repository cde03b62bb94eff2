#pragma once

#include <chrono>
#include <cstdint>

namespace rabench {

class Timer {
 public:
  void start() { begin_ = std::chrono::steady_clock::now(); }
  double seconds() const {
    auto d = std::chrono::steady_clock::now() - begin_;
    return std::chrono::duration<double>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point begin_ = std::chrono::steady_clock::now();
};

// Stateless-splittable 64-bit generator (Steele et al.); one instance per
// entity keyed by (seed, counter) gives reproducible draws independent of
// iteration order.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound), bound > 0.
  uint64_t next_below(uint64_t bound) { return next() % bound; }

 private:
  uint64_t state_;
};

}  // namespace rabench
