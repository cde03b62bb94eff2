#include "rabench/gf2_stream.hpp"

#include <array>

namespace rabench {

namespace {

// Column-major 64x64 bit matrix: column i is the image of basis state 1<<i.
using StepMatrix = std::array<uint64_t, 64>;

uint64_t apply(const StepMatrix& m, uint64_t v) {
  uint64_t out = 0;
  while (v) {
    int bit = __builtin_ctzll(v);
    out ^= m[bit];
    v &= v - 1;
  }
  return out;
}

StepMatrix compose(const StepMatrix& outer, const StepMatrix& inner) {
  StepMatrix out;
  for (int i = 0; i < 64; ++i) out[i] = apply(outer, inner[i]);
  return out;
}

// step_powers()[j] is the step matrix raised to 2^j.
const std::array<StepMatrix, 64>& step_powers() {
  static const std::array<StepMatrix, 64> powers = [] {
    std::array<StepMatrix, 64> p{};
    for (int i = 0; i < 64; ++i) {
      Gf2Stream s{uint64_t{1} << i, 0};
      p[0][i] = s.next();
    }
    for (int j = 1; j < 64; ++j) p[j] = compose(p[j - 1], p[j - 1]);
    return p;
  }();
  return powers;
}

}  // namespace

Gf2Stream gf2_seek(uint64_t start_index) {
  const auto& powers = step_powers();
  uint64_t v = Gf2Stream::kSeed;
  uint64_t k = start_index;
  while (k) {
    int bit = __builtin_ctzll(k);
    v = apply(powers[bit], v);
    k &= k - 1;
  }
  return Gf2Stream{v, start_index};
}

}  // namespace rabench
