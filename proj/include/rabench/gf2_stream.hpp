#pragma once

#include <cstdint>

namespace rabench {

// 64-bit GF(2) shift-register stream over the primitive polynomial
// x^63 + x^2 + x + 1. One step shifts left and, when the dropped bit 63 was
// set, folds it back through the low taps 0x7.
struct Gf2Stream {
  static constexpr uint64_t kTaps = 0x7;  // bit image of x^2 + x + 1
  static constexpr uint64_t kSeed = 1;

  uint64_t state = kSeed;
  uint64_t index = 0;

  uint64_t next() {
    state = (state << 1) ^ ((state >> 63) ? kTaps : 0);
    ++index;
    return state;
  }
};

// Stream positioned as if next() had been applied start_index times to the
// canonical seed. O(log start_index): the step map is linear over GF(2), so
// fast-forward multiplies the seed by precomputed powers of the step matrix.
Gf2Stream gf2_seek(uint64_t start_index);

}  // namespace rabench
