// masks.hpp
// Periodic composite masks for the primes 3..61.
//
// In global odd-index space, the multiples of p sit at indices
// i = (p-1)/2 (mod p). A mask of modulus M carries one period of those
// positions as bits; 3 and 11 share the period-33 mask, 5 and 7 the
// period-35 one, every prime 13..61 has its own.
//
// Application is word-wise: because the moduli are odd, the sequence of
// 64-bit windows of the infinite pattern repeats after exactly M words.
// The `tile` array holds those M windows in word-step order (entry c is
// the window starting at pattern offset 64*c mod M) plus 3 wrap entries
// so four consecutive windows can always be loaded straight.

#pragma once
#include <cstdint>
#include <vector>

#include "erato/params.hpp"

namespace erato {

struct SmallPrimeMask {
  uint32_t modulus = 0;
  std::vector<uint32_t> primes;    // generating primes
  std::vector<uint64_t> pattern;   // one period, LSB-first, ceil(M/64) words
  std::vector<uint64_t> tile;      // M + 3 windows in word-step order
  uint32_t inv64 = 0;              // 64^-1 mod M
  uint64_t phase = 0;              // pattern offset of the next segment's bit 0, < M

  bool pattern_bit(uint64_t x) const {
    x %= modulus;
    return (pattern[x >> 6] >> (x & 63)) & 1;
  }
  // tile entry index whose window starts at the current phase
  uint32_t cursor_start() const { return (uint32_t)(phase * inv64 % modulus); }
  void advance_phase(uint64_t segment_bits) { phase = (phase + segment_bits) % modulus; }
};

// Masks for segment 0 of the given run, phases set so application marks
// exactly the table bits with a generating-prime divisor. Primes >= u are
// left out (only possible in test mode with a tiny interval, where such a
// mask would mark the prime itself).
std::vector<SmallPrimeMask> small_prime_masks(const SieveParams& params);

namespace detail {
// start_index = global odd-index of table bit 0 (f * 2^l).
SmallPrimeMask build_mask(const std::vector<uint32_t>& primes, uint32_t modulus,
                          uint64_t start_index);
}  // namespace detail

}  // namespace erato
