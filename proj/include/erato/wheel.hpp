// wheel.hpp
// First offsets and the mod-15 wheel.
//
// Global odd-index space: index i stands for the odd number 2*i + 1.
// The residues of i mod 15 whose numbers are coprime to 15 form
// W' = {0, 3, 5, 6, 8, 9, 11, 14}; everything else is hit by 3 or 5.
// A prime p coprime to 15 visits its admissible multiples by stepping
// q += delta[s]*p with s cycling through the 8 classes.

#pragma once
#include <array>
#include <cstdint>

#include "erato/params.hpp"

namespace erato {

struct WheelTables {
  static constexpr unsigned w = 15;
  static constexpr unsigned phi = 8;
  std::array<uint8_t, 8> residues;   // w_s, ascending
  std::array<uint8_t, 8> deltas;     // index gap to the next class, times 1 (scale by p)
  std::array<uint8_t, 15> inv;       // multiplicative inverse mod 15 (0 where undefined)
  std::array<int8_t, 15> index_of;   // residue -> s, -1 outside W'
};

// Built once; residues/deltas are computed and cross-checked against the
// closed-form values.
const WheelTables& wheel_tables();

// Unique q in [0, p) with p | 2*(f*2^l + q) + 1, via the remainder of
// f*2^(l+1) mod p. p odd, l <= 30.
uint32_t first_offset(uint32_t p, unsigned l, uint64_t f);

// Wheel class s of the global index i (i = f*2^l + q), i.e. the class of the
// cofactor index (i - (p-1)/2) / p mod 15. Throws NOT_ADMISSIBLE when
// i mod 15 is outside W'. Requires gcd(p, 15) = 1.
unsigned wheel_index(uint32_t p, uint64_t i);

struct WheelAlignment {
  uint32_t q;  // q0 + m*p, smallest m >= 0 landing on an admissible index
  unsigned s;  // wheel class of that index
};

// Advances q0 = first_offset(p, l, f) to the first admissible multiple.
// m <= 14 always; for wheel-class primes (16*p <= 2^l) the result keeps
// q < 2^l.
WheelAlignment wheel_align(uint32_t p, uint32_t q0, unsigned l, uint64_t f);

}  // namespace erato
