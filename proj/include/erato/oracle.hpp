// oracle.hpp
// Brute-force ground truth for tests and verification runs.
//
// Nothing here shares sieving machinery with the main path: no segments,
// no wheels, no masks, no buckets. Every multiple is found by direct
// stepping from a plainly computed start. Clarity over speed.

#pragma once
#include <cstdint>
#include <vector>

#include "erato/params.hpp"

namespace erato::oracle {

// Ascending primes <= limit via the textbook sieve. limit <= 2^32.
std::vector<uint32_t> simple_sieve(uint64_t limit);

// Same geometry and bit packing as the driver's output table:
// bit j of the payload (LSB-first within each byte) is 1 iff
// 2*(f*2^l + j) + 1 is composite.
struct OracleTable {
  SieveParams params;
  std::vector<uint8_t> bytes;

  bool bit(uint64_t j) const { return (bytes[j >> 3] >> (j & 7)) & 1; }
};

// Marks every odd multiple of every base prime in [u, v] by direct stepping.
// Desk scale only: v <= 2^40.
OracleTable oracle_bit_table(const SieveParams& params);

// Number of primes in [a, b] by a naive segmented count. b <= 2^40.
uint64_t prime_count(uint64_t a, uint64_t b);

}  // namespace erato::oracle
