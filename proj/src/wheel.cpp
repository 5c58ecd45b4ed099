#include "erato/wheel.hpp"

#include <cassert>
#include <numeric>

namespace erato {

namespace {

WheelTables build_tables() {
  WheelTables t{};
  unsigned n = 0;
  for (uint8_t i = 0; i < 15; ++i) {
    t.index_of[i] = -1;
    if (std::gcd(2 * i + 1, 15) == 1) t.residues[n++] = i;
  }
  assert(n == WheelTables::phi);
  for (unsigned s = 0; s < 8; ++s) {
    t.deltas[s] = (uint8_t)((15 + t.residues[(s + 1) % 8] - t.residues[s]) % 15);
    t.index_of[t.residues[s]] = (int8_t)s;
  }
  for (uint8_t x = 1; x < 15; ++x)
    for (uint8_t y = 1; y < 15; ++y)
      if (x * y % 15 == 1) t.inv[x] = y;

  // closed-form cross-check
  constexpr std::array<uint8_t, 8> kResidues = {0, 3, 5, 6, 8, 9, 11, 14};
  constexpr std::array<uint8_t, 8> kDeltas = {3, 2, 1, 2, 1, 2, 3, 1};
  assert(t.residues == kResidues);
  assert(t.deltas == kDeltas);
  (void)kResidues;
  (void)kDeltas;
  return t;
}

}  // namespace

const WheelTables& wheel_tables() {
  static const WheelTables t = build_tables();
  return t;
}

uint32_t first_offset(uint32_t p, unsigned l, uint64_t f) {
  // f*2^(l+1) mod p without overflow: reduce f first (l+1 <= 31, p < 2^32)
  const uint64_t r = ((f % p) << (l + 1)) % p;
  return (uint32_t)(r % 2 == 0 ? (p - r - 1) / 2 : (2 * (uint64_t)p - r - 1) / 2);
}

unsigned wheel_index(uint32_t p, uint64_t i) {
  const WheelTables& wt = wheel_tables();
  const unsigned im = (unsigned)(i % 15);
  if (wt.index_of[im] < 0)
    throw Error(errc::not_admissible, "index class " + std::to_string(im));
  const unsigned x = (22 - im) % 15 * wt.inv[p % 15] % 15;  // (7 - i) * p^-1 mod 15
  const unsigned y = (22 - x) % 15;                         // 7 - x mod 15
  assert(wt.index_of[y] >= 0);
  return (unsigned)wt.index_of[y];
}

WheelAlignment wheel_align(uint32_t p, uint32_t q0, unsigned l, uint64_t f) {
  const WheelTables& wt = wheel_tables();
  uint64_t i = (f << l) + q0;
  uint64_t q = q0;
  while (wt.index_of[i % 15] < 0) {
    i += p;
    q += p;
  }
  return {(uint32_t)q, wheel_index(p, i)};
}

}  // namespace erato
