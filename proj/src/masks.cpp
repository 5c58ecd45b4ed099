#include "erato/masks.hpp"

#include <cassert>

namespace erato {

namespace detail {

SmallPrimeMask build_mask(const std::vector<uint32_t>& primes, uint32_t modulus,
                          uint64_t start_index) {
  SmallPrimeMask m;
  m.modulus = modulus;
  m.primes = primes;
  m.pattern.assign((modulus + 63) / 64, 0);
  for (uint32_t p : primes) {
    assert(modulus % p == 0);
    for (uint32_t x = (p - 1) / 2; x < modulus; x += p)
      m.pattern[x >> 6] |= uint64_t{1} << (x & 63);
  }

  // windows of the infinite pattern in 64-bit steps; gcd(64, M) = 1 for odd M,
  // so the step walks through all M phases before repeating
  m.tile.resize(modulus + 3);
  for (uint32_t c = 0; c < modulus + 3; ++c) {
    const uint64_t r = (uint64_t)64 * c % modulus;
    uint64_t window = 0;
    for (unsigned b = 0; b < 64; ++b)
      if (m.pattern_bit(r + b)) window |= uint64_t{1} << b;
    m.tile[c] = window;
  }

  for (uint32_t c = 1; c < modulus; ++c)
    if (64 * c % modulus == 1) m.inv64 = c;
  assert(m.inv64 != 0);

  m.phase = start_index % modulus;
  return m;
}

}  // namespace detail

std::vector<SmallPrimeMask> small_prime_masks(const SieveParams& params) {
  const uint64_t start = params.first_index();
  std::vector<SmallPrimeMask> out;
  out.push_back(detail::build_mask({3, 11}, 33, start));
  out.push_back(detail::build_mask({5, 7}, 35, start));
  for (uint32_t p : {13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61})
    if (p < params.u) out.push_back(detail::build_mask({p}, p, start));
  return out;
}

}  // namespace erato
