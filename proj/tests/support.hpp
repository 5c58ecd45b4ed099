// Shared test helpers: deterministic instance generators and an independent
// Miller-Rabin check (bases 2..37, exact for 64-bit inputs).

#pragma once
#include <cstdint>
#include <random>
#include <vector>

#include "erato/params.hpp"

namespace testsup {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((unsigned __int128)a * b % m);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline bool miller_rabin(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Random valid desk-scale instance: l in [lmin, lmax], n in [1, nmax],
// f sized so v stays below vcap (and u^2 > v holds).
inline erato::SieveParams random_instance(std::mt19937_64& rng, unsigned lmin, unsigned lmax,
                                          uint64_t nmax, uint64_t vcap) {
  for (;;) {
    const unsigned l = (unsigned)(lmin + rng() % (lmax - lmin + 1));
    const uint64_t n = 1 + rng() % nmax;
    const uint64_t fmax = (vcap >> (l + 1)) > n ? (vcap >> (l + 1)) - n : 1;
    const uint64_t f = 1 + rng() % fmax;
    try {
      return erato::validate_params(l, f, n, true);
    } catch (const erato::Error&) {
      continue;  // rare corner (tiny f with big n); redraw
    }
  }
}

// Instance guaranteed to have large primes (sqrt(v) > 2^l), for circle tests.
inline erato::SieveParams random_instance_with_circles(std::mt19937_64& rng, unsigned lmin,
                                                       unsigned lmax, uint64_t nmax) {
  for (;;) {
    const unsigned l = (unsigned)(lmin + rng() % (lmax - lmin + 1));
    const uint64_t n = 1 + rng() % nmax;
    // v > 2^(2l) forces K >= 1; keep v modest for the oracle
    const uint64_t fmin = (uint64_t{1} << (2 * l)) >> (l + 1);
    const uint64_t f = fmin + 1 + rng() % (3 * fmin + 1);
    try {
      auto p = erato::validate_params(l, f, n, true);
      if (erato::isqrt(p.v) > p.segment_bits()) return p;
    } catch (const erato::Error&) {
    }
  }
}

}  // namespace testsup
