#include "erato/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace erato::oracle {

std::vector<uint32_t> simple_sieve(uint64_t limit) {
  if (limit > (uint64_t{1} << 32))
    throw Error(errc::limit_too_large, "simple_sieve limit " + std::to_string(limit));
  std::vector<uint32_t> primes;
  if (limit < 2) return primes;

  std::vector<uint8_t> composite(limit + 1, 0);
  for (uint64_t i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;

  primes.reserve(limit > 100 ? (size_t)((double)limit / std::log((double)limit) * 1.15) : 32);
  for (uint64_t i = 2; i <= limit; ++i)
    if (!composite[i]) primes.push_back((uint32_t)i);
  return primes;
}

OracleTable oracle_bit_table(const SieveParams& params) {
  if (params.v > (uint64_t{1} << 40))
    throw Error(errc::range_too_large, "oracle table v " + std::to_string(params.v));

  OracleTable t;
  t.params = params;
  t.bytes.assign(params.table_bytes(), 0);

  const uint64_t u = params.u;
  const uint64_t v = params.v;
  for (uint32_t p : simple_sieve(isqrt(v))) {
    if (p == 2) continue;  // even numbers are not represented
    // first odd multiple c*p >= u; c >= 3 is guaranteed by u > sqrt(v) >= p
    uint64_t c = (u + p - 1) / p;
    if (c % 2 == 0) ++c;
    for (uint64_t m = c * p; m <= v; m += 2 * (uint64_t)p) {
      uint64_t j = (m - u) / 2;
      t.bytes[j >> 3] |= (uint8_t)(1u << (j & 7));
    }
  }
  return t;
}

uint64_t prime_count(uint64_t a, uint64_t b) {
  if (b > (uint64_t{1} << 40))
    throw Error(errc::range_too_large, "prime_count bound " + std::to_string(b));
  if (b < 2 || b < a) return 0;
  a = std::max<uint64_t>(a, 2);

  const auto base = simple_sieve(isqrt(b));
  const uint64_t block = uint64_t{1} << 22;
  uint64_t count = 0;
  std::vector<uint8_t> comp;
  for (uint64_t lo = a; lo <= b; lo += block) {
    const uint64_t hi = std::min(b, lo + block - 1);
    comp.assign(hi - lo + 1, 0);
    for (uint64_t p : base) {
      uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (uint64_t m = start; m <= hi; m += p) comp[m - lo] = 1;
    }
    for (uint64_t i = 0; i <= hi - lo; ++i) count += !comp[i];
    if (hi == b) break;
  }
  return count;
}

}  // namespace erato::oracle
