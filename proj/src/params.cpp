#include "erato/params.hpp"

#include <cmath>

namespace erato {

const char* errc_name(errc c) {
  switch (c) {
    case errc::l_out_of_range: return "L_OUT_OF_RANGE";
    case errc::f_zero_or_overlap: return "F_ZERO_OR_OVERLAP";
    case errc::n_out_of_range: return "N_OUT_OF_RANGE";
    case errc::overflow: return "OVERFLOW";
    case errc::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case errc::not_admissible: return "NOT_ADMISSIBLE";
    case errc::alloc_limit: return "ALLOC_LIMIT";
    case errc::limit_too_large: return "LIMIT_TOO_LARGE";
    case errc::range_too_large: return "RANGE_TOO_LARGE";
    case errc::io_error: return "IO_ERROR";
  }
  return "UNKNOWN";
}

SieveParams validate_params(unsigned l, uint64_t f, uint64_t n, bool test_mode) {
  const unsigned lmin = test_mode ? kMinLogSegTest : kMinLogSeg;
  if (l < lmin || l > kMaxLogSeg)
    throw Error(errc::l_out_of_range,
                "l=" + std::to_string(l) + " outside [" + std::to_string(lmin) + ", " +
                    std::to_string(kMaxLogSeg) + "]");
  if (n == 0) throw Error(errc::n_out_of_range, "n must be >= 1");
  if (f > UINT64_MAX - n || (f + n) > (UINT64_MAX >> (l + 1)))
    throw Error(errc::overflow, "v = (f+n)*2^(l+1) exceeds 2^64");

  SieveParams p;
  p.l = l;
  p.f = f;
  p.n = n;
  p.u = (f << (l + 1)) + 1;
  p.v = (f + n) << (l + 1);
  // u^2 > v keeps all base primes below the interval (no p^2 start cases).
  if ((unsigned __int128)p.u * p.u <= p.v)
    throw Error(errc::f_zero_or_overlap,
                "interval overlaps its own base primes (need u^2 > v); f=" + std::to_string(f));
  return p;
}

uint64_t index_to_number(const SieveParams& p, uint64_t j) {
  if (j >= p.table_bits())
    throw Error(errc::index_out_of_range, "bit index " + std::to_string(j));
  return p.u + 2 * j;
}

uint64_t number_to_index(const SieveParams& p, uint64_t value) {
  if (value % 2 == 0 || value < p.u || value > p.v)
    throw Error(errc::index_out_of_range, "number " + std::to_string(value));
  return (value - p.u) / 2;
}

TableIndex decompose_index(const SieveParams& p, uint64_t j) {
  if (j >= p.table_bits())
    throw Error(errc::index_out_of_range, "bit index " + std::to_string(j));
  return {j >> p.l, j & (p.segment_bits() - 1)};
}

uint64_t params_from_midpoint(unsigned e, unsigned l, uint64_t n, bool test_mode) {
  if (e > 19) throw Error(errc::overflow, "10^" + std::to_string(e) + " exceeds 2^64");
  uint64_t pow10 = 1;
  for (unsigned i = 0; i < e; ++i) pow10 *= 10;
  if (l > kMaxLogSeg)
    throw Error(errc::l_out_of_range, "l=" + std::to_string(l));
  const uint64_t mid = pow10 >> (l + 1);
  if (mid <= n / 2)
    throw Error(errc::f_zero_or_overlap,
                "midpoint 10^" + std::to_string(e) + " below half the interval");
  const uint64_t f = mid - n / 2;
  validate_params(l, f, n, test_mode);
  return f;
}

uint64_t isqrt(uint64_t x) {
  uint64_t r = (uint64_t)std::sqrt((double)x);
  if (r > UINT32_MAX) r = UINT32_MAX;  // squares in 128 bits below
  while (r > 0 && (unsigned __int128)r * r > x) --r;
  while ((unsigned __int128)(r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace erato
