// params.hpp
// Run geometry and the bit-index <-> odd-number mapping.
//
// A run is described by the triple (l, f, n):
//   l  log2 of the segment size in bits
//   f  index of the first segment
//   n  number of segments
// The table has n*2^l bits; bit j stands for the odd number 2*(f*2^l + j) + 1,
// covering the interval [u, v] with u = f*2^(l+1) + 1 and v = (f+n)*2^(l+1).

#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace erato {

enum class errc {
  l_out_of_range,
  f_zero_or_overlap,
  n_out_of_range,
  overflow,
  index_out_of_range,
  not_admissible,
  alloc_limit,
  limit_too_large,
  range_too_large,
  io_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

struct SieveParams {
  unsigned l = 0;
  uint64_t f = 0;
  uint64_t n = 0;
  uint64_t u = 0;  // first represented number, f*2^(l+1) + 1
  uint64_t v = 0;  // last number covered, (f+n)*2^(l+1)

  uint64_t segment_bits() const { return uint64_t{1} << l; }
  uint64_t table_bits() const { return n << l; }
  uint64_t segment_bytes() const { return uint64_t{1} << (l - 3); }
  uint64_t table_bytes() const { return n << (l - 3); }
  // Global odd-index of table bit 0; bit j stands for 2*(first_index()+j)+1.
  uint64_t first_index() const { return f << l; }
};

inline constexpr unsigned kMinLogSeg = 10;
inline constexpr unsigned kMinLogSegTest = 4;
inline constexpr unsigned kMaxLogSeg = 30;

// Checks the (l, f, n) triple and derives the interval. Requirements:
//   - l in [10, 30] (test mode lowers the floor to 4)
//   - n >= 1, v < 2^64
//   - u^2 > v, so every base prime lies strictly below the interval
SieveParams validate_params(unsigned l, uint64_t f, uint64_t n, bool test_mode = false);

// The odd number represented by table bit j.
uint64_t index_to_number(const SieveParams& p, uint64_t j);
// Inverse of index_to_number; rejects even numbers and values outside [u, v].
uint64_t number_to_index(const SieveParams& p, uint64_t value);

// Decomposition j = t*2^l + q of a global bit index into segment index and
// in-segment offset; unique by construction.
struct TableIndex {
  uint64_t t;
  uint64_t q;
};
TableIndex decompose_index(const SieveParams& p, uint64_t j);

// First-segment index f such that the interval midpoint approximates 10^e:
// f = floor(10^e / 2^(l+1)) - floor(n/2). Validates the resulting triple.
uint64_t params_from_midpoint(unsigned e, unsigned l, uint64_t n, bool test_mode = false);

// Integer square root, floor(sqrt(x)).
uint64_t isqrt(uint64_t x);

}  // namespace erato
