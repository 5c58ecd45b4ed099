// NEON variants of the word kernels (aarch64 baseline, no runtime probe
// needed). Bit-for-bit equivalent to the scalar versions in simd.cpp.

#include <arm_neon.h>

#include "erato/simd.hpp"

namespace erato::simd {

namespace detail {
void or_tiles_scalar(uint64_t*, size_t, MaskCursor*, size_t);
}  // namespace detail

namespace {

void or_tiles_neon(uint64_t* words, size_t nwords, MaskCursor* cur, size_t ncur) {
  size_t w = 0;
  for (; w + 2 <= nwords; w += 2) {
    uint64x2_t acc = vdupq_n_u64(0);
    for (size_t i = 0; i < ncur; ++i) {
      acc = vorrq_u64(acc, vld1q_u64(cur[i].tile + cur[i].pos));
      cur[i].pos += 2;
      if (cur[i].pos >= cur[i].modulus) cur[i].pos -= cur[i].modulus;
    }
    vst1q_u64(words + w, vorrq_u64(vld1q_u64(words + w), acc));
  }
  if (w < nwords) detail::or_tiles_scalar(words + w, nwords - w, cur, ncur);
}

uint64_t count_zeros_neon(const uint64_t* words, uint64_t nbits) {
  const uint64_t full = nbits / 64;
  uint64_t w = 0;
  uint64_t ones = 0;
  for (; w + 2 <= full; w += 2) {
    uint8x16_t bytes = vreinterpretq_u8_u64(vld1q_u64(words + w));
    ones += vaddvq_u8(vcntq_u8(bytes));
  }
  for (; w < full; ++w) ones += (uint64_t)__builtin_popcountll(words[w]);
  const unsigned rem = nbits & 63;
  if (rem) ones += (uint64_t)__builtin_popcountll(words[full] & ((uint64_t{1} << rem) - 1));
  return nbits - ones;
}

}  // namespace

const KernelSet* neon_kernels() {
  static const KernelSet k{or_tiles_neon, count_zeros_neon, "neon"};
  return &k;
}

}  // namespace erato::simd
