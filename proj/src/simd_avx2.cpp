// AVX2 variants of the word kernels. Compiled with -mavx2, selected at
// runtime only when cpuid reports AVX2. Must stay bit-for-bit equivalent to
// the scalar versions in simd.cpp (tests/test_simd.cpp enforces this).

#include <immintrin.h>

#include "erato/simd.hpp"

namespace erato::simd {

namespace detail {
void or_tiles_scalar(uint64_t*, size_t, MaskCursor*, size_t);
uint64_t count_zeros_scalar(const uint64_t*, uint64_t);
}  // namespace detail

namespace {

void or_tiles_avx2(uint64_t* words, size_t nwords, MaskCursor* cur, size_t ncur) {
  size_t w = 0;
  for (; w + 4 <= nwords; w += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (size_t i = 0; i < ncur; ++i) {
      // tiles carry 3 wrap entries, so 4 consecutive windows always load flat
      acc = _mm256_or_si256(
          acc, _mm256_loadu_si256((const __m256i*)(cur[i].tile + cur[i].pos)));
      cur[i].pos += 4;
      while (cur[i].pos >= cur[i].modulus) cur[i].pos -= cur[i].modulus;  // modulus 3 wraps twice
    }
    __m256i v = _mm256_loadu_si256((const __m256i*)(words + w));
    _mm256_storeu_si256((__m256i*)(words + w), _mm256_or_si256(v, acc));
  }
  if (w < nwords) detail::or_tiles_scalar(words + w, nwords - w, cur, ncur);
}

// Mula's pshufb nibble popcount over 256-bit lanes.
inline __m256i popcount256(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low));
  __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
  return _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256());
}

uint64_t count_zeros_avx2(const uint64_t* words, uint64_t nbits) {
  const uint64_t full = nbits / 64;
  uint64_t w = 0;
  __m256i sum = _mm256_setzero_si256();
  for (; w + 4 <= full; w += 4)
    sum = _mm256_add_epi64(sum, popcount256(_mm256_loadu_si256((const __m256i*)(words + w))));
  uint64_t lanes[4];
  _mm256_storeu_si256((__m256i*)lanes, sum);
  uint64_t ones = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; w < full; ++w) ones += (uint64_t)__builtin_popcountll(words[w]);
  const unsigned rem = nbits & 63;
  if (rem) ones += (uint64_t)__builtin_popcountll(words[full] & ((uint64_t{1} << rem) - 1));
  return nbits - ones;
}

}  // namespace

const KernelSet* avx2_kernels() {
  static const KernelSet k{or_tiles_avx2, count_zeros_avx2, "avx2"};
  return __builtin_cpu_supports("avx2") ? &k : nullptr;
}

}  // namespace erato::simd
