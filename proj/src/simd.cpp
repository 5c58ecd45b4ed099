#include "erato/simd.hpp"

namespace erato::simd {

namespace detail {

void or_tiles_scalar(uint64_t* words, size_t nwords, MaskCursor* cur, size_t ncur) {
  for (size_t w = 0; w < nwords; ++w) {
    uint64_t acc = 0;
    for (size_t i = 0; i < ncur; ++i) {
      acc |= cur[i].tile[cur[i].pos];
      cur[i].pos = cur[i].pos + 1 == cur[i].modulus ? 0 : cur[i].pos + 1;
    }
    words[w] |= acc;
  }
}

uint64_t count_zeros_scalar(const uint64_t* words, uint64_t nbits) {
  uint64_t ones = 0;
  const uint64_t full = nbits / 64;
  for (uint64_t w = 0; w < full; ++w) ones += (uint64_t)__builtin_popcountll(words[w]);
  const unsigned rem = nbits & 63;
  if (rem) ones += (uint64_t)__builtin_popcountll(words[full] & ((uint64_t{1} << rem) - 1));
  return nbits - ones;
}

}  // namespace detail

#ifdef ERATO_WITH_AVX2
const KernelSet* avx2_kernels();  // simd_avx2.cpp; nullptr if the CPU lacks AVX2
#endif
#ifdef ERATO_WITH_NEON
const KernelSet* neon_kernels();  // simd_neon.cpp
#endif

const KernelSet& scalar_kernels() {
  static const KernelSet k{detail::or_tiles_scalar, detail::count_zeros_scalar, "scalar"};
  return k;
}

const KernelSet* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar_kernels();
    case Isa::avx2:
#ifdef ERATO_WITH_AVX2
      return avx2_kernels();
#else
      return nullptr;
#endif
    case Isa::neon:
#ifdef ERATO_WITH_NEON
      return neon_kernels();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelSet& active_kernels() {
  static const KernelSet* best = [] {
    if (const KernelSet* k = kernels_for(Isa::avx2)) return k;
    if (const KernelSet* k = kernels_for(Isa::neon)) return k;
    return &scalar_kernels();
  }();
  return *best;
}

}  // namespace erato::simd
