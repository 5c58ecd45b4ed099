// simd.hpp
// Runtime-dispatched word kernels. Scalar reference versions always exist;
// AVX2 (x86-64) and NEON (aarch64) variants are selected at startup when the
// CPU supports them and are bit-for-bit equivalent to the scalar ones.

#pragma once
#include <cstddef>
#include <cstdint>

namespace erato::simd {

// Rolling read position inside a mask tile (see masks.hpp): consuming one
// 64-bit word advances pos by one entry, wrapping at modulus.
struct MaskCursor {
  const uint64_t* tile;
  uint32_t pos;
  uint32_t modulus;
};

// words[w] |= OR over all cursors' current windows, for w in [0, nwords);
// every cursor advances nwords entries (mod modulus).
using OrTilesFn = void (*)(uint64_t* words, size_t nwords, MaskCursor* cursors,
                           size_t ncursors);

// Number of zero bits among the first nbits of words.
using CountZerosFn = uint64_t (*)(const uint64_t* words, uint64_t nbits);

struct KernelSet {
  OrTilesFn or_tiles;
  CountZerosFn count_zeros;
  const char* name;
};

enum class Isa { scalar, avx2, neon };

// Kernel set for a specific ISA; nullptr if not compiled in or the CPU
// lacks it.
const KernelSet* kernels_for(Isa isa);

// Best supported set (avx2/neon when available, else scalar).
const KernelSet& active_kernels();

const KernelSet& scalar_kernels();

}  // namespace erato::simd
