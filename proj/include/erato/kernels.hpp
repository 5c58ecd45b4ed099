// kernels.hpp
// Per-segment marking kernels and the circle/bucket state transition.
//
// Kernel order inside a segment is masks -> wheel-medium -> dense-medium ->
// large. All marks are idempotent bit ORs, so the order only matters for
// reproducible instrumentation.

#pragma once
#include <span>
#include <string>

#include "erato/base.hpp"
#include "erato/detail/large_kernel.hpp"
#include "erato/masks.hpp"
#include "erato/segment.hpp"
#include "erato/simd.hpp"

namespace erato {

// Sets every bit whose number has a generating-prime divisor, then advances
// the masks' phases to segment t+1.
void apply_small_masks(SegmentBuffer& seg, std::vector<SmallPrimeMask>& masks,
                       const simd::KernelSet& kernels = simd::active_kernels());

// Wheel-stepped marking: each pair marks q, q + delta_s*p, ... while < 2^l
// and leaves with the offset and wheel index for segment t+1.
void sieve_medium_wheel(SegmentBuffer& seg, std::span<WheelPair> pairs);

// Fixed-count marking for primes with floor(2^l/p) = k (1 <= k <= 15):
// k unconditional steps plus one predicated step, no data-dependent branch.
// Entering offsets satisfy q < 2^l - (k-1)*p (q < p in steady state), which
// makes the mark count k or k+1 and the bitmap identical to the naive loop.
void sieve_medium_dense(SegmentBuffer& seg, unsigned k, std::span<PrimeOffsetPair> pairs);

struct LargeAdvance {
  uint32_t skip;   // segments until this prime marks again: k or k+1
  uint32_t q_new;  // offset within that segment
};

// One step of a large prime: q' = q + p lands skip = k segments ahead when
// q' < (k+1)*2^l, else k+1 ahead.
constexpr LargeAdvance advance_pair_large(uint32_t p, uint32_t q, uint32_t k, unsigned l) {
  const uint64_t qq = (uint64_t)q + p;
  if (qq < ((uint64_t)(k + 1) << l)) return {k, (uint32_t)(qq - ((uint64_t)k << l))};
  return {k + 1, (uint32_t)(qq - ((uint64_t)(k + 1) << l))};
}

// Marks with every pair in every circle's current bucket and moves the
// CircleSet from state t to t+1. Production path: in-place two-ended
// processing with batch-unrolled loop cores.
void sieve_large(SegmentBuffer& seg, CircleSet& cs, uint64_t t);

// Variants for differential tests.
struct LargeVariant {
  bool two_ended = true;  // false: copy-out single-ended reference
  bool unroll = true;     // batched loop cores (two-ended only)
};
void sieve_large_variant(SegmentBuffer& seg, CircleSet& cs, uint64_t t, LargeVariant v);

// Instrumented flavor: calls onmark(p, q) for every mark the large path
// makes (q is the in-segment offset).
template <class OnMark>
void sieve_large_observed(SegmentBuffer& seg, CircleSet& cs, uint64_t t, OnMark&& onmark) {
  (void)t;
  for (uint64_t k = 1; k <= cs.K; ++k)
    detail::sieve_circle_twoended<true>(seg, cs, k, onmark);
}

// Structural check for state t: prime ranges per circle, offset bounds,
// boundary monotonicity, and divisibility of every pair in the segment its
// bucket says it is due. Reports the first violation.
struct CircleValidation {
  bool ok = true;
  uint64_t circle = 0;
  uint64_t bucket = 0;
  uint64_t pair_index = 0;
  std::string message;
};
CircleValidation validate_circle_invariants(const CircleSet& cs, const SieveParams& params,
                                            uint64_t t);

}  // namespace erato
