#include "erato/base.hpp"

#include <algorithm>
#include <cassert>

#include "erato/oracle.hpp"
#include "erato/wheel.hpp"

namespace erato {

Classification classify_prime(uint32_t p, unsigned l) {
  const uint64_t seg = uint64_t{1} << l;
  if (p > seg) return {PrimeClass::large, (uint32_t)(p >> l)};
  if (p <= 61) return {PrimeClass::small, 0};
  if ((uint64_t)p << 4 <= seg) return {PrimeClass::wheel_medium, 0};
  return {PrimeClass::dense_medium, (uint32_t)(seg / p)};
}

BaseTable build_base(const SieveParams& params, uint64_t max_pairs) {
  BaseTable base;
  base.masks = small_prime_masks(params);

  const auto primes = oracle::simple_sieve(isqrt(params.v));
  if (primes.size() > max_pairs)
    throw Error(errc::alloc_limit,
                std::to_string(primes.size()) + " base primes exceed cap " +
                    std::to_string(max_pairs));
  base.large.reserve(primes.size());  // ~sqrt(v)/ln sqrt(v) pairs, mostly large

  for (uint32_t p : primes) {
    if (p == 2) continue;
    base.max_prime = p;
    const auto cl = classify_prime(p, params.l);
    switch (cl.cls) {
      case PrimeClass::small:
        break;  // covered by masks
      case PrimeClass::wheel_medium: {
        const auto a = wheel_align(p, first_offset(p, params.l, params.f), params.l, params.f);
        assert(a.q < params.segment_bits());
        base.wheel_medium.push_back(WheelPair::make(p, a.s, a.q));
        break;
      }
      case PrimeClass::dense_medium:
        base.dense_medium[cl.k].push_back({p, first_offset(p, params.l, params.f)});
        break;
      case PrimeClass::large:
        base.large.push_back({p, first_offset(p, params.l, params.f)});
        break;
    }
  }
  base.K = base.max_prime > 2 ? (uint64_t)base.max_prime >> params.l : 0;
  return base;
}

CircleSet init_circles(BaseTable& base, const SieveParams& params) {
  CircleSet cs;
  cs.l = params.l;
  cs.K = base.K;
  cs.pairs = std::move(base.large);
  cs.circles.resize(cs.K + 1);
  cs.starts.assign((cs.K + 1) * (cs.K + 2) / 2, 0);

  const unsigned l = params.l;
  const uint64_t seg_mask = params.segment_bits() - 1;

  cs.circles[0] = {0, 0, 0};
  uint64_t i = 0;
  for (uint64_t k = 1; k <= cs.K; ++k) {
    const uint64_t begin = i;
    while (i < cs.pairs.size() && (cs.pairs[i].p >> l) == k) ++i;
    const uint64_t end = i;

    // ascending q' makes the buckets contiguous slices
    std::sort(cs.pairs.begin() + begin, cs.pairs.begin() + end,
              [](const PrimeOffsetPair& a, const PrimeOffsetPair& b) { return a.q < b.q; });

    const uint64_t bb = CircleSet::bucket_base(k);
    uint64_t j = begin;
    for (uint64_t d = 0; d <= k; ++d) {
      while (j < end && (cs.pairs[j].q >> l) < d) ++j;
      cs.starts[bb + d] = j;
    }
    for (uint64_t x = begin; x < end; ++x) cs.pairs[x].q &= (uint32_t)seg_mask;

    cs.circles[k] = {end, 0, (uint32_t)k};
  }
  assert(i == cs.pairs.size());
  return cs;
}

}  // namespace erato
