#include "erato/kernels.hpp"

#include <cassert>

#include "erato/wheel.hpp"

namespace erato {

void apply_small_masks(SegmentBuffer& seg, std::vector<SmallPrimeMask>& masks,
                       const simd::KernelSet& kernels) {
  simd::MaskCursor cursors[16];
  assert(masks.size() <= 16);
  for (size_t i = 0; i < masks.size(); ++i)
    cursors[i] = {masks[i].tile.data(), masks[i].cursor_start(), masks[i].modulus};
  kernels.or_tiles(seg.words(), seg.word_count(), cursors, masks.size());
  for (auto& m : masks) m.advance_phase(seg.bits());
}

void sieve_medium_wheel(SegmentBuffer& seg, std::span<WheelPair> pairs) {
  const WheelTables& wt = wheel_tables();
  uint64_t* const words = seg.words();
  const uint64_t segbits = seg.bits();
  for (WheelPair& wp : pairs) {
    const uint32_t p = wp.p();
    unsigned s = wp.s();
    uint64_t step[8];
    for (unsigned j = 0; j < 8; ++j) step[j] = (uint64_t)wt.deltas[j] * p;
    uint64_t q = wp.q;
    while (q < segbits) {
      words[q >> 6] |= uint64_t{1} << (q & 63);
      q += step[s];
      s = (s + 1) & 7;
    }
    wp = WheelPair::make(p, s, (uint32_t)(q - segbits));
  }
}

namespace {

template <unsigned K>
void dense_kernel(SegmentBuffer& seg, std::span<PrimeOffsetPair> pairs) {
  uint64_t* const words = seg.words();
  const uint64_t segbits = seg.bits();
  const size_t spare = seg.spare_index();
  for (PrimeOffsetPair& pr : pairs) {
    const uint64_t p = pr.p;
    uint64_t q = pr.q;
    assert(q + (K - 1) * p < segbits);
    for (unsigned i = 0; i < K; ++i) {
      words[q >> 6] |= uint64_t{1} << (q & 63);
      q += p;
    }
    // predicated last step: the store always happens, but lands in the spare
    // word when q is out of range
    const bool in = q < segbits;
    words[in ? (q >> 6) : spare] |= uint64_t{1} << (q & 63);
    q += in ? p : 0;
    pr.q = (uint32_t)(q - segbits);
  }
}

}  // namespace

void sieve_medium_dense(SegmentBuffer& seg, unsigned k, std::span<PrimeOffsetPair> pairs) {
  switch (k) {
    case 1: dense_kernel<1>(seg, pairs); break;
    case 2: dense_kernel<2>(seg, pairs); break;
    case 3: dense_kernel<3>(seg, pairs); break;
    case 4: dense_kernel<4>(seg, pairs); break;
    case 5: dense_kernel<5>(seg, pairs); break;
    case 6: dense_kernel<6>(seg, pairs); break;
    case 7: dense_kernel<7>(seg, pairs); break;
    case 8: dense_kernel<8>(seg, pairs); break;
    case 9: dense_kernel<9>(seg, pairs); break;
    case 10: dense_kernel<10>(seg, pairs); break;
    case 11: dense_kernel<11>(seg, pairs); break;
    case 12: dense_kernel<12>(seg, pairs); break;
    case 13: dense_kernel<13>(seg, pairs); break;
    case 14: dense_kernel<14>(seg, pairs); break;
    case 15: dense_kernel<15>(seg, pairs); break;
    default: assert(!"dense class k out of range");
  }
}

void sieve_large(SegmentBuffer& seg, CircleSet& cs, uint64_t t) {
  (void)t;
  for (uint64_t k = 1; k <= cs.K; ++k)
    detail::sieve_circle_twoended<true>(seg, cs, k, detail::NoopMark{});
}

void sieve_large_variant(SegmentBuffer& seg, CircleSet& cs, uint64_t t, LargeVariant v) {
  (void)t;
  for (uint64_t k = 1; k <= cs.K; ++k) {
    if (!v.two_ended)
      detail::sieve_circle_reference(seg, cs, k, detail::NoopMark{});
    else if (v.unroll)
      detail::sieve_circle_twoended<true>(seg, cs, k, detail::NoopMark{});
    else
      detail::sieve_circle_twoended<false>(seg, cs, k, detail::NoopMark{});
  }
}

CircleValidation validate_circle_invariants(const CircleSet& cs, const SieveParams& params,
                                            uint64_t t) {
  CircleValidation rep;
  auto fail = [&](uint64_t k, uint64_t d, uint64_t i, std::string msg) {
    rep.ok = false;
    rep.circle = k;
    rep.bucket = d;
    rep.pair_index = i;
    rep.message = std::move(msg);
    return rep;
  };

  const unsigned l = cs.l;
  for (uint64_t k = 1; k <= cs.K; ++k) {
    const uint64_t bnum = k + 1;
    const Circle& c = cs.circles[k];
    const uint64_t beg = cs.circle_begin(k);
    const uint64_t end = cs.circle_end(k);
    const uint64_t bb = CircleSet::bucket_base(k);
    const uint32_t b = c.b;

    if (b != t % bnum)
      return fail(k, 0, 0, "current bucket " + std::to_string(b) + " != t mod (k+1)");
    if (c.r >= bnum) return fail(k, 0, 0, "broken index out of range");

    // starts ascend along the cyclic bucket order beginning after the broken
    // bucket; the walk also pins every start inside [beg, end]
    uint64_t prev = beg;
    for (uint64_t step = 1; step <= bnum; ++step) {
      const uint64_t d = (c.r + step) % bnum;
      const uint64_t s = cs.starts[bb + d];
      if (s < prev || s > end)
        return fail(k, d, 0, "bucket starts not cyclically monotone");
      prev = s;
    }

    uint64_t total = 0;
    for (uint64_t d = 0; d < bnum; ++d) {
      const uint64_t lo = cs.starts[bb + d];
      const uint64_t hi = cs.starts[bb + (d + 1) % bnum];
      uint64_t slices[2][2];
      size_t nslices;
      if (d == c.r) {
        slices[0][0] = lo;
        slices[0][1] = end;
        slices[1][0] = beg;
        slices[1][1] = hi;
        nslices = 2;
      } else {
        slices[0][0] = lo;
        slices[0][1] = hi;
        nslices = 1;
      }
      for (size_t sl = 0; sl < nslices; ++sl) {
        for (uint64_t i = slices[sl][0]; i < slices[sl][1]; ++i) {
          const PrimeOffsetPair pr = cs.pairs[i];
          total++;
          if (!((uint64_t)pr.p > (k << l) && (uint64_t)pr.p < ((k + 1) << l)))
            return fail(k, d, i, "prime " + std::to_string(pr.p) + " outside circle range");
          if (pr.q >= params.segment_bits())
            return fail(k, d, i, "offset " + std::to_string(pr.q) + " >= 2^l");
          // divisibility: d >= b uses f+t+d-b, d < b adds a full turn k+1
          const uint64_t turns = d >= b ? (t + d - b) : (t + d - b + k + 1);
          const unsigned __int128 num =
              2 * (((unsigned __int128)(params.f + turns) << l) + pr.q) + 1;
          if (num % pr.p != 0)
            return fail(k, d, i,
                        "pair (" + std::to_string(pr.p) + ", " + std::to_string(pr.q) +
                            ") not due in bucket " + std::to_string(d));
        }
      }
    }
    if (total != end - beg)
      return fail(k, 0, 0, "bucket spans do not partition the circle");
  }
  return rep;
}

}  // namespace erato
