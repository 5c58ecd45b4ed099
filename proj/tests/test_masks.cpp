#include <doctest.h>
#include <random>

#include "erato/kernels.hpp"
#include "erato/masks.hpp"

using namespace erato;

namespace {

// Naive per-bit marking of the given primes over segment t.
std::vector<uint64_t> naive_mark_words(const SieveParams& params, uint64_t t,
                                       const std::vector<uint32_t>& primes) {
  SegmentBuffer seg(params.l);
  seg.clear(t);
  const uint64_t base = (params.f + t) << params.l;  // global odd-index of bit 0
  for (uint32_t p : primes) {
    // smallest offset with p | 2*(base+q)+1
    uint64_t q = 0;
    while ((2 * (base + q) + 1) % p != 0) ++q;
    for (; q < params.segment_bits(); q += p) seg.set_bit(q);
  }
  std::vector<uint64_t> words(seg.words(), seg.words() + seg.word_count());
  if (!words.empty()) words.back() &= seg.pad_mask_last_word();
  return words;
}

std::vector<uint64_t> masked_words(SegmentBuffer& seg) {
  std::vector<uint64_t> words(seg.words(), seg.words() + seg.word_count());
  if (!words.empty()) words.back() &= seg.pad_mask_last_word();
  return words;
}

}  // namespace

TEST_CASE("mask pattern positions") {
  const auto params = validate_params(10, 1, 4);
  auto masks = small_prime_masks(params);
  REQUIRE(masks.size() == 15);
  CHECK(masks[0].modulus == 33);
  CHECK(masks[0].primes == std::vector<uint32_t>{3, 11});
  CHECK(masks[1].modulus == 35);
  CHECK(masks[1].primes == std::vector<uint32_t>{5, 7});
  // pattern bit x set iff x = (p-1)/2 mod p for a generating prime
  for (const auto& m : masks)
    for (uint64_t x = 0; x < m.modulus; ++x) {
      bool expect = false;
      for (uint32_t p : m.primes) expect |= (x % p == (p - 1) / 2u);
      CHECK(m.pattern_bit(x) == expect);
    }
}

TEST_CASE("mask for 3 at f=1, l=10 starts 0b1001001001001001") {
  const auto params = validate_params(10, 1, 1);
  auto mask3 = detail::build_mask({3}, 3, params.first_index());
  SegmentBuffer seg(params.l);
  seg.clear(0);
  std::vector<SmallPrimeMask> one{mask3};
  apply_small_masks(seg, one);
  CHECK((seg.words()[0] & 0xffff) == 0b1001001001001001);
  for (uint64_t q = 0; q < 64; ++q) CHECK(seg.test_bit(q) == (q % 3 == 0));
}

TEST_CASE("mask application equals naive marking across segments") {
  std::mt19937_64 rng(43);
  for (unsigned l = 10; l <= 16; ++l) {
    const uint64_t f = 1 + rng() % 500000;
    const auto params = validate_params(l, f, 10);
    auto masks = small_prime_masks(params);
    std::vector<uint32_t> primes;
    for (const auto& m : masks) primes.insert(primes.end(), m.primes.begin(), m.primes.end());

    for (uint64_t t = 0; t < params.n; ++t) {
      SegmentBuffer seg(params.l);
      seg.clear(t);
      apply_small_masks(seg, masks);
      CHECK(masked_words(seg) == naive_mark_words(params, t, primes));
    }
  }
}

TEST_CASE("phase continuity over a segment boundary") {
  // no multiple of any mask prime is missed or duplicated across segments
  const auto params = validate_params(4, 130, 8, true);
  auto masks = small_prime_masks(params);
  std::vector<uint32_t> primes;
  for (const auto& m : masks) primes.insert(primes.end(), m.primes.begin(), m.primes.end());
  for (uint64_t t = 0; t < params.n; ++t) {
    SegmentBuffer seg(params.l);
    seg.clear(t);
    apply_small_masks(seg, masks);
    CHECK(masked_words(seg) == naive_mark_words(params, t, primes));
  }
}

TEST_CASE("merged masks equal the OR of their parts") {
  const auto params = validate_params(12, 777, 3);
  const uint64_t start = params.first_index();
  auto m33 = detail::build_mask({3, 11}, 33, start);
  auto m3 = detail::build_mask({3}, 3, start);
  auto m11 = detail::build_mask({11}, 11, start);
  auto m35 = detail::build_mask({5, 7}, 35, start);
  auto m5 = detail::build_mask({5}, 5, start);
  auto m7 = detail::build_mask({7}, 7, start);

  for (uint64_t t = 0; t < params.n; ++t) {
    SegmentBuffer merged(params.l), parts(params.l);
    merged.clear(t);
    parts.clear(t);
    std::vector<SmallPrimeMask> a{m33, m35};
    std::vector<SmallPrimeMask> b{m3, m11, m5, m7};
    apply_small_masks(merged, a);
    apply_small_masks(parts, b);
    m33 = a[0];
    m35 = a[1];
    m3 = b[0];
    m11 = b[1];
    m5 = b[2];
    m7 = b[3];
    CHECK(masked_words(merged) == masked_words(parts));
  }
}

TEST_CASE("p=61 mask density") {
  const auto params = validate_params(14, 3000, 1);
  auto m61 = detail::build_mask({61}, 61, params.first_index());
  SegmentBuffer seg(params.l);
  seg.clear(0);
  std::vector<SmallPrimeMask> one{m61};
  apply_small_masks(seg, one);
  uint64_t count = 0;
  for (uint64_t q = 0; q < seg.bits(); ++q) count += seg.test_bit(q);
  const uint64_t lo = seg.bits() / 61;
  CHECK(count >= lo);
  CHECK(count <= lo + 1);
}

TEST_CASE("test-mode interval below 61 drops self-marking masks") {
  // u = 33: primes 37..61 are not in any mask, so 37 (prime, in range)
  // stays unmarked
  const auto params = validate_params(4, 1, 1, true);
  auto masks = small_prime_masks(params);
  for (const auto& m : masks)
    for (uint32_t p : m.primes) CHECK(p < params.u);
  SegmentBuffer seg(params.l);
  seg.clear(0);
  apply_small_masks(seg, masks);
  CHECK(!seg.test_bit(number_to_index(params, 37)));
  CHECK(!seg.test_bit(number_to_index(params, 41)));
  CHECK(seg.test_bit(number_to_index(params, 33)));  // 3*11
  CHECK(seg.test_bit(number_to_index(params, 35)));  // 5*7
}
