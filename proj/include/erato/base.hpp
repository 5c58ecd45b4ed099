// base.hpp
// The base: every odd prime p <= sqrt(v), classified by size, with its
// first offset. Large primes (p > 2^l) live in the circle/bucket structure.
//
// Layout follows the flat-array scheme: one pair array with the pairs of
// circle k contiguous (end-pointer per circle), one flat bucket array of
// (K+1)(K+2)/2 start indices with circle k's k+1 buckets at offset k(k+1)/2,
// and per-circle current-bucket index b and broken-bucket index r. Bucket d
// of circle k spans [starts[d], starts[d+1 mod k+1]) in pair-array order;
// the broken bucket r is the one whose span wraps around the circle's range.

#pragma once
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "erato/masks.hpp"
#include "erato/params.hpp"

namespace erato {

// Two 32-bit values per pair. q is the raw first offset (q < p) until
// init_circles rebases it into [0, 2^l).
struct PrimeOffsetPair {
  uint32_t p;
  uint32_t q;
};

// Wheel-medium pair: the 3-bit wheel index s rides in the top bits of the
// p word (wheel primes are <= 2^l/16 <= 2^26, so those bits are free for
// every valid l; q can grow to 15/16 * 2^l and has no spare bits at l = 30).
struct WheelPair {
  static constexpr unsigned kShift = 29;
  static constexpr uint32_t kPrimeMask = (uint32_t{1} << kShift) - 1;
  uint32_t ps;
  uint32_t q;

  uint32_t p() const { return ps & kPrimeMask; }
  unsigned s() const { return ps >> kShift; }
  static WheelPair make(uint32_t p, unsigned s, uint32_t q) {
    return {p | (uint32_t)(s << kShift), q};
  }
};

enum class PrimeClass { small, wheel_medium, dense_medium, large };

struct Classification {
  PrimeClass cls;
  uint32_t k;  // dense: floor(2^l/p); large: floor(p/2^l); otherwise 0
};

// small:        p <= 61 (handled by masks)
// wheel-medium: 64 <= p <= 2^l/16
// dense-medium: 2^l/16 < p < 2^l, k = floor(2^l/p) in 1..15
// large:        p > 2^l, circle k = floor(p/2^l)
// Large takes precedence: in test mode 2^l can be below 61.
Classification classify_prime(uint32_t p, unsigned l);

struct Circle {
  uint64_t end;  // one past the circle's last pair in CircleSet::pairs
  uint32_t b;    // current bucket
  uint32_t r;    // broken bucket
};

struct CircleSet {
  unsigned l = 0;
  uint64_t K = 0;
  std::vector<Circle> circles;         // K+1 entries; circle 0 is a sentinel
  std::vector<uint64_t> starts;        // (K+1)(K+2)/2 bucket start indices
  std::vector<PrimeOffsetPair> pairs;  // large pairs, circles ascending

  static uint64_t bucket_base(uint64_t k) { return k * (k + 1) / 2; }
  uint64_t circle_begin(uint64_t k) const { return circles[k - 1].end; }
  uint64_t circle_end(uint64_t k) const { return circles[k].end; }
};

struct BaseTable {
  std::vector<SmallPrimeMask> masks;
  std::vector<WheelPair> wheel_medium;
  std::array<std::vector<PrimeOffsetPair>, 16> dense_medium;  // index k, 1..15
  std::vector<PrimeOffsetPair> large;  // q holds the raw first offset
  uint32_t max_prime = 0;
  uint64_t K = 0;  // floor(max base prime / 2^l)
};

inline constexpr uint64_t kDefaultMaxBasePairs = uint64_t{1} << 27;

// Generates the primes 2 < p <= sqrt(v), classifies them, and computes the
// first offsets (wheel-aligned for the wheel class).
BaseTable build_base(const SieveParams& params,
                     uint64_t max_pairs = kDefaultMaxBasePairs);

// Moves base.large into the initial bucket state (t = 0): pair of prime p
// goes to bucket d = floor(q'/2^l) of circle floor(p/2^l) with q = q' - d*2^l;
// pairs of a circle sorted by q' so buckets are contiguous; all b = 0 and
// r = k (no physical wrap yet).
CircleSet init_circles(BaseTable& base, const SieveParams& params);

}  // namespace erato
