#include <doctest.h>
#include <random>

#include "erato/masks.hpp"
#include "erato/simd.hpp"

using namespace erato;

namespace {

std::vector<simd::Isa> available_isas() {
  std::vector<simd::Isa> v;
  for (auto isa : {simd::Isa::avx2, simd::Isa::neon})
    if (simd::kernels_for(isa)) v.push_back(isa);
  return v;
}

std::vector<simd::MaskCursor> cursors_for(const std::vector<SmallPrimeMask>& masks) {
  std::vector<simd::MaskCursor> out;
  for (const auto& m : masks) out.push_back({m.tile.data(), m.cursor_start(), m.modulus});
  return out;
}

}  // namespace

TEST_CASE("vector kernels match scalar bit for bit") {
  const auto isas = available_isas();
  if (isas.empty()) {
    MESSAGE("no vector ISA on this machine; scalar only");
    return;
  }

  std::mt19937_64 rng(89);
  const auto& scalar = simd::scalar_kernels();

  for (int it = 0; it < 40; ++it) {
    const unsigned l = 4 + (unsigned)(rng() % 13);
    const uint64_t f = 1 + rng() % 1000000;
    const auto params = validate_params(l, f, 4, true);
    auto masks = small_prime_masks(params);

    const size_t nwords = std::max<size_t>(1, params.segment_bits() / 64);
    std::vector<uint64_t> init(nwords);
    for (auto& w : init) w = rng() & rng();  // sparse junk to OR into

    auto scalar_words = init;
    auto scalar_cur = cursors_for(masks);
    scalar.or_tiles(scalar_words.data(), nwords, scalar_cur.data(), scalar_cur.size());

    for (auto isa : isas) {
      const auto* ks = simd::kernels_for(isa);
      auto words = init;
      auto cur = cursors_for(masks);
      ks->or_tiles(words.data(), nwords, cur.data(), cur.size());
      CHECK(words == scalar_words);
      // cursor positions advance identically
      for (size_t i = 0; i < cur.size(); ++i) CHECK(cur[i].pos == scalar_cur[i].pos);
    }
  }
}

TEST_CASE("count_zeros matches scalar for ragged lengths") {
  const auto isas = available_isas();
  if (isas.empty()) return;

  std::mt19937_64 rng(97);
  for (int it = 0; it < 200; ++it) {
    const size_t nwords = 1 + rng() % 300;
    std::vector<uint64_t> words(nwords);
    for (auto& w : words) w = rng();
    // exercise sub-word tails too
    const uint64_t nbits = 1 + rng() % (nwords * 64);

    const uint64_t expect = simd::scalar_kernels().count_zeros(words.data(), nbits);
    for (auto isa : isas) CHECK(simd::kernels_for(isa)->count_zeros(words.data(), nbits) == expect);
  }
}

TEST_CASE("count_zeros counts") {
  std::vector<uint64_t> w = {0, ~uint64_t{0}, 0x5555555555555555ull};
  CHECK(simd::scalar_kernels().count_zeros(w.data(), 192) == 64 + 0 + 32);
  CHECK(simd::scalar_kernels().count_zeros(w.data(), 64) == 64);
  CHECK(simd::scalar_kernels().count_zeros(w.data(), 5) == 5);
  CHECK(simd::scalar_kernels().count_zeros(w.data(), 130) == 64 + 1);
}

TEST_CASE("active kernels are one of the registered sets") {
  const auto& k = simd::active_kernels();
  CHECK((std::string(k.name) == "scalar" || std::string(k.name) == "avx2" ||
         std::string(k.name) == "neon"));
}
