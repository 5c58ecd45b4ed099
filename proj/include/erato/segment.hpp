// segment.hpp
// One cache-resident segment of the sieve table: 2^l bits, bit q set means
// 2*((f+t)*2^l + q) + 1 has been marked composite.

#pragma once
#include <cstdint>
#include <cstring>
#include <vector>

namespace erato {

class SegmentBuffer {
public:
  explicit SegmentBuffer(unsigned l)
      : l_(l),
        bits_(uint64_t{1} << l),
        live_words_((bits_ + 63) / 64),
        words_(live_words_ + 1) {}  // +1: spare word, target of predicated dead stores

  unsigned l() const { return l_; }
  uint64_t bits() const { return bits_; }
  uint64_t t() const { return t_; }
  size_t word_count() const { return live_words_; }
  size_t spare_index() const { return live_words_; }

  uint64_t* words() { return words_.data(); }
  const uint64_t* words() const { return words_.data(); }

  void clear(uint64_t t) {
    std::memset(words_.data(), 0, words_.size() * sizeof(uint64_t));
    t_ = t;
  }

  void set_bit(uint64_t q) { words_[q >> 6] |= uint64_t{1} << (q & 63); }
  bool test_bit(uint64_t q) const { return (words_[q >> 6] >> (q & 63)) & 1; }

  // Bits past 2^l in the last word are padding (mask application may spill
  // into them); readers must mask them off. Zero when l >= 6.
  uint64_t pad_mask_last_word() const {
    const unsigned rem = bits_ & 63;
    return rem == 0 ? ~uint64_t{0} : (uint64_t{1} << rem) - 1;
  }

private:
  unsigned l_;
  uint64_t bits_;
  size_t live_words_;
  std::vector<uint64_t> words_;
  uint64_t t_ = 0;
};

}  // namespace erato
