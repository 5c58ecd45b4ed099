// driver.hpp
// Runs the sieve: build the base, then for t = 0..n-1 clear the segment,
// apply all kernels, and hand the finished segment to a sink. Only one
// segment is resident at a time, so n is bounded by disk/time, not memory.
//
// Output table contract (also the .bits file payload): bit j is bit
// (j mod 8) of byte floor(j/8), LSB first; 0 = prime, 1 = composite.
// Filename schema: erato_l{l}_f{f}_n{n}.bits, exactly n*2^(l-3) bytes.

#pragma once
#include <cstdio>
#include <filesystem>
#include <memory>
#include <vector>

#include "erato/base.hpp"
#include "erato/kernels.hpp"
#include "erato/params.hpp"
#include "erato/segment.hpp"
#include "erato/simd.hpp"

namespace erato {

struct RunStats {
  uint64_t prime_count = 0;  // zero bits over the whole run
  uint64_t segments = 0;
  double init_s = 0;    // base primes, masks, circles
  double masks_s = 0;
  double medium_s = 0;  // wheel + dense kernels
  double large_s = 0;
  double output_s = 0;  // counting + sink delivery
};

class SegmentSink {
public:
  virtual ~SegmentSink() = default;
  virtual void on_segment(const SegmentBuffer& seg, uint64_t t, const SieveParams& params) = 0;
  virtual void finish(const SieveParams&) {}
};

// Discards segments; run_sieve counts primes regardless of the sink.
class NullSink final : public SegmentSink {
public:
  void on_segment(const SegmentBuffer&, uint64_t, const SieveParams&) override {}
};

// Streams the bit table to dir/erato_l{l}_f{f}_n{n}.bits.
class FileSink final : public SegmentSink {
public:
  FileSink(std::filesystem::path dir, const SieveParams& params);
  ~FileSink() override;
  void on_segment(const SegmentBuffer& seg, uint64_t t, const SieveParams& params) override;
  void finish(const SieveParams& params) override;
  const std::filesystem::path& path() const { return path_; }

private:
  std::filesystem::path path_;
  std::FILE* file_ = nullptr;
  std::vector<uint8_t> buf_;
};

// Collects all primes in memory; desk-scale runs only.
class PrimeCollectSink final : public SegmentSink {
public:
  void on_segment(const SegmentBuffer& seg, uint64_t t, const SieveParams& params) override;
  const std::vector<uint64_t>& primes() const { return primes_; }

private:
  std::vector<uint64_t> primes_;
};

// Keeps the whole table in memory; desk-scale runs only.
class TableSink final : public SegmentSink {
public:
  void on_segment(const SegmentBuffer& seg, uint64_t t, const SieveParams& params) override;
  const std::vector<uint8_t>& bytes() const { return bytes_; }

private:
  std::vector<uint8_t> bytes_;
};

struct RunOptions {
  const simd::KernelSet* kernels = nullptr;  // null: best available
  uint64_t max_base_pairs = kDefaultMaxBasePairs;
  // Test hook, called after each segment's kernels with the CircleSet in
  // state t+1.
  void (*after_segment)(const CircleSet&, uint64_t t, const SieveParams&, void* ctx) = nullptr;
  void* after_segment_ctx = nullptr;
};

RunStats run_sieve(const SieveParams& params, SegmentSink& sink, const RunOptions& opt = {});

// Ascending primes represented by the clear bits of a finished segment.
std::vector<uint64_t> extract_primes(const SegmentBuffer& seg, uint64_t t,
                                     const SieveParams& params);

// Sieves the whole run into dir and returns the file path.
std::filesystem::path write_table(const std::filesystem::path& dir, const SieveParams& params,
                                  const RunOptions& opt = {});

// Serializes one segment into the on-disk byte order (LSB-first bits).
void segment_to_bytes(const SegmentBuffer& seg, uint8_t* out);

std::string table_filename(const SieveParams& params);

}  // namespace erato
