#include "erato/driver.hpp"

#include <chrono>

namespace erato {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

std::string table_filename(const SieveParams& p) {
  return "erato_l" + std::to_string(p.l) + "_f" + std::to_string(p.f) + "_n" +
         std::to_string(p.n) + ".bits";
}

void segment_to_bytes(const SegmentBuffer& seg, uint8_t* out) {
  const uint64_t nbytes = seg.bits() / 8;
  const uint64_t* words = seg.words();
  for (uint64_t byte = 0; byte < nbytes; ++byte)
    out[byte] = (uint8_t)(words[byte >> 3] >> ((byte & 7) * 8));
}

FileSink::FileSink(std::filesystem::path dir, const SieveParams& params) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  path_ = dir / table_filename(params);
  file_ = std::fopen(path_.string().c_str(), "wb");
  if (!file_) throw Error(errc::io_error, "cannot open " + path_.string());
  buf_.resize(params.segment_bytes());
}

FileSink::~FileSink() {
  if (file_) std::fclose(file_);
}

void FileSink::on_segment(const SegmentBuffer& seg, uint64_t, const SieveParams&) {
  segment_to_bytes(seg, buf_.data());
  if (std::fwrite(buf_.data(), 1, buf_.size(), file_) != buf_.size())
    throw Error(errc::io_error, "short write to " + path_.string());
}

void FileSink::finish(const SieveParams&) {
  if (std::fflush(file_) != 0)
    throw Error(errc::io_error, "flush failed for " + path_.string());
}

void PrimeCollectSink::on_segment(const SegmentBuffer& seg, uint64_t t,
                                  const SieveParams& params) {
  auto batch = extract_primes(seg, t, params);
  primes_.insert(primes_.end(), batch.begin(), batch.end());
}

void TableSink::on_segment(const SegmentBuffer& seg, uint64_t, const SieveParams& params) {
  const size_t off = bytes_.size();
  bytes_.resize(off + params.segment_bytes());
  segment_to_bytes(seg, bytes_.data() + off);
}

std::vector<uint64_t> extract_primes(const SegmentBuffer& seg, uint64_t t,
                                     const SieveParams& params) {
  std::vector<uint64_t> out;
  const uint64_t base = params.u + 2 * (t << params.l);
  const uint64_t* words = seg.words();
  const uint64_t nwords = seg.word_count();
  for (uint64_t w = 0; w < nwords; ++w) {
    uint64_t free_bits = ~words[w];
    if (w == nwords - 1) free_bits &= seg.pad_mask_last_word();
    while (free_bits) {
      const unsigned bit = (unsigned)__builtin_ctzll(free_bits);
      out.push_back(base + 2 * (w * 64 + bit));
      free_bits &= free_bits - 1;
    }
  }
  return out;
}

RunStats run_sieve(const SieveParams& params, SegmentSink& sink, const RunOptions& opt) {
  RunStats stats;
  const simd::KernelSet& ks = opt.kernels ? *opt.kernels : simd::active_kernels();

  auto t0 = Clock::now();
  BaseTable base = build_base(params, opt.max_base_pairs);
  CircleSet circles = init_circles(base, params);
  stats.init_s = seconds_since(t0);

  SegmentBuffer seg(params.l);
  for (uint64_t t = 0; t < params.n; ++t) {
    seg.clear(t);

    auto tm = Clock::now();
    apply_small_masks(seg, base.masks, ks);
    stats.masks_s += seconds_since(tm);

    tm = Clock::now();
    sieve_medium_wheel(seg, base.wheel_medium);
    for (unsigned k = 1; k <= 15; ++k)
      if (!base.dense_medium[k].empty()) sieve_medium_dense(seg, k, base.dense_medium[k]);
    stats.medium_s += seconds_since(tm);

    tm = Clock::now();
    sieve_large(seg, circles, t);
    stats.large_s += seconds_since(tm);

    if (opt.after_segment) opt.after_segment(circles, t, params, opt.after_segment_ctx);

    tm = Clock::now();
    stats.prime_count += ks.count_zeros(seg.words(), seg.bits());
    sink.on_segment(seg, t, params);
    stats.output_s += seconds_since(tm);
    ++stats.segments;
  }
  sink.finish(params);
  return stats;
}

std::filesystem::path write_table(const std::filesystem::path& dir, const SieveParams& params,
                                  const RunOptions& opt) {
  FileSink sink(dir, params);
  run_sieve(params, sink, opt);
  return sink.path();
}

}  // namespace erato
