// bench.hpp
// Wall-clock measurement of sieving one 2^30-bit interval (n = 2^(30-l)
// segments) with its midpoint near 10^e, counting sink only so IO stays out
// of the numbers. One untimed warm-up run per exponent, then the median of
// `reps` timed runs.

#pragma once
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "erato/driver.hpp"

namespace erato {

struct BenchRow {
  unsigned e = 0;
  double seconds = 0;
  unsigned l = 0;
  std::string machine;
  bool ok = false;
  std::string error;
};

struct BenchOptions {
  std::string machine = "unknown";
  unsigned reps = 3;
  bool warmup = true;
  const simd::KernelSet* kernels = nullptr;
};

std::vector<BenchRow> bench_run(std::span<const unsigned> exps, unsigned l,
                                const BenchOptions& opt = {});

// CSV columns e,seconds,l with a header row; failed rows are skipped.
void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows);

}  // namespace erato
