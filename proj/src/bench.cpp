#include "erato/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

namespace erato {

namespace {

double timed_run(const SieveParams& params, const RunOptions& opt) {
  NullSink sink;
  const auto t0 = std::chrono::steady_clock::now();
  run_sieve(params, sink, opt);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<BenchRow> bench_run(std::span<const unsigned> exps, unsigned l,
                                const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  RunOptions ropt;
  ropt.kernels = opt.kernels;

  for (unsigned e : exps) {
    BenchRow row;
    row.e = e;
    row.l = l;
    row.machine = opt.machine;
    try {
      if (l > 30) throw Error(errc::l_out_of_range, "l=" + std::to_string(l));
      const uint64_t n = uint64_t{1} << (30 - l);
      const uint64_t f = params_from_midpoint(e, l, n);
      const SieveParams params = validate_params(l, f, n);

      if (opt.warmup) timed_run(params, ropt);
      std::vector<double> times;
      for (unsigned i = 0; i < std::max(1u, opt.reps); ++i)
        times.push_back(timed_run(params, ropt));
      std::sort(times.begin(), times.end());
      row.seconds = times[times.size() / 2];
      row.ok = true;
    } catch (const std::exception& ex) {
      row.error = ex.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows) {
  std::FILE* f = std::fopen(path.string().c_str(), "w");
  if (!f) throw Error(errc::io_error, "cannot open " + path.string());
  std::fprintf(f, "e,seconds,l\n");
  for (const BenchRow& r : rows)
    if (r.ok) std::fprintf(f, "%u,%.6f,%u\n", r.e, r.seconds, r.l);
  std::fclose(f);
}

}  // namespace erato
