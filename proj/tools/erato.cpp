// erato — segmented prime sieve CLI.
//
//   erato sieve  --log-seg 21 --midpoint-exp 12 --segments 512 --count-only
//   erato sieve  --log-seg 10 --first 2048 --segments 4 --out-dir /tmp
//   erato verify --log-seg 12 --first 4096 --segments 8
//   erato bench  --exps 12,13,14 --csv bench.csv
//
// Exit codes: 0 success, 1 parameter error, 2 runtime error.

#include <CLI11.hpp>
#include <cinttypes>
#include <cstdio>
#include <optional>

#include "erato/bench.hpp"
#include "erato/driver.hpp"
#include "erato/oracle.hpp"

namespace {

bool is_param_error(erato::errc c) {
  using erato::errc;
  switch (c) {
    case errc::l_out_of_range:
    case errc::f_zero_or_overlap:
    case errc::n_out_of_range:
    case errc::overflow:
    case errc::index_out_of_range:
      return true;
    default:
      return false;
  }
}

const erato::simd::KernelSet* pick_kernels(const std::string& name) {
  using erato::simd::Isa;
  if (name == "auto") return nullptr;
  const erato::simd::KernelSet* k = nullptr;
  if (name == "scalar") k = erato::simd::kernels_for(Isa::scalar);
  if (name == "avx2") k = erato::simd::kernels_for(Isa::avx2);
  if (name == "neon") k = erato::simd::kernels_for(Isa::neon);
  if (!k) throw std::runtime_error("kernel set '" + name + "' not available on this machine");
  return k;
}

struct ParamFlags {
  unsigned l = 21;
  std::optional<uint64_t> f;
  std::optional<unsigned> e;
  uint64_t n = 1;
  bool test_mode = false;

  erato::SieveParams resolve() const {
    uint64_t first;
    if (f)
      first = *f;
    else if (e)
      first = erato::params_from_midpoint(*e, l, n, test_mode);
    else
      throw erato::Error(erato::errc::f_zero_or_overlap, "need --first or --midpoint-exp");
    return erato::validate_params(l, first, n, test_mode);
  }
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
  cmd->add_option("--log-seg,-l", pf.l, "log2 of segment size in bits")->capture_default_str();
  auto* f = cmd->add_option("--first,-f", pf.f, "index of the first segment");
  auto* e = cmd->add_option("--midpoint-exp,-e", pf.e,
                            "place the interval midpoint near 10^e (instead of --first)");
  f->excludes(e);
  cmd->add_option("--segments,-n", pf.n, "number of segments")->required();
  cmd->add_flag("--test-mode", pf.test_mode, "allow small segments (l >= 4)");
}

void print_stats(const erato::RunStats& st) {
  std::printf("primes    %" PRIu64 "\n", st.prime_count);
  std::printf("segments  %" PRIu64 "\n", st.segments);
  std::printf("init      %.3fs\n", st.init_s);
  std::printf("masks     %.3fs\n", st.masks_s);
  std::printf("medium    %.3fs\n", st.medium_s);
  std::printf("large     %.3fs\n", st.large_s);
  std::printf("output    %.3fs\n", st.output_s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"erato — cache-optimized segmented sieve of Eratosthenes"};
  app.require_subcommand(1);

  ParamFlags sieve_pf, verify_pf;
  std::string out_dir = std::filesystem::temp_directory_path().string();
  std::string kernels_name = "auto";
  uint64_t max_base_pairs = erato::kDefaultMaxBasePairs;
  bool count_only = false;

  CLI::App* sieve = app.add_subcommand("sieve", "sieve [u,v] and write the bit table");
  add_param_flags(sieve, sieve_pf);
  sieve->add_option("--out-dir", out_dir, "output directory for the .bits file");
  sieve->add_flag("--count-only", count_only, "count primes, write nothing");
  sieve->add_option("--kernels", kernels_name, "word kernels")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));
  sieve->add_option("--max-base-pairs", max_base_pairs, "cap on base prime count");

  CLI::App* verify = app.add_subcommand("verify", "compare a run against the brute-force oracle");
  add_param_flags(verify, verify_pf);

  std::vector<unsigned> exps;
  unsigned bench_l = 21;
  unsigned reps = 3;
  std::string csv_path, machine = "unknown";
  CLI::App* bench = app.add_subcommand("bench", "time 2^30-bit intervals near 10^e");
  bench->add_option("--exps", exps, "midpoint exponents")->required()->delimiter(',');
  bench->add_option("--log-seg,-l", bench_l, "log2 of segment size in bits");
  bench->add_option("--csv", csv_path, "write rows to this CSV file");
  bench->add_option("--machine", machine, "machine label for the report");
  bench->add_option("--reps", reps, "timed repetitions per exponent");
  bench->add_option("--kernels", kernels_name, "word kernels")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (sieve->parsed()) {
      const erato::SieveParams params = sieve_pf.resolve();
      erato::RunOptions opt;
      opt.kernels = pick_kernels(kernels_name);
      opt.max_base_pairs = max_base_pairs;
      if (count_only) {
        erato::NullSink sink;
        print_stats(erato::run_sieve(params, sink, opt));
      } else {
        erato::FileSink sink(out_dir, params);
        print_stats(erato::run_sieve(params, sink, opt));
        std::printf("table     %s (%" PRIu64 " bytes)\n", sink.path().c_str(),
                    params.table_bytes());
      }
    } else if (verify->parsed()) {
      const erato::SieveParams params = verify_pf.resolve();
      erato::TableSink sink;
      erato::run_sieve(params, sink);
      const auto expect = erato::oracle::oracle_bit_table(params);
      if (sink.bytes() == expect.bytes) {
        std::printf("PASS  [%" PRIu64 ", %" PRIu64 "] matches oracle (%zu bytes)\n", params.u,
                    params.v, expect.bytes.size());
      } else {
        std::printf("FAIL  table differs from oracle\n");
        return 2;
      }
    } else if (bench->parsed()) {
      erato::BenchOptions opt;
      opt.machine = machine;
      opt.reps = reps;
      opt.kernels = pick_kernels(kernels_name);
      const auto rows = erato::bench_run(exps, bench_l, opt);
      std::printf("machine %s, l=%u, interval 2^30 bits\n", machine.c_str(), bench_l);
      for (const auto& r : rows) {
        if (r.ok)
          std::printf("e=%-3u %8.3fs\n", r.e, r.seconds);
        else
          std::printf("e=%-3u failed: %s\n", r.e, r.error.c_str());
      }
      if (!csv_path.empty()) erato::write_bench_csv(csv_path, rows);
    }
  } catch (const erato::Error& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return is_param_error(ex.code()) ? 1 : 2;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
  return 0;
}
