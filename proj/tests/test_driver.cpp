#include <doctest.h>
#include <cstdio>
#include <random>

#include "erato/driver.hpp"
#include "erato/oracle.hpp"
#include "support.hpp"

using namespace erato;

TEST_CASE("run_sieve matches the oracle bit for bit") {
  const auto params = validate_params(10, 2048, 4);
  TableSink sink;
  const auto stats = run_sieve(params, sink);
  const auto expect = oracle::oracle_bit_table(params);
  CHECK(sink.bytes() == expect.bytes);
  CHECK(stats.segments == 4);
  CHECK(stats.prime_count == oracle::prime_count(params.u, params.v));
}

TEST_CASE("prime counts for l=12, f=4096, n=8") {
  const auto params = validate_params(12, 4096, 8);
  NullSink sink;
  const auto stats = run_sieve(params, sink);
  CHECK(stats.prime_count == oracle::prime_count(params.u, params.v));
}

TEST_CASE("minimal run n=1") {
  const auto params = validate_params(10, 4000, 1);
  NullSink sink;
  const auto stats = run_sieve(params, sink);
  CHECK(stats.segments == 1);
  CHECK(stats.prime_count == oracle::prime_count(params.u, params.v));
}

TEST_CASE("extract_primes returns the clear bits ascending") {
  const auto params = validate_params(10, 2048, 4);
  PrimeCollectSink sink;
  const auto stats = run_sieve(params, sink);
  const auto& primes = sink.primes();
  CHECK(primes.size() == stats.prime_count);
  CHECK(std::is_sorted(primes.begin(), primes.end()));
  // first listed prime is the smallest prime >= u
  uint64_t first = params.u;
  while (!testsup::miller_rabin(first)) first += 2;
  REQUIRE(!primes.empty());
  CHECK(primes.front() == first);
  for (size_t i = 0; i < primes.size(); i += 97) CHECK(testsup::miller_rabin(primes[i]));
}

TEST_CASE("all-ones segment extracts nothing") {
  const auto params = validate_params(10, 2048, 1);
  SegmentBuffer seg(params.l);
  seg.clear(0);
  for (uint64_t q = 0; q < seg.bits(); ++q) seg.set_bit(q);
  CHECK(extract_primes(seg, 0, params).empty());
}

TEST_CASE("write_table produces the exact file") {
  const auto params = validate_params(10, 2048, 4);
  const auto dir = std::filesystem::temp_directory_path() / "erato_test_out";
  const auto path = write_table(dir, params);
  CHECK(path.filename() == "erato_l10_f2048_n4.bits");

  std::FILE* f = std::fopen(path.string().c_str(), "rb");
  REQUIRE(f);
  std::vector<uint8_t> bytes(params.table_bytes() + 1);
  const size_t got = std::fread(bytes.data(), 1, bytes.size(), f);
  std::fclose(f);
  CHECK(got == params.table_bytes());  // exactly n*2^(l-3) bytes
  bytes.resize(got);

  // byte 0 bit 0 is u = f*2^(l+1)+1; u = 4194305 = 5 * 838861 -> composite
  CHECK(((bytes[0] >> 0) & 1) == 1);
  CHECK(bytes == oracle::oracle_bit_table(params).bytes);

  // round-trip: clear bits re-extract to the same primes as a collect run
  PrimeCollectSink sink;
  run_sieve(params, sink);
  std::vector<uint64_t> from_file;
  for (uint64_t j = 0; j < params.table_bits(); ++j)
    if (!((bytes[j >> 3] >> (j & 7)) & 1)) from_file.push_back(index_to_number(params, j));
  CHECK(from_file == sink.primes());

  std::filesystem::remove_all(dir);
}

TEST_CASE("byte 0 bit 0 stands for u") {
  // u = 6*2^11 + 1 = 12289 is prime: bit clear
  const auto prime_u = validate_params(10, 6, 1);
  TableSink a;
  run_sieve(prime_u, a);
  CHECK((a.bytes()[0] & 1) == 0);
  CHECK(testsup::miller_rabin(prime_u.u));

  // u = 5*2^11 + 1 = 10241 = 7^2 * 11 * 19: bit set
  const auto comp_u = validate_params(10, 5, 1);
  TableSink b;
  run_sieve(comp_u, b);
  CHECK((b.bytes()[0] & 1) == 1);
  CHECK(!testsup::miller_rabin(comp_u.u));
}

TEST_CASE("determinism: identical params give identical bytes") {
  const auto params = validate_params(11, 3333, 3);
  TableSink a, b;
  run_sieve(params, a);
  run_sieve(params, b);
  CHECK(a.bytes() == b.bytes());
}

TEST_CASE("counting and file sinks agree") {
  const auto params = validate_params(10, 5000, 3);
  NullSink null;
  TableSink table;
  const auto s1 = run_sieve(params, null);
  const auto s2 = run_sieve(params, table);
  CHECK(s1.prime_count == s2.prime_count);
  uint64_t zeros = 0;
  for (uint8_t byte : table.bytes()) zeros += 8 - __builtin_popcount(byte);
  CHECK(zeros == s1.prime_count);
}

TEST_CASE("no composite survives: spot primality check") {
  const auto params = validate_params(14, 100000, 4);
  PrimeCollectSink sink;
  run_sieve(params, sink);
  std::mt19937_64 rng(101);
  const auto& primes = sink.primes();
  REQUIRE(!primes.empty());
  for (int i = 0; i < 10000; ++i) CHECK(testsup::miller_rabin(primes[rng() % primes.size()]));
}

TEST_CASE("scalar and vector kernel runs produce identical tables") {
  const auto params = validate_params(12, 9999, 4);
  RunOptions scalar_opt;
  scalar_opt.kernels = &simd::scalar_kernels();
  TableSink a, b;
  run_sieve(params, a, scalar_opt);
  run_sieve(params, b);  // best available
  CHECK(a.bytes() == b.bytes());
}

TEST_CASE("tiny test-mode segments (l=4) run end to end") {
  std::mt19937_64 rng(103);
  for (int it = 0; it < 10; ++it) {
    const auto params = testsup::random_instance(rng, 4, 5, 8, uint64_t{1} << 24);
    TableSink sink;
    run_sieve(params, sink);
    CHECK(sink.bytes() == oracle::oracle_bit_table(params).bytes);
  }
}
