#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

#include "fibsum/sequences.hpp"

using fibsum::BigInt;
using fibsum::BigRational;
using fibsum::QuadRat;
using fibsum::Sequences;

namespace {

// independent oracle: plain iterative addition from the defining recurrence
std::vector<BigInt> iterative_fib(std::size_t upto) {
  std::vector<BigInt> f(upto + 1);
  f[0] = 0;
  if (upto >= 1) f[1] = 1;
  for (std::size_t i = 2; i <= upto; ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

}  // namespace

TEST_CASE("fib and lucas base values") {
  Sequences seq;
  CHECK(seq.fib(0) == 0);
  CHECK(seq.fib(1) == 1);
  CHECK(seq.fib(10) == 55);
  CHECK(seq.lucas(0) == 2);
  CHECK(seq.lucas(1) == 1);
  CHECK(seq.lucas(10) == 123);
  CHECK(seq.fib(100) == seq.fib(99) + seq.fib(98));
}

TEST_CASE("fast doubling agrees with the iterative oracle up to 5000") {
  Sequences seq;
  auto oracle = iterative_fib(5001);
  for (std::size_t n = 0; n <= 5000; ++n) {
    REQUIRE(seq.fib(n) == oracle[n]);
  }
  // L_n = F_{n-1} + F_{n+1}
  for (std::size_t n = 1; n <= 2000; ++n) {
    REQUIRE(seq.lucas(n) == oracle[n - 1] + oracle[n + 1]);
  }
}

TEST_CASE("index addition spot check") {
  Sequences seq;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t a = 1 + rng() % 2000, b = 1 + rng() % 2000;
    CHECK(seq.fib(a + b) == seq.fib(a) * seq.fib(b + 1) + seq.fib(a - 1) * seq.fib(b));
  }
}

TEST_CASE("phi powers") {
  Sequences seq;
  CHECK(seq.phi_pow(0) == QuadRat(1));
  CHECK(seq.phi_pow(1) == QuadRat::phi());
  CHECK(seq.phi_pow(3) == QuadRat(2, 1, 1));  // phi^3 = 2 + sqrt5, by phi^2 = phi+1
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t a = rng() % 300, b = rng() % 300;
    CHECK(seq.phi_pow(a) * seq.phi_pow(b) == seq.phi_pow(a + b));
  }
  CHECK(seq.phi_pow_signed(-1) == QuadRat(-1, 1, 2));  // 1/phi = phi - 1
}

TEST_CASE("sqrt5 powers") {
  CHECK(Sequences::sqrt5_pow(0) == QuadRat(1));
  CHECK(Sequences::sqrt5_pow(1) == QuadRat::sqrt5());
  CHECK(Sequences::sqrt5_pow(2) == QuadRat(5));
  CHECK(Sequences::sqrt5_pow(5) == QuadRat(0, 25, 1));
}

TEST_CASE("limit checks") {
  Sequences seq;

  auto report = check_limits(seq, 1, 0, {10, 20, 40});
  CHECK(report.pass);
  CHECK(report.probes.size() == 3);
  for (const auto& probe : report.probes) {
    CHECK(probe.err_fib_fib.sign() > 0);
    // the reported rational bound certifies the exact error
    CHECK(QuadRat(probe.bound_fib_fib).cmp(probe.err_fib_fib) >= 0);
  }
  CHECK(report.probes[2].err_fib_fib.cmp(report.probes[1].err_fib_fib) < 0);
  CHECK(report.probes[1].err_fib_fib.cmp(report.probes[0].err_fib_fib) < 0);

  auto same = check_limits(seq, 3, 3, {5, 9});
  CHECK(same.pass);
  CHECK(same.probes[0].err_fib_fib.is_zero());
  CHECK(same.probes[1].err_lucas_lucas.is_zero());

  auto fl = check_limits(seq, 0, 0, {30});
  CHECK(fl.probes[0].err_fib_lucas < BigRational(BigInt(1), BigInt(1000000000000)));

  CHECK_THROWS_AS(check_limits(seq, 1, 0, {10, 10}), fibsum::DomainError);
}

TEST_CASE("cache is shared and thread safe") {
  Sequences seq;
  CHECK(seq.cache_size() == 0);
  seq.fib(500);
  auto filled = seq.cache_size();
  CHECK(filled > 0);
  seq.fib(500);
  CHECK(seq.cache_hits() > 0);

  BigInt expected = seq.fib(4321);
  std::vector<std::thread> pool;
  std::vector<BigInt> results(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&seq, &results, t] { results[t] = seq.fib(4321); });
  }
  for (auto& th : pool) th.join();
  for (const auto& r : results) CHECK(r == expected);
}
