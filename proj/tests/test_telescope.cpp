#include <doctest.h>

#include <random>

#include "fibsum/sequences.hpp"
#include "fibsum/telescope.hpp"

using fibsum::BigRational;
using fibsum::InfiniteMode;
using fibsum::LemmaMode;
using fibsum::QuadRat;
using fibsum::SeqFn;
using fibsum::Sequences;

namespace {

Sequences seq;

SeqFn inv_fib() {
  return {[](long long k) { return QuadRat(BigRational(fibsum::BigInt(1), seq.fib(k))); },
          "1/F_k"};
}
SeqFn inv_lucas() {
  return {[](long long k) { return QuadRat(BigRational(fibsum::BigInt(1), seq.lucas(k))); },
          "1/L_k"};
}
SeqFn lucas_over_fib() {
  return {[](long long k) { return QuadRat(BigRational(seq.lucas(k), seq.fib(k))); }, "L_k/F_k"};
}
SeqFn fib_shift_ratio(long long p) {
  return {[p](long long k) { return QuadRat(BigRational(seq.fib(k + p), seq.fib(k))); },
          "F_{k+p}/F_k"};
}
SeqFn constant(const QuadRat& c) {
  return {[c](long long) { return c; }, "const"};
}

int alt1(long long k) { return (k - 1) % 2 == 0 ? 1 : -1; }

// brute-force double loop, no shared code with the engine
QuadRat oracle_lemma_lhs(const SeqFn& f, long long m, long long n, long long q, long long N,
                         LemmaMode mode) {
  QuadRat total = 0;
  for (long long k = 1; k <= N; ++k) {
    QuadRat prod = 1;
    for (long long j = 1; j <= m - 1; ++j) prod *= f.eval(n * k + j * n * q);
    QuadRat bracket = mode == LemmaMode::AltQOdd
                          ? f.eval(n * k) + f.eval(n * k + m * n * q)
                          : f.eval(n * k) - f.eval(n * k + m * n * q);
    QuadRat term = bracket * prod;
    if (mode != LemmaMode::Plain && alt1(k) < 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("plain telescoping identity") {
  auto r1 = telescope_finite(inv_fib(), 2, 10);
  CHECK(r1.equal());
  auto r2 = telescope_finite(constant(QuadRat(7, 3, 5)), 3, 9);
  CHECK(r2.equal());
  CHECK(r2.lhs.is_zero());
  auto r3 = telescope_finite(lucas_over_fib(), 3, 7);
  CHECK(r3.equal());
  // direct double-loop value of the same sum
  QuadRat direct = 0;
  for (long long k = 1; k <= 7; ++k) {
    direct += QuadRat(BigRational(seq.lucas(k), seq.fib(k))) -
              QuadRat(BigRational(seq.lucas(k + 3), seq.fib(k + 3)));
  }
  CHECK(r3.lhs == direct);
  CHECK_THROWS_AS(telescope_finite(inv_fib(), 5, 4), fibsum::DomainError);
}

TEST_CASE("alternating telescoping identity") {
  CHECK(telescope_finite_alt(inv_lucas(), 2, 9).equal());
  // constant sequence, q odd, N even: all terms cancel pairwise
  auto r = telescope_finite_alt(constant(QuadRat(5)), 3, 8);
  CHECK(r.equal());
  CHECK(r.lhs.is_zero());
  // q = 1 with f(k) = k
  SeqFn ident{[](long long k) { return QuadRat(k); }, "k"};
  CHECK(telescope_finite_alt(ident, 1, 6).equal());
}

TEST_CASE("product lemma examples") {
  CHECK(lemma_product_finite(inv_fib(), 1, 1, 1, 5, LemmaMode::Plain).equal());
  CHECK(lemma_product_finite(lucas_over_fib(), 2, 3, 2, 8, LemmaMode::AltQEven).equal());
  CHECK(lemma_product_finite(inv_lucas(), 3, 1, 1, 3, LemmaMode::AltQOdd).equal());
  CHECK_THROWS_AS(lemma_product_finite(inv_fib(), 1, 1, 3, 5, LemmaMode::AltQEven),
                  fibsum::DomainError);
  CHECK_THROWS_AS(lemma_product_finite(inv_fib(), 1, 1, 2, 5, LemmaMode::AltQOdd),
                  fibsum::DomainError);
}

TEST_CASE("product lemma matches the brute-force oracle on random instances") {
  std::mt19937_64 rng(99);
  auto draw = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  for (LemmaMode mode : {LemmaMode::Plain, LemmaMode::AltQEven, LemmaMode::AltQOdd}) {
    for (int i = 0; i < 200; ++i) {
      long long m = draw(1, 4), n = draw(1, 4), N = draw(1, 12);
      long long q = draw(1, 4);
      if (mode == LemmaMode::AltQEven) q = 2 * draw(1, 2);
      if (mode == LemmaMode::AltQOdd) q = 2 * draw(1, 2) - 1;
      SeqFn f;
      switch (i % 4) {
        case 0: f = inv_fib(); break;
        case 1: f = inv_lucas(); break;
        case 2: f = lucas_over_fib(); break;
        default: f = fib_shift_ratio(draw(1, 3)); break;
      }
      auto pair = lemma_product_finite(f, m, n, q, N, mode);
      REQUIRE(pair.equal());
      REQUIRE(pair.lhs == oracle_lemma_lhs(f, m, n, q, N, mode));
    }
  }
}

TEST_CASE("infinite forms with caller-supplied limits") {
  BigRational tiny20(fibsum::BigInt(1), fibsum::BigInt("100000000000000000000"));
  auto probe = lemma_product_infinite(lucas_over_fib(), QuadRat::sqrt5(), 1, 1, 1,
                                      InfiniteMode::Plain, 60);
  CHECK(probe.tail_bound < tiny20);

  auto flat = lemma_product_infinite(constant(QuadRat(4, 1, 3)), QuadRat(4, 1, 3), 2, 1, 2,
                                     InfiniteMode::Plain, 10);
  CHECK(flat.closed_form.is_zero());
  CHECK(flat.series_partial.is_zero());

  BigRational tiny25(fibsum::BigInt(1), fibsum::BigInt("10000000000000000000000000"));
  auto ratio = lemma_product_infinite(fib_shift_ratio(1), QuadRat::phi(), 1, 1, 2,
                                      InfiniteMode::Plain, 80);
  CHECK(ratio.tail_bound < tiny25);

  CHECK_THROWS_AS(lemma_product_infinite(inv_fib(), QuadRat(0), 1, 1, 9,
                                         InfiniteMode::Plain, 8),
                  fibsum::DomainError);
}

TEST_CASE("tail bound shrinks when the probe doubles") {
  for (long long q : {1, 2}) {
    auto a = lemma_product_infinite(inv_fib(), QuadRat(0), 2, 1, q, InfiniteMode::Plain, 20);
    auto b = lemma_product_infinite(inv_fib(), QuadRat(0), 2, 1, q, InfiniteMode::Plain, 40);
    CHECK(b.tail_bound.cmp(a.tail_bound) < 0);
    auto c = lemma_product_infinite(lucas_over_fib(), QuadRat::sqrt5(), 1, 2, q,
                                    InfiniteMode::Alternating, 20);
    auto d = lemma_product_infinite(lucas_over_fib(), QuadRat::sqrt5(), 1, 2, q,
                                    InfiniteMode::Alternating, 40);
    CHECK(d.tail_bound.cmp(c.tail_bound) < 0);
  }
}
