#include <doctest.h>

#include <set>
#include <vector>

#include "fibsum/catalog.hpp"

using fibsum::BigInt;
using fibsum::BigRational;
using fibsum::CatalogEntry;
using fibsum::Params;
using fibsum::QuadRat;
using fibsum::SeqKind;
using fibsum::Sequences;
using fibsum::SignMode;

namespace {

Sequences seq;

// Naive evaluator, no shared code with term_at: re-reads the factor
// templates and computes sequence values by plain iterated addition.
BigInt naive_seq(SeqKind kind, long long index) {
  REQUIRE(index >= 0);
  BigInt a = (kind == SeqKind::Fib) ? 0 : 2;
  BigInt b = 1;
  for (long long i = 0; i < index; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

BigRational naive_term(const CatalogEntry& entry, const Params& prm, long long k) {
  auto eval_side = [&](const std::vector<fibsum::FactorTemplate>& templates) {
    BigInt acc = 1;
    for (const auto& t : templates) {
      long long base = static_cast<long long>(t.mnq) * prm.m * prm.n * prm.q +
                       static_cast<long long>(t.np) * prm.n * prm.p + t.cst;
      std::vector<long long> js;
      if (t.j_step == 0) {
        js.push_back(0);
      } else {
        for (long long j = t.j_lo_m * prm.m + t.j_lo_c; j <= t.j_hi_m * prm.m + t.j_hi_c; ++j) {
          js.push_back(j);
        }
      }
      for (long long j : js) {
        long long idx = static_cast<long long>(t.k_scale) * prm.n * k +
                        (t.j_step == 0 ? 0 : j * t.j_step * prm.n * prm.q) + base;
        BigInt v = naive_seq(t.kind, idx);
        for (int e = 0; e < t.power; ++e) acc *= v;
      }
    }
    return acc;
  };
  BigRational value(eval_side(entry.lhs.numerator), eval_side(entry.lhs.denominator));
  long long sign_exp = 0;
  if (entry.lhs.sign == SignMode::AltK) sign_exp = k - 1;
  if (entry.lhs.sign == SignMode::AltNK) sign_exp = prm.n * k - 1;
  return sign_exp % 2 == 0 ? value : -value;
}

std::vector<Params> valid_params(const CatalogEntry& entry, long long max_mnq, long long max_p) {
  std::vector<Params> out;
  long long p_hi = entry.lhs.uses_p ? max_p : 0;
  for (long long m = 1; m <= max_mnq; ++m)
    for (long long n = 1; n <= max_mnq; ++n)
      for (long long q = 1; q <= max_mnq; ++q)
        for (long long p = 0; p <= p_hi; ++p) {
          Params prm{m, n, q, p};
          if (validate_params(entry, prm)) out.push_back(prm);
        }
  return out;
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& entries = fibsum::catalog();
  CHECK(entries.size() >= 40);
  std::set<std::string> ids;
  for (const auto& e : entries) ids.insert(e.id);
  CHECK(ids.size() == entries.size());

  CHECK(fibsum::catalog_entry("A3").parity_text == "m, n and q are positive odd integers");
  CHECK(fibsum::catalog_entry("N3").frozen.has_value());
  CHECK(fibsum::catalog_entry("N4").frozen.has_value());
  CHECK(fibsum::find_entry("ZZ") == nullptr);
  CHECK_THROWS_AS(fibsum::catalog_entry("ZZ"), fibsum::UnknownIdError);

  // listing is stable across calls
  CHECK(&fibsum::catalog() == &entries);
  CHECK(fibsum::catalog_matching("J").size() == 6);
}

TEST_CASE("parameter validation") {
  CHECK(validate_params(fibsum::catalog_entry("J2"), {1, 1, 1, 0}));
  CHECK_FALSE(validate_params(fibsum::catalog_entry("A3"), {2, 1, 1, 0}));
  CHECK(validate_params(fibsum::catalog_entry("L1"), {1, 2, 1, 0}));
  CHECK_FALSE(validate_params(fibsum::catalog_entry("A6"), {1, 1, 1, 0}));  // needs p >= 1
  CHECK(validate_params(fibsum::catalog_entry("A6"), {1, 1, 1, 1}));
  CHECK_FALSE(validate_params(fibsum::catalog_entry("A1"), {0, 1, 1, 0}));
  CHECK_FALSE(validate_params(fibsum::catalog_entry("A1"), {1, 1, 1, 1}));  // p unused
  CHECK_FALSE(validate_params(fibsum::catalog_entry("N3"), {1, 2, 1, 0}));  // frozen tuple only
}

TEST_CASE("summand examples") {
  CHECK(term_at(seq, fibsum::catalog_entry("J1"), {1, 1, 2, 0}, 1) == BigRational(3, 4));
  CHECK(term_at(seq, fibsum::catalog_entry("A1"), {1, 1, 1, 0}, 2) == BigRational(-1, 2));
  CHECK(term_at(seq, fibsum::catalog_entry("H1"), {1, 1, 1, 0}, 1) == BigRational(2, 3));
  CHECK_THROWS_WITH_AS(term_at(seq, fibsum::catalog_entry("A3"), {2, 1, 1, 0}, 1),
                       "entry A3: parameters violate \"m, n and q are positive odd integers\"",
                       fibsum::DomainError);
}

TEST_CASE("closed form examples") {
  CHECK(closed_form(seq, fibsum::catalog_entry("A3"), {1, 1, 1, 0}) == QuadRat(1));
  CHECK(closed_form(seq, fibsum::catalog_entry("A3"), {1, 1, 3, 0}) ==
        QuadRat(BigRational(143, 960)));
  CHECK(closed_form(seq, fibsum::catalog_entry("A4"), {2, 1, 1, 0}) ==
        QuadRat(BigRational(1, 18)));
  // A1 carries a sqrt5 term at odd m
  CHECK_FALSE(closed_form(seq, fibsum::catalog_entry("A1"), {1, 1, 1, 0}).is_rational());
}

TEST_CASE("terms match an independently coded naive evaluator") {
  for (const auto& entry : fibsum::catalog()) {
    for (const auto& prm : valid_params(entry, 3, 2)) {
      for (long long k = 1; k <= 4; ++k) {
        REQUIRE(term_at(seq, entry, prm, k) == naive_term(entry, prm, k));
      }
    }
  }
}

TEST_CASE("J closed forms are rational") {
  for (const char* id : {"J1", "J1c", "J2", "J2c", "J3", "J4"}) {
    const auto& entry = fibsum::catalog_entry(id);
    for (const auto& prm : valid_params(entry, 3, 0)) {
      CHECK(closed_form(seq, entry, prm).is_rational());
    }
  }
}

TEST_CASE("sign-mode pairs validate independently") {
  for (const auto& [plain_id, alt_id] : std::vector<std::pair<std::string, std::string>>{
           {"E1", "E1A"}, {"E2", "E2A"}, {"G1", "G1A"}, {"G2", "G2A"}}) {
    const auto& plain = fibsum::catalog_entry(plain_id);
    const auto& alt = fibsum::catalog_entry(alt_id);
    CHECK(plain.lhs.sign == SignMode::None);
    CHECK(alt.lhs.sign == SignMode::AltK);
    auto prms = valid_params(plain, 2, 0);
    REQUIRE(!prms.empty());
    for (const auto& prm : prms) {
      CHECK(validate_params(alt, prm));
      // identical magnitude, k-dependent sign
      CHECK(term_at(seq, plain, prm, 2) == -term_at(seq, alt, prm, 2));
      CHECK(term_at(seq, plain, prm, 3) == term_at(seq, alt, prm, 3));
    }
  }
}

TEST_CASE("corollaries specialize their parent theorems") {
  for (long long m = 1; m <= 2; ++m)
    for (long long n = 1; n <= 2; ++n) {
      for (long long q : {1LL, 3LL}) {
        CHECK(closed_form(seq, fibsum::catalog_entry("A5c"), {m, n, q, 0}) ==
              closed_form(seq, fibsum::catalog_entry("A5"), {2 * m, n, q, 0}));
        CHECK(closed_form(seq, fibsum::catalog_entry("B5c"), {m, n, q, 0}) ==
              closed_form(seq, fibsum::catalog_entry("B5"), {2 * m, n, q, 0}));
      }
      for (long long q : {1LL, 2LL}) {
        if ((2 * m * n * q) % 2 == 0) {
          CHECK(closed_form(seq, fibsum::catalog_entry("J1c"), {m, n, q, 0}) ==
                closed_form(seq, fibsum::catalog_entry("J1"), {2 * m, n, q, 0}));
          CHECK(closed_form(seq, fibsum::catalog_entry("K1c"), {m, n, q, 0}) ==
                closed_form(seq, fibsum::catalog_entry("K1"), {2 * m, n, q, 0}));
        }
      }
      for (long long q : {2LL, 4LL}) {
        CHECK(closed_form(seq, fibsum::catalog_entry("J2c"), {m, n, q, 0}) ==
              closed_form(seq, fibsum::catalog_entry("J2"), {2 * m, n, q, 0}));
        CHECK(closed_form(seq, fibsum::catalog_entry("K2c"), {m, n, q, 0}) ==
              closed_form(seq, fibsum::catalog_entry("K2"), {2 * m, n, q, 0}));
      }
    }
}

TEST_CASE("paired-offset entries at p = 0 reduce to the squared entries") {
  for (long long m = 1; m <= 2; ++m)
    for (long long n = 1; n <= 2; ++n)
      for (long long q = 1; q <= 2; ++q) {
        Params prm{m, n, q, 0};
        if ((m * n * q) % 2 != 0) continue;
        CHECK(closed_form(seq, fibsum::catalog_entry("L1"), prm) ==
              closed_form(seq, fibsum::catalog_entry("J1"), prm));
        CHECK(term_at(seq, fibsum::catalog_entry("L1"), prm, 3) ==
              term_at(seq, fibsum::catalog_entry("J1"), prm, 3));
      }
}

TEST_CASE("mean-of-partials certificates tighten") {
  for (const char* id : {"A5", "A5c", "B5", "B5c"}) {
    const auto& entry = fibsum::catalog_entry(id);
    CHECK(entry.summation == fibsum::Summation::MeanOfPartials);
    Params prm{1, 1, 1, 0};
    QuadRat closed = closed_form(seq, entry, prm);
    QuadRat gap24 = (QuadRat(certified_partial(seq, entry, prm, 24)) - closed).abs();
    QuadRat gap48 = (QuadRat(certified_partial(seq, entry, prm, 48)) - closed).abs();
    CHECK(gap48.cmp(gap24) < 0);
    // plain partial sums oscillate and stay boundedly away
    QuadRat plain = (QuadRat(partial_sum(seq, entry, prm, 48)) - closed).abs();
    CHECK(plain > BigRational(1, 100));
  }
}

TEST_CASE("catalog dump records") {
  std::string dump = dump_entry(fibsum::catalog_entry("A3"));
  CHECK(dump.find("entry A3") != std::string::npos);
  CHECK(dump.find("xd29ih0") != std::string::npos);
  CHECK(dump.find("positive odd integers") != std::string::npos);
  CHECK(dump.find("rhs") != std::string::npos);
  std::string mean_dump = dump_entry(fibsum::catalog_entry("A5"));
  CHECK(mean_dump.find("mean-of-partials") != std::string::npos);
}
