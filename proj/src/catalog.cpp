#include "fibsum/catalog.hpp"

#include <sstream>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

using SK = SeqKind;

BigInt seq_value(Sequences& seq, SK kind, long long index) {
  if (index < 0) throw DomainError("sequence index underflow");
  auto n = static_cast<std::uint64_t>(index);
  return kind == SK::Fib ? seq.fib(n) : seq.lucas(n);
}

int sign_at(SignMode mode, long long n, long long k) {
  switch (mode) {
    case SignMode::None: return 1;
    case SignMode::AltK: return (k - 1) % 2 == 0 ? 1 : -1;
    case SignMode::AltNK: return (n * k - 1) % 2 == 0 ? 1 : -1;
  }
  return 1;
}

// ---- closed-form building blocks -------------------------------------------

QuadRat rat(const BigRational& r) { return QuadRat(r); }

// prod_{j=0}^{count-1} top(nk+jnq+top_off)^pw / bot(nk+jnq)^pw
BigRational prod_ratio(Sequences& seq, SK top, SK bot, const Params& prm, long long k,
                       long long count, long long top_off = 0, int pw = 1) {
  BigRational acc = 1;
  for (long long j = 0; j < count; ++j) {
    long long i = prm.n * k + j * prm.n * prm.q;
    BigRational num(seq_value(seq, top, i + top_off));
    BigRational den(seq_value(seq, bot, i));
    for (int e = 0; e < pw; ++e) acc *= num / den;
  }
  return acc;
}

// 1 / prod_{j=0}^{count-1} kind(kscale*nk + j*jstep*nq)^pw
BigRational inv_prod(Sequences& seq, SK kind, const Params& prm, long long k,
                     long long count, int pw = 1, int jstep = 1, int kscale = 1) {
  BigInt den = 1;
  for (long long j = 0; j < count; ++j) {
    BigInt v = seq_value(seq, kind, kscale * prm.n * k + j * jstep * prm.n * prm.q);
    for (int e = 0; e < pw; ++e) den *= v;
  }
  return BigRational(BigInt(1), den);
}

// 1 / prod_{j=0}^{count-1} kind(nk+jnq) * kind(nk+jnq+np)
BigRational inv_prod_pair(Sequences& seq, SK kind, const Params& prm, long long k,
                          long long count) {
  BigInt den = 1;
  for (long long j = 0; j < count; ++j) {
    long long i = prm.n * k + j * prm.n * prm.q;
    den *= seq_value(seq, kind, i) * seq_value(seq, kind, i + prm.n * prm.p);
  }
  return BigRational(BigInt(1), den);
}

// prod_{j=0}^{count-1} F(i+1)^2 / (F(i) * F(i+2)), i = nk+jnq
BigRational squared_shift_ratio(Sequences& seq, const Params& prm, long long k,
                                long long count) {
  BigRational acc = 1;
  for (long long j = 0; j < count; ++j) {
    long long i = prm.n * k + j * prm.n * prm.q;
    BigRational f1(seq_value(seq, SK::Fib, i + 1));
    acc *= f1 * f1 / (BigRational(seq_value(seq, SK::Fib, i)) *
                      BigRational(seq_value(seq, SK::Fib, i + 2)));
  }
  return acc;
}

int alt1(long long k) { return (k - 1) % 2 == 0 ? 1 : -1; }  // (-1)^(k-1)

template <typename TermFn>
BigRational ksum(long long hi, TermFn&& term) {
  BigRational acc = 0;
  for (long long k = 1; k <= hi; ++k) acc += term(k);
  return acc;
}

// ---- catalog construction ---------------------------------------------------

struct EntryBuilder {
  std::vector<CatalogEntry> entries;

  void add(CatalogEntry e) { entries.push_back(std::move(e)); }
};

const auto kAlways = [](const Params&) { return true; };
const auto kAllOdd = [](const Params& p) { return p.m % 2 == 1 && p.n % 2 == 1 && p.q % 2 == 1; };
const auto kNOddQEven = [](const Params& p) { return p.n % 2 == 1 && p.q % 2 == 0; };
const auto kQOddNMEven = [](const Params& p) { return p.q % 2 == 1 && (p.n * p.m) % 2 == 0; };
const auto kQOdd = [](const Params& p) { return p.q % 2 == 1; };
const auto kQEven = [](const Params& p) { return p.q % 2 == 0; };
const auto kMNQEven = [](const Params& p) { return (p.m * p.n * p.q) % 2 == 0; };
const auto kQEvenOrMNQOdd = [](const Params& p) { return p.q % 2 == 0 || (p.m * p.n * p.q) % 2 == 1; };
const auto kMNQOddOrQEven = [](const Params& p) { return (p.m * p.n * p.q) % 2 == 1 || p.q % 2 == 0; };

constexpr const char* kTextAlways = "m, n and q are positive integers";
constexpr const char* kTextAllOdd = "m, n and q are positive odd integers";
constexpr const char* kTextNOddQEven = "n is odd and q is even";
constexpr const char* kTextQOddNMEven = "q is odd and nm is even";
constexpr const char* kTextQOdd = "q is odd";
constexpr const char* kTextQEven = "q is even";
constexpr const char* kTextMNQEven = "mnq is even";
constexpr const char* kTextQEvenOrMNQOdd = "q is even or mnq is odd";
constexpr const char* kTextWithP = "m, n, q and p are positive integers";
constexpr const char* kTextNOddQEvenP = "n is odd and q is even; p is a positive integer";
constexpr const char* kTextMNQEvenP = "mnq is even; p is a non-negative integer";
constexpr const char* kTextMNQOddOrQEvenP = "mnq is odd or q is even; p is a non-negative integer";

// common factor-template shapes
FactorTemplate single(SK kind, int k_scale = 1, int mnq = 0, int np = 0, int cst = 0, int pw = 1) {
  return {kind, k_scale, 0, 0, 0, 0, 0, mnq, np, cst, pw};
}
FactorTemplate jprod(SK kind, int lo_m, int lo_c, int hi_m, int hi_c, int k_scale = 1,
                     int j_step = 1, int np = 0, int cst = 0, int pw = 1) {
  return {kind, k_scale, j_step, lo_m, lo_c, hi_m, hi_c, 0, np, cst, pw};
}

std::vector<CatalogEntry> build_catalog() {
  EntryBuilder b;

  // --- family A: F products in the denominator, L / shifted-F numerators
  SumSpec a1_lhs{SignMode::AltNK,
                 {jprod(SK::Lucas, 0, 1, 1, -1)},        // prod_{j=1}^{m-1} L[nk+jnq]
                 {jprod(SK::Fib, 0, 0, 1, 0)}};          // prod_{j=0}^{m} F[nk+jnq]
  b.add({"A1", "vn8ph53", kTextAlways, kAlways, a1_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           QuadRat constant = QuadRat(BigRational(p.q)) * Sequences::sqrt5_pow(p.m) /
                              QuadRat(BigRational(2 * fm));
           BigRational tail = ksum(p.q, [&](long long k) {
             return prod_ratio(s, SK::Lucas, SK::Fib, p, k, p.m);
           });
           return constant - rat(tail / BigRational(2 * fm));
         },
         "q*sqrt5^m/(2*F[mnq]) - (1/(2*F[mnq])) sum_{k=1..q} prod_{j=0..m-1} L[nk+jnq]/F[nk+jnq]",
         Summation::Direct, std::nullopt,
         "n=1 and q=1 particular cases are the classical alternating reciprocal sums"});

  b.add({"A2", "hxvgf6w", kTextNOddQEven, kNOddQEven,
         SumSpec{SignMode::None, a1_lhs.numerator, a1_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = prod_ratio(s, SK::Lucas, SK::Fib, p, k, p.m);
             return alt1(k) > 0 ? -v : v;  // (-1)^k
           });
           return rat(acc / BigRational(2 * fm));
         },
         "(1/(2*F[mnq])) sum_{k=1..q} (-1)^k prod_{j=0..m-1} L[nk+jnq]/F[nk+jnq]"});

  SumSpec a3_lhs{SignMode::None,
                 {},
                 {jprod(SK::Fib, 0, 0, 1, -1), jprod(SK::Fib, 1, 1, 2, 0)}};
  b.add({"A3", "xd29ih0", kTextAllOdd, kAllOdd, a3_lhs,
         [](Sequences& s, const Params& p) {
           BigInt lm = s.lucas(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) { return inv_prod(s, SK::Fib, p, k, 2 * p.m); });
           return rat(acc / BigRational(lm));
         },
         "(1/L[mnq]) sum_{k=1..q} 1/prod_{j=0..2m-1} F[nk+jnq]",
         Summation::Direct, std::nullopt,
         "contains the classical sums 1/(F_k*F_{k+2}) = 1 and 1/(F_k*F_{k+6}) = 143/960"});

  b.add({"A4", "i3apd20", kTextQOddNMEven, kQOddNMEven,
         SumSpec{SignMode::AltK, {}, a3_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt lm = s.lucas(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod(s, SK::Fib, p, k, 2 * p.m);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(lm));
         },
         "(1/L[mnq]) sum_{k=1..q} (-1)^(k-1)/prod_{j=0..2m-1} F[nk+jnq]"});

  SumSpec a5_lhs{SignMode::AltK,
                 {single(SK::Fib, 2, 1), jprod(SK::Lucas, 0, 1, 1, -1)},
                 {jprod(SK::Fib, 0, 0, 1, 0)}};
  b.add({"A5", "cgjiqk9", kTextQOdd, kQOdd, a5_lhs,
         [](Sequences& s, const Params& p) {
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = prod_ratio(s, SK::Lucas, SK::Fib, p, k, p.m);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(2));
         },
         "(1/2) sum_{k=1..q} (-1)^(k-1) prod_{j=0..m-1} L[nk+jnq]/F[nk+jnq]",
         Summation::MeanOfPartials, std::nullopt,
         "summand magnitude tends to sqrt5^m: partial sums oscillate, midpoints converge"});

  b.add({"A5c", "ee6ees5", kTextQOdd, kQOdd,
         SumSpec{SignMode::AltK,
                 {single(SK::Lucas, 1, 1, 0, 0, 2), jprod(SK::Lucas, 0, 1, 1, -1),
                  jprod(SK::Lucas, 1, 1, 2, -1)},
                 {jprod(SK::Fib, 0, 0, 1, -1), jprod(SK::Fib, 1, 1, 2, 0)}},
         [](Sequences& s, const Params& p) {
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = prod_ratio(s, SK::Lucas, SK::Fib, p, k, 2 * p.m);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(2));
         },
         "(1/2) sum_{k=1..q} (-1)^(k-1) prod_{j=0..2m-1} L[nk+jnq]/F[nk+jnq]",
         Summation::MeanOfPartials, std::nullopt,
         "m -> 2m specialization of A5 after cancelling F[nk+mnq]"});

  SumSpec a6_lhs{SignMode::AltNK,
                 {jprod(SK::Fib, 0, 1, 1, -1, 1, 1, 1)},  // prod_{j=1}^{m-1} F[nk+jnq+np]
                 {jprod(SK::Fib, 0, 0, 1, 0)},
                 true};
  b.add({"A6", "f9a8imt", kTextWithP,
         [](const Params& p) { return p.p >= 1; }, a6_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigInt fp = s.fib(static_cast<std::uint64_t>(p.n * p.p));
           QuadRat constant = s.phi_pow(static_cast<std::uint64_t>(p.m * p.n * p.p)) *
                              rat(BigRational(to_bigint(p.q), fm * fp));
           BigRational tail = ksum(p.q, [&](long long k) {
             return prod_ratio(s, SK::Fib, SK::Fib, p, k, p.m, p.n * p.p);
           });
           return constant - rat(tail / BigRational(fm * fp));
         },
         "phi^(mnp)*q/(F[mnq]*F[np]) - (1/(F[mnq]*F[np])) sum_{k=1..q} prod_{j=0..m-1} F[nk+jnq+np]/F[nk+jnq]"});

  b.add({"A7", "vdv26oc", kTextNOddQEvenP,
         [](const Params& p) { return p.n % 2 == 1 && p.q % 2 == 0 && p.p >= 1; },
         SumSpec{SignMode::None, a6_lhs.numerator, a6_lhs.denominator, true},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigInt fp = s.fib(static_cast<std::uint64_t>(p.n * p.p));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = prod_ratio(s, SK::Fib, SK::Fib, p, k, p.m, p.n * p.p);
             return alt1(k) > 0 ? -v : v;  // (-1)^k
           });
           return rat(acc / BigRational(fm * fp));
         },
         "(1/(F[mnq]*F[np])) sum_{k=1..q} (-1)^k prod_{j=0..m-1} F[nk+jnq+np]/F[nk+jnq]"});

  // --- family B: Lucas products in the denominator
  SumSpec b1_lhs{SignMode::AltNK,
                 {jprod(SK::Fib, 0, 1, 1, -1)},
                 {jprod(SK::Lucas, 0, 0, 1, 0)}};
  b.add({"B1", "v8d2lop", kTextAlways, kAlways, b1_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational head = ksum(p.q, [&](long long k) {
             return prod_ratio(s, SK::Fib, SK::Lucas, p, k, p.m);
           });
           QuadRat constant = rat(BigRational(to_bigint(p.q), 2 * fm)) / Sequences::sqrt5_pow(p.m);
           return rat(head / BigRational(2 * fm)) - constant;
         },
         "(1/(2*F[mnq])) sum_{k=1..q} prod_{j=0..m-1} F[nk+jnq]/L[nk+jnq] - q/(2*F[mnq]*sqrt5^m)",
         Summation::Direct, std::nullopt, "n=3, q=1 case appears in the classical literature"});

  b.add({"B2", "llpbu3h", kTextNOddQEven, kNOddQEven,
         SumSpec{SignMode::None, b1_lhs.numerator, b1_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = prod_ratio(s, SK::Fib, SK::Lucas, p, k, p.m);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(2 * fm));
         },
         "(1/(2*F[mnq])) sum_{k=1..q} (-1)^(k-1) prod_{j=0..m-1} F[nk+jnq]/L[nk+jnq]"});

  SumSpec b3_lhs{SignMode::None,
                 {},
                 {jprod(SK::Lucas, 0, 0, 1, -1), jprod(SK::Lucas, 1, 1, 2, 0)}};
  b.add({"B3", "jysuj3n", kTextAllOdd, kAllOdd, b3_lhs,
         [](Sequences& s, const Params& p) {
           BigInt lm = s.lucas(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) { return inv_prod(s, SK::Lucas, p, k, 2 * p.m); });
           return rat(acc / BigRational(lm));
         },
         "(1/L[mnq]) sum_{k=1..q} 1/prod_{j=0..2m-1} L[nk+jnq]"});

  b.add({"B4", "eniunx3", kTextQOddNMEven, kQOddNMEven,
         SumSpec{SignMode::AltK, {}, b3_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt lm = s.lucas(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod(s, SK::Lucas, p, k, 2 * p.m);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(lm));
         },
         "(1/L[mnq]) sum_{k=1..q} (-1)^(k-1)/prod_{j=0..2m-1} L[nk+jnq]"});

  b.add({"B5", "oe85fcz", kTextQOdd, kQOdd,
         SumSpec{SignMode::AltK,
                 {single(SK::Fib, 2, 1), jprod(SK::Fib, 0, 1, 1, -1)},
                 {jprod(SK::Lucas, 0, 0, 1, 0)}},
         [](Sequences& s, const Params& p) {
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = prod_ratio(s, SK::Fib, SK::Lucas, p, k, p.m);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(2));
         },
         "(1/2) sum_{k=1..q} (-1)^(k-1) prod_{j=0..m-1} F[nk+jnq]/L[nk+jnq]",
         Summation::MeanOfPartials, std::nullopt,
         "summand magnitude tends to sqrt5^-m: partial sums oscillate, midpoints converge"});

  b.add({"B5c", "q95bigi", kTextQOdd, kQOdd,
         SumSpec{SignMode::AltK,
                 {single(SK::Fib, 1, 1, 0, 0, 2), jprod(SK::Fib, 0, 1, 1, -1),
                  jprod(SK::Fib, 1, 1, 2, -1)},
                 {jprod(SK::Lucas, 0, 0, 1, -1), jprod(SK::Lucas, 1, 1, 2, 0)}},
         [](Sequences& s, const Params& p) {
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = prod_ratio(s, SK::Fib, SK::Lucas, p, k, 2 * p.m);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(2));
         },
         "(1/2) sum_{k=1..q} (-1)^(k-1) prod_{j=0..2m-1} F[nk+jnq]/L[nk+jnq]",
         Summation::MeanOfPartials, std::nullopt,
         "m -> 2m specialization of B5 after cancelling L[nk+mnq]"});

  SumSpec b6_lhs{SignMode::AltNK,
                 {jprod(SK::Lucas, 0, 1, 1, -1, 1, 1, 1)},
                 {jprod(SK::Lucas, 0, 0, 1, 0)},
                 true};
  b.add({"B6", "lk7ts7r", kTextWithP,
         [](const Params& p) { return p.p >= 1; }, b6_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigInt fp = s.fib(static_cast<std::uint64_t>(p.n * p.p));
           QuadRat constant = s.phi_pow(static_cast<std::uint64_t>(p.m * p.n * p.p)) *
                              rat(BigRational(to_bigint(p.q), 5 * fm * fp));
           BigRational head = ksum(p.q, [&](long long k) {
             return prod_ratio(s, SK::Lucas, SK::Lucas, p, k, p.m, p.n * p.p);
           });
           return rat(head / BigRational(5 * fm * fp)) - constant;
         },
         "-phi^(mnp)*q/(5*F[mnq]*F[np]) + (1/(5*F[mnq]*F[np])) sum_{k=1..q} prod_{j=0..m-1} L[nk+jnq+np]/L[nk+jnq]"});

  b.add({"B7", "ec1t6t2", kTextNOddQEvenP,
         [](const Params& p) { return p.n % 2 == 1 && p.q % 2 == 0 && p.p >= 1; },
         SumSpec{SignMode::None, b6_lhs.numerator, b6_lhs.denominator, true},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigInt fp = s.fib(static_cast<std::uint64_t>(p.n * p.p));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = prod_ratio(s, SK::Lucas, SK::Lucas, p, k, p.m, p.n * p.p);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(5 * fm * fp));
         },
         "(1/(5*F[mnq]*F[np])) sum_{k=1..q} (-1)^(k-1) prod_{j=0..m-1} L[nk+jnq+np]/L[nk+jnq]"});

  // --- families C/D: single L or F numerator over 2m+1 factors
  SumSpec c_lhs{SignMode::None, {single(SK::Lucas, 1, 1)}, {jprod(SK::Fib, 0, 0, 2, 0)}};
  b.add({"C1", "k2v2cn5", kTextMNQEven, kMNQEven, c_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) { return inv_prod(s, SK::Fib, p, k, 2 * p.m); });
           return rat(acc / BigRational(fm));
         },
         "(1/F[mnq]) sum_{k=1..q} 1/prod_{j=0..2m-1} F[nk+jnq]"});
  b.add({"C2", "n3errmo", kTextQEvenOrMNQOdd, kQEvenOrMNQOdd,
         SumSpec{SignMode::AltK, c_lhs.numerator, c_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod(s, SK::Fib, p, k, 2 * p.m);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(fm));
         },
         "(1/F[mnq]) sum_{k=1..q} (-1)^(k-1)/prod_{j=0..2m-1} F[nk+jnq]"});

  SumSpec d_lhs{SignMode::None, {single(SK::Fib, 1, 1)}, {jprod(SK::Lucas, 0, 0, 2, 0)}};
  b.add({"D1", "h6ute1y", kTextMNQEven, kMNQEven, d_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) { return inv_prod(s, SK::Lucas, p, k, 2 * p.m); });
           return rat(acc / BigRational(5 * fm));
         },
         "(1/(5*F[mnq])) sum_{k=1..q} 1/prod_{j=0..2m-1} L[nk+jnq]"});
  b.add({"D2", "gkxbzjk", kTextQEvenOrMNQOdd, kQEvenOrMNQOdd,
         SumSpec{SignMode::AltK, d_lhs.numerator, d_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod(s, SK::Lucas, p, k, 2 * p.m);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(5 * fm));
         },
         "(1/(5*F[mnq])) sum_{k=1..q} (-1)^(k-1)/prod_{j=0..2m-1} L[nk+jnq]"});

  // --- families E/G: denominators at double spacing, RHS sums to 2q.
  // Each theorem carries a +/- sign pair; the alternating mode is the
  // sibling entry with suffix "A".
  struct SpacedFamily {
    const char* id;
    const char* source;
    SK num_kind, den_kind;
    char prefactor;  // 'L' -> 1/L[mnq], 'F' -> 1/F[mnq], '5' -> 1/(5*F[mnq])
    std::function<bool(const Params&)> parity;
    const char* parity_text;
  };
  const SpacedFamily spaced[] = {
      {"E1", "t7s7spm", SK::Fib, SK::Fib, 'L', kAllOdd, kTextAllOdd},
      {"E2", "spaced-L-num", SK::Lucas, SK::Fib, 'F', kMNQEven, kTextMNQEven},
      {"G1", "spaced-lucas-L", SK::Lucas, SK::Lucas, 'L', kAllOdd, kTextAllOdd},
      {"G2", "spaced-lucas-F", SK::Fib, SK::Lucas, '5', kMNQEven, kTextMNQEven},
  };
  for (const auto& fam : spaced) {
    for (int variant = 0; variant < 2; ++variant) {
      bool alternating = variant == 1;
      SK den = fam.den_kind;
      char pre = fam.prefactor;
      auto rhs = [den, pre, alternating](Sequences& s, const Params& p) {
        BigRational acc = ksum(2 * p.q, [&](long long k) {
          BigRational v = inv_prod(s, den, p, k, p.m, 1, 2);
          return (alternating && alt1(k) < 0) ? -v : v;
        });
        BigRational scale =
            pre == 'L' ? BigRational(s.lucas(static_cast<std::uint64_t>(p.m * p.n * p.q)))
                       : (pre == 'F' ? BigRational(s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q)))
                                     : BigRational(5 * s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q))));
        return rat(acc / scale);
      };
      std::string pre_text = pre == 'L' ? "L[mnq]" : (pre == 'F' ? "F[mnq]" : "5*F[mnq]");
      std::string sign_text = alternating ? "(-1)^(k-1) " : "";
      b.add({std::string(fam.id) + (alternating ? "A" : ""), fam.source,
             fam.parity_text, fam.parity,
             SumSpec{alternating ? SignMode::AltK : SignMode::None,
                     {single(fam.num_kind, 1, 1)},
                     {jprod(fam.den_kind, 0, 0, 1, 0, 1, 2)}},
             rhs,
             "(1/" + pre_text + ") sum_{k=1..2q} " + sign_text + "1/prod_{j=0..m-1} " +
                 (den == SK::Fib ? "F" : "L") + "[nk+2jnq]"});
    }
  }

  // --- families H/I: indices at 2nk, RHS sums to q
  struct DoubledFamily {
    const char* id;
    const char* source;
    SK num_kind, den_kind;
    char prefactor;
    bool alternating;
    std::function<bool(const Params&)> parity;
    const char* parity_text;
  };
  const DoubledFamily doubled[] = {
      {"H1", "yj680l9", SK::Fib, SK::Fib, 'L', false, kAllOdd, kTextAllOdd},
      {"H2", "jarxg8t", SK::Fib, SK::Fib, 'L', true, kQOddNMEven, kTextQOddNMEven},
      {"H3", "un8i8oz", SK::Lucas, SK::Fib, 'F', false, kMNQEven, kTextMNQEven},
      {"H4", "m05lv0w", SK::Lucas, SK::Fib, 'F', true, kQEvenOrMNQOdd, kTextQEvenOrMNQOdd},
      {"I1", "dbl-lucas-L", SK::Lucas, SK::Lucas, 'L', false, kAllOdd, kTextAllOdd},
      {"I2", "dbl-lucas-L-alt", SK::Lucas, SK::Lucas, 'L', true, kQOddNMEven, kTextQOddNMEven},
      {"I3", "dbl-lucas-F", SK::Fib, SK::Lucas, '5', false, kMNQEven, kTextMNQEven},
      {"I4", "dbl-lucas-F-alt", SK::Fib, SK::Lucas, '5', true, kQEvenOrMNQOdd, kTextQEvenOrMNQOdd},
  };
  for (const auto& fam : doubled) {
    SK den = fam.den_kind;
    char pre = fam.prefactor;
    bool alternating = fam.alternating;
    auto rhs = [den, pre, alternating](Sequences& s, const Params& p) {
      BigRational acc = ksum(p.q, [&](long long k) {
        BigRational v = inv_prod(s, den, p, k, p.m, 1, 2, 2);
        return (alternating && alt1(k) < 0) ? -v : v;
      });
      BigRational scale =
          pre == 'L' ? BigRational(s.lucas(static_cast<std::uint64_t>(p.m * p.n * p.q)))
                     : (pre == 'F' ? BigRational(s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q)))
                                   : BigRational(5 * s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q))));
      return rat(acc / scale);
    };
    std::string pre_text = pre == 'L' ? "L[mnq]" : (pre == 'F' ? "F[mnq]" : "5*F[mnq]");
    std::string sign_text = alternating ? "(-1)^(k-1) " : "";
    b.add({fam.id, fam.source, fam.parity_text, fam.parity,
           SumSpec{alternating ? SignMode::AltK : SignMode::None,
                   {single(fam.num_kind, 2, 1)},
                   {jprod(fam.den_kind, 0, 0, 1, 0, 2, 2)}},
           rhs,
           "(1/" + pre_text + ") sum_{k=1..q} " + sign_text + "1/prod_{j=0..m-1} " +
               (den == SK::Fib ? "F" : "L") + "[2nk+2jnq]"});
  }

  // --- family J: squared F denominators
  SumSpec j1_lhs{SignMode::None,
                 {single(SK::Fib, 2, 1)},
                 {jprod(SK::Fib, 0, 0, 1, 0, 1, 1, 0, 0, 2)}};
  b.add({"J1", "kvn1tje", kTextMNQEven, kMNQEven, j1_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) { return inv_prod(s, SK::Fib, p, k, p.m, 2); });
           return rat(acc / BigRational(fm));
         },
         "(1/F[mnq]) sum_{k=1..q} 1/prod_{j=0..m-1} F[nk+jnq]^2"});
  b.add({"J2", "hblrah9", kTextQEvenOrMNQOdd, kQEvenOrMNQOdd,
         SumSpec{SignMode::AltK, j1_lhs.numerator, j1_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod(s, SK::Fib, p, k, p.m, 2);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(fm));
         },
         "(1/F[mnq]) sum_{k=1..q} (-1)^(k-1)/prod_{j=0..m-1} F[nk+jnq]^2"});

  SumSpec j1c_lhs{SignMode::None,
                  {single(SK::Lucas, 1, 1)},
                  {single(SK::Fib, 1, 1), jprod(SK::Fib, 0, 0, 1, -1, 1, 1, 0, 0, 2),
                   jprod(SK::Fib, 1, 1, 2, 0, 1, 1, 0, 0, 2)}};
  b.add({"J1c", "rh1ujkm", kTextAlways, kAlways, j1c_lhs,
         [](Sequences& s, const Params& p) {
           BigInt f2m = s.fib(static_cast<std::uint64_t>(2 * p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) { return inv_prod(s, SK::Fib, p, k, 2 * p.m, 2); });
           return rat(acc / BigRational(f2m));
         },
         "(1/F[2mnq]) sum_{k=1..q} 1/prod_{j=0..2m-1} F[nk+jnq]^2",
         Summation::Direct, std::nullopt,
         "squared factors spaced nq apart, matching the parent theorem at 2m"});
  b.add({"J2c", "p79aeki", kTextQEven, kQEven,
         SumSpec{SignMode::AltK, j1c_lhs.numerator, j1c_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt f2m = s.fib(static_cast<std::uint64_t>(2 * p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod(s, SK::Fib, p, k, 2 * p.m, 2);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(f2m));
         },
         "(1/F[2mnq]) sum_{k=1..q} (-1)^(k-1)/prod_{j=0..2m-1} F[nk+jnq]^2"});

  SumSpec j3_lhs{SignMode::AltNK,
                 {single(SK::Fib, 2, 1), jprod(SK::Lucas, 0, 1, 1, -1, 1, 1, 0, 0, 2)},
                 {jprod(SK::Fib, 0, 0, 1, 0, 1, 1, 0, 0, 2)}};
  b.add({"J3", "xlspejf", kTextAlways, kAlways, j3_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigInt five_m;
           mpz_ui_pow_ui(five_m.get_mpz_t(), 5, static_cast<unsigned long>(p.m));
           BigRational head = ksum(p.q, [&](long long k) {
             return prod_ratio(s, SK::Lucas, SK::Fib, p, k, p.m, 0, 2);
           });
           return rat(BigRational(five_m * to_bigint(p.q), 4 * fm) - head / BigRational(4 * fm));
         },
         "5^m*q/(4*F[mnq]) - (1/(4*F[mnq])) sum_{k=1..q} prod_{j=0..m-1} L[nk+jnq]^2/F[nk+jnq]^2"});
  b.add({"J4", "wxp5pic", kTextNOddQEven, kNOddQEven,
         SumSpec{SignMode::None, j3_lhs.numerator, j3_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = prod_ratio(s, SK::Lucas, SK::Fib, p, k, p.m, 0, 2);
             return alt1(k) > 0 ? -v : v;  // (-1)^k
           });
           return rat(acc / BigRational(4 * fm));
         },
         "(1/(4*F[mnq])) sum_{k=1..q} (-1)^k prod_{j=0..m-1} L[nk+jnq]^2/F[nk+jnq]^2"});

  // --- family K: squared Lucas denominators
  SumSpec k1_lhs{SignMode::None,
                 {single(SK::Fib, 2, 1)},
                 {jprod(SK::Lucas, 0, 0, 1, 0, 1, 1, 0, 0, 2)}};
  b.add({"K1", "wfq1axk", kTextMNQEven, kMNQEven, k1_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) { return inv_prod(s, SK::Lucas, p, k, p.m, 2); });
           return rat(acc / BigRational(5 * fm));
         },
         "(1/(5*F[mnq])) sum_{k=1..q} 1/prod_{j=0..m-1} L[nk+jnq]^2"});
  b.add({"K2", "t9u45bs", kTextQEvenOrMNQOdd, kQEvenOrMNQOdd,
         SumSpec{SignMode::AltK, k1_lhs.numerator, k1_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod(s, SK::Lucas, p, k, p.m, 2);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(5 * fm));
         },
         "(1/(5*F[mnq])) sum_{k=1..q} (-1)^(k-1)/prod_{j=0..m-1} L[nk+jnq]^2"});

  SumSpec k1c_lhs{SignMode::None,
                  {single(SK::Fib, 1, 1)},
                  {single(SK::Lucas, 1, 1), jprod(SK::Lucas, 0, 0, 1, -1, 1, 1, 0, 0, 2),
                   jprod(SK::Lucas, 1, 1, 2, 0, 1, 1, 0, 0, 2)}};
  b.add({"K1c", "v07bx6w", kTextAlways, kAlways, k1c_lhs,
         [](Sequences& s, const Params& p) {
           BigInt f2m = s.fib(static_cast<std::uint64_t>(2 * p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) { return inv_prod(s, SK::Lucas, p, k, 2 * p.m, 2); });
           return rat(acc / BigRational(5 * f2m));
         },
         "(1/(5*F[2mnq])) sum_{k=1..q} 1/prod_{j=0..2m-1} L[nk+jnq]^2"});
  b.add({"K2c", "uho7fyr", kTextQEven, kQEven,
         SumSpec{SignMode::AltK, k1c_lhs.numerator, k1c_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt f2m = s.fib(static_cast<std::uint64_t>(2 * p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod(s, SK::Lucas, p, k, 2 * p.m, 2);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(5 * f2m));
         },
         "(1/(5*F[2mnq])) sum_{k=1..q} (-1)^(k-1)/prod_{j=0..2m-1} L[nk+jnq]^2"});

  SumSpec k3_lhs{SignMode::AltNK,
                 {single(SK::Fib, 2, 1), jprod(SK::Fib, 0, 1, 1, -1, 1, 1, 0, 0, 2)},
                 {jprod(SK::Lucas, 0, 0, 1, 0, 1, 1, 0, 0, 2)}};
  b.add({"K3", "fw565ya", kTextAlways, kAlways, k3_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigInt five_m;
           mpz_ui_pow_ui(five_m.get_mpz_t(), 5, static_cast<unsigned long>(p.m));
           BigRational head = ksum(p.q, [&](long long k) {
             return prod_ratio(s, SK::Fib, SK::Lucas, p, k, p.m, 0, 2);
           });
           return rat(head / BigRational(4 * fm) - BigRational(to_bigint(p.q), 4 * fm * five_m));
         },
         "(1/(4*F[mnq])) sum_{k=1..q} prod_{j=0..m-1} F[nk+jnq]^2/L[nk+jnq]^2 - q/(4*F[mnq]*5^m)"});
  b.add({"K4", "qwgs5xu", kTextNOddQEven, kNOddQEven,
         SumSpec{SignMode::None, k3_lhs.numerator, k3_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = prod_ratio(s, SK::Fib, SK::Lucas, p, k, p.m, 0, 2);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(4 * fm));
         },
         "(1/(4*F[mnq])) sum_{k=1..q} (-1)^(k-1) prod_{j=0..m-1} F[nk+jnq]^2/L[nk+jnq]^2"});

  // --- families L/M: paired factors at offset np, p >= 0
  SumSpec l_lhs{SignMode::None,
                {single(SK::Fib, 2, 1, 1)},
                {jprod(SK::Fib, 0, 0, 1, 0), jprod(SK::Fib, 0, 0, 1, 0, 1, 1, 1)},
                true};
  b.add({"L1", "byyca8f", kTextMNQEvenP,
         [](const Params& p) { return (p.m * p.n * p.q) % 2 == 0 && p.p >= 0; }, l_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) { return inv_prod_pair(s, SK::Fib, p, k, p.m); });
           return rat(acc / BigRational(fm));
         },
         "(1/F[mnq]) sum_{k=1..q} 1/prod_{j=0..m-1} F[nk+jnq]*F[nk+jnq+np]"});
  b.add({"L2", "xbwcpz1", kTextMNQOddOrQEvenP,
         [](const Params& p) { return ((p.m * p.n * p.q) % 2 == 1 || p.q % 2 == 0) && p.p >= 0; },
         SumSpec{SignMode::AltK, l_lhs.numerator, l_lhs.denominator, true},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod_pair(s, SK::Fib, p, k, p.m);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(fm));
         },
         "(1/F[mnq]) sum_{k=1..q} (-1)^(k-1)/prod_{j=0..m-1} F[nk+jnq]*F[nk+jnq+np]"});

  SumSpec m_lhs{SignMode::None,
                {single(SK::Fib, 2, 1, 1)},
                {jprod(SK::Lucas, 0, 0, 1, 0), jprod(SK::Lucas, 0, 0, 1, 0, 1, 1, 1)},
                true};
  b.add({"M1", "ckvmm33", kTextMNQEvenP,
         [](const Params& p) { return (p.m * p.n * p.q) % 2 == 0 && p.p >= 0; }, m_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) { return inv_prod_pair(s, SK::Lucas, p, k, p.m); });
           return rat(acc / BigRational(5 * fm));
         },
         "(1/(5*F[mnq])) sum_{k=1..q} 1/prod_{j=0..m-1} L[nk+jnq]*L[nk+jnq+np]"});
  b.add({"M2", "v7eumk9", kTextMNQOddOrQEvenP,
         [](const Params& p) { return ((p.m * p.n * p.q) % 2 == 1 || p.q % 2 == 0) && p.p >= 0; },
         SumSpec{SignMode::AltK, m_lhs.numerator, m_lhs.denominator, true},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod_pair(s, SK::Lucas, p, k, p.m);
             return alt1(k) > 0 ? v : -v;
           });
           return rat(acc / BigRational(5 * fm));
         },
         "(1/(5*F[mnq])) sum_{k=1..q} (-1)^(k-1)/prod_{j=0..m-1} L[nk+jnq]*L[nk+jnq+np]"});

  // --- family N: shifted square numerators and the closing fixed sums
  SumSpec n1_lhs{SignMode::AltNK,
                 {single(SK::Fib, 2, 1, 0, 2), jprod(SK::Fib, 0, 1, 1, -1, 1, 1, 0, 1, 2)},
                 {jprod(SK::Fib, 0, 0, 1, 0), jprod(SK::Fib, 0, 0, 1, 0, 1, 1, 0, 2)}};
  b.add({"N1", "jq353ph", kTextAlways, kAlways, n1_lhs,
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational head = ksum(p.q, [&](long long k) { return squared_shift_ratio(s, p, k, p.m); });
           return rat(BigRational(to_bigint(p.q), fm) - head / BigRational(fm));
         },
         "q/F[mnq] - (1/F[mnq]) sum_{k=1..q} prod_{j=0..m-1} F[nk+jnq+1]^2/(F[nk+jnq]*F[nk+jnq+2])"});
  b.add({"N2", "tpgmuma", kTextNOddQEven, kNOddQEven,
         SumSpec{SignMode::None, n1_lhs.numerator, n1_lhs.denominator},
         [](Sequences& s, const Params& p) {
           BigInt fm = s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q));
           BigRational acc = ksum(p.q, [&](long long k) {
             BigRational v = squared_shift_ratio(s, p, k, p.m);
             return alt1(k) > 0 ? -v : v;  // (-1)^k, once per term
           });
           return rat(acc / BigRational(fm));
         },
         "(1/F[mnq]) sum_{k=1..q} (-1)^k prod_{j=0..m-1} F[nk+jnq+1]^2/(F[nk+jnq]*F[nk+jnq+2])"});

  // closing fixed sums; each accepts exactly its frozen parameter tuple
  auto frozen_rhs = [](long num, long den) {
    return [num, den](Sequences&, const Params&) { return QuadRat(BigRational(num, den)); };
  };
  b.add({"N3", "closing-F", "fixed sum (no free parameters)",
         [](const Params& p) { return p.m == 1 && p.n == 1 && p.q == 1 && p.p == 0; },
         SumSpec{SignMode::None,
                 {single(SK::Fib, 2, 0, 0, 3)},
                 {single(SK::Fib, 1, 0, 0, 0, 2), single(SK::Fib, 1, 0, 0, 0, 2),
                  single(SK::Fib, 1, 0, 0, 1, 2), single(SK::Fib, 1, 0, 0, 1, 1),
                  single(SK::Fib, 1, 0, 0, 2, 2), single(SK::Fib, 1, 0, 0, 2, 1),
                  single(SK::Fib, 1, 0, 0, 3, 2), single(SK::Fib, 1, 0, 0, 3, 2)}},
         frozen_rhs(1, 128), "1/128", Summation::Direct, Params{1, 1, 1, 0},
         "sum F[2k+3]/(F[k]^4 F[k+1]^3 F[k+2]^3 F[k+3]^4)"});
  b.add({"N3L", "closing-L", "fixed sum (no free parameters)",
         [](const Params& p) { return p.m == 1 && p.n == 1 && p.q == 1 && p.p == 0; },
         SumSpec{SignMode::None,
                 {single(SK::Fib, 2, 0, 0, 3)},
                 {single(SK::Lucas, 1, 0, 0, 0, 2), single(SK::Lucas, 1, 0, 0, 0, 2),
                  single(SK::Lucas, 1, 0, 0, 1, 2), single(SK::Lucas, 1, 0, 0, 1, 1),
                  single(SK::Lucas, 1, 0, 0, 2, 2), single(SK::Lucas, 1, 0, 0, 2, 1),
                  single(SK::Lucas, 1, 0, 0, 3, 2), single(SK::Lucas, 1, 0, 0, 3, 2)}},
         frozen_rhs(1, 829440), "1/829440", Summation::Direct, Params{1, 1, 1, 0},
         "sum F[2k+3]/(L[k]^4 L[k+1]^3 L[k+2]^3 L[k+3]^4)"});
  b.add({"N4", "closing-F-triple", "fixed sum (no free parameters)",
         [](const Params& p) { return p.m == 1 && p.n == 3 && p.q == 1 && p.p == 0; },
         SumSpec{SignMode::None,
                 {single(SK::Fib, 1, 0, 0, 1), single(SK::Fib, 1, 0, 0, 2), single(SK::Fib, 2, 1)},
                 {single(SK::Fib, 1, 0, 0, 0, 2), single(SK::Fib, 1, 0, 0, 0, 2),
                  single(SK::Fib, 1, 1, 0, 0, 2), single(SK::Fib, 1, 1, 0, 0, 2)}},
         frozen_rhs(1, 128), "1/128", Summation::Direct, Params{1, 3, 1, 0},
         "sum F[3k+1]*F[3k+2]*F[6k+3]/(F[3k]^4 F[3k+3]^4)"});
  b.add({"N4L", "closing-L-triple", "fixed sum (no free parameters)",
         [](const Params& p) { return p.m == 1 && p.n == 3 && p.q == 1 && p.p == 0; },
         SumSpec{SignMode::None,
                 {single(SK::Lucas, 1, 0, 0, 1), single(SK::Lucas, 1, 0, 0, 2), single(SK::Fib, 2, 1)},
                 {single(SK::Lucas, 1, 0, 0, 0, 2), single(SK::Lucas, 1, 0, 0, 0, 2),
                  single(SK::Lucas, 1, 1, 0, 0, 2), single(SK::Lucas, 1, 1, 0, 0, 2)}},
         frozen_rhs(1, 10240), "1/10240", Summation::Direct, Params{1, 3, 1, 0},
         "sum L[3k+1]*L[3k+2]*F[6k+3]/(L[3k]^4 L[3k+3]^4)"});

  return std::move(b.entries);
}

std::string sign_str(SignMode mode) {
  switch (mode) {
    case SignMode::None: return "none";
    case SignMode::AltK: return "alt-k";
    case SignMode::AltNK: return "alt-nk";
  }
  return "none";
}

std::string factor_str(const FactorTemplate& t, bool with_power = true) {
  std::ostringstream os;
  os << (t.kind == SK::Fib ? "F" : "L") << "[";
  if (t.k_scale == 2) os << "2nk";
  else os << "nk";
  if (t.j_step == 1) os << "+jnq";
  else if (t.j_step == 2) os << "+2jnq";
  if (t.mnq == 1) os << "+mnq";
  if (t.np == 1) os << "+np";
  if (t.cst != 0) os << "+" << t.cst;
  os << "]";
  if (with_power && t.power == 2) os << "^2";
  if (t.j_step != 0) {
    os << ":j=";
    auto bound = [&](int mc, int c) {
      std::ostringstream bs;
      if (mc == 0) bs << c;
      else {
        if (mc == 1) bs << "m";
        else bs << mc << "m";
        if (c > 0) bs << "+" << c;
        else if (c < 0) bs << c;
      }
      return bs.str();
    };
    os << bound(t.j_lo_m, t.j_lo_c) << ".." << bound(t.j_hi_m, t.j_hi_c);
  }
  return os.str();
}

std::string factors_str(const std::vector<FactorTemplate>& ts) {
  if (ts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += " * ";
    out += factor_str(ts[i]);
  }
  return out;
}

}  // namespace

std::vector<Factor> SumSpec::bind(const std::vector<FactorTemplate>& templates,
                                  const Params& prm) const {
  std::vector<Factor> out;
  for (const auto& t : templates) {
    long long base = static_cast<long long>(t.mnq) * prm.m * prm.n * prm.q +
                     static_cast<long long>(t.np) * prm.n * prm.p + t.cst;
    long long k_coeff = static_cast<long long>(t.k_scale) * prm.n;
    if (t.j_step == 0) {
      out.push_back({t.kind, k_coeff, base, t.power});
      continue;
    }
    long long lo = static_cast<long long>(t.j_lo_m) * prm.m + t.j_lo_c;
    long long hi = static_cast<long long>(t.j_hi_m) * prm.m + t.j_hi_c;
    for (long long j = lo; j <= hi; ++j) {
      out.push_back({t.kind, k_coeff, base + j * t.j_step * prm.n * prm.q, t.power});
    }
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  const CatalogEntry* e = find_entry(id);
  if (!e) throw UnknownIdError("unknown catalog entry: " + id);
  return *e;
}

std::vector<const CatalogEntry*> catalog_matching(const std::string& prefix) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog()) {
    if (e.id.rfind(prefix, 0) == 0) out.push_back(&e);
  }
  return out;
}

bool validate_params(const CatalogEntry& entry, const Params& prm) {
  if (prm.m < 1 || prm.n < 1 || prm.q < 1 || prm.p < 0) return false;
  if (!entry.lhs.uses_p && prm.p != 0) return false;
  return entry.parity(prm);
}

BigRational term_at(Sequences& seq, const CatalogEntry& entry, const Params& prm,
                    long long k) {
  if (k < 1) throw DomainError("term_at: k must be >= 1");
  if (!validate_params(entry, prm)) {
    throw DomainError("entry " + entry.id + ": parameters violate \"" + entry.parity_text + "\"");
  }
  BigInt num = 1, den = 1;
  for (const auto& f : entry.lhs.bind(entry.lhs.numerator, prm)) {
    BigInt v = seq_value(seq, f.kind, f.k_coeff * k + f.offset);
    for (int e = 0; e < f.power; ++e) num *= v;
  }
  for (const auto& f : entry.lhs.bind(entry.lhs.denominator, prm)) {
    BigInt v = seq_value(seq, f.kind, f.k_coeff * k + f.offset);
    for (int e = 0; e < f.power; ++e) den *= v;
  }
  BigRational value(num, den);
  return sign_at(entry.lhs.sign, prm.n, k) < 0 ? -value : value;
}

QuadRat closed_form(Sequences& seq, const CatalogEntry& entry, const Params& prm) {
  if (!validate_params(entry, prm)) {
    throw DomainError("entry " + entry.id + ": parameters violate \"" + entry.parity_text + "\"");
  }
  return entry.rhs_builder(seq, prm);
}

BigRational partial_sum(Sequences& seq, const CatalogEntry& entry, const Params& prm,
                        long long N) {
  if (N < 0) throw DomainError("partial_sum: N must be >= 0");
  BigRational acc = 0;
  for (long long k = 1; k <= N; ++k) acc += term_at(seq, entry, prm, k);
  return acc;
}

BigRational certified_partial(Sequences& seq, const CatalogEntry& entry,
                              const Params& prm, long long N) {
  BigRational s_n = partial_sum(seq, entry, prm, N);
  if (entry.summation == Summation::Direct) return s_n;
  BigRational s_next = s_n + term_at(seq, entry, prm, N + 1);
  return (s_n + s_next) / BigRational(2);
}

std::string dump_entry(const CatalogEntry& entry) {
  std::ostringstream os;
  os << "entry " << entry.id << "\n";
  os << "  source     " << entry.source << "\n";
  os << "  sign       " << sign_str(entry.lhs.sign) << "\n";
  os << "  parity     " << entry.parity_text << "\n";
  os << "  summation  "
     << (entry.summation == Summation::Direct ? "direct" : "mean-of-partials") << "\n";
  os << "  numerator  " << factors_str(entry.lhs.numerator) << "\n";
  os << "  denominator " << factors_str(entry.lhs.denominator) << "\n";
  os << "  rhs        " << entry.rhs_text << "\n";
  if (!entry.notes.empty()) os << "  notes      " << entry.notes << "\n";
  return os.str();
}

}  // namespace fibsum
