#include "fibsum/finite_identities.hpp"

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

using SK = SeqKind;

int pow_m1(long long e) { return e % 2 == 0 ? 1 : -1; }
int alt1(long long k) { return pow_m1(k - 1); }  // (-1)^(k-1)

BigInt sv(Sequences& s, SK kind, long long i) {
  if (i < 0) throw DomainError("sequence index underflow");
  auto n = static_cast<std::uint64_t>(i);
  return kind == SK::Fib ? s.fib(n) : s.lucas(n);
}

// prod_{j=0}^{count-1} top(n(k+N)+jnq+off)^pw / bot(n(k+N)+jnq)^pw
BigRational ratio_prod(Sequences& s, SK top, SK bot, const Params& p, long long k,
                       long long count, long long N = 0, long long off = 0, int pw = 1) {
  BigRational acc = 1;
  for (long long j = 0; j < count; ++j) {
    long long i = p.n * (k + N) + j * p.n * p.q;
    BigRational v = BigRational(sv(s, top, i + off)) / BigRational(sv(s, bot, i));
    for (int e = 0; e < pw; ++e) acc *= v;
  }
  return acc;
}

// 1 / prod_{j=0}^{count-1} kind(kscale*n*(k+N) + j*jstep*nq)^pw
BigRational inv_prod(Sequences& s, SK kind, const Params& p, long long k, long long count,
                     long long N = 0, int jstep = 1, int kscale = 1, int pw = 1) {
  BigInt den = 1;
  for (long long j = 0; j < count; ++j) {
    BigInt v = sv(s, kind, kscale * p.n * (k + N) + j * jstep * p.n * p.q);
    for (int e = 0; e < pw; ++e) den *= v;
  }
  return BigRational(BigInt(1), den);
}

// 1 / prod_{j=0}^{count-1} kind(i) * kind(i+np), i = n(k+N)+jnq
BigRational inv_prod_pair(Sequences& s, SK kind, const Params& p, long long k,
                          long long count, long long N = 0) {
  BigInt den = 1;
  for (long long j = 0; j < count; ++j) {
    long long i = p.n * (k + N) + j * p.n * p.q;
    den *= sv(s, kind, i) * sv(s, kind, i + p.n * p.p);
  }
  return BigRational(BigInt(1), den);
}

// prod_{j=0}^{count-1} F(i+1)^2/(F(i)F(i+2)), i = n(k+N)+jnq
BigRational shift_sq_ratio(Sequences& s, const Params& p, long long k, long long count,
                           long long N = 0) {
  BigRational acc = 1;
  for (long long j = 0; j < count; ++j) {
    long long i = p.n * (k + N) + j * p.n * p.q;
    BigRational f1(sv(s, SK::Fib, i + 1));
    acc *= f1 * f1 / (BigRational(sv(s, SK::Fib, i)) * BigRational(sv(s, SK::Fib, i + 2)));
  }
  return acc;
}

template <typename TermFn>
BigRational ksum(long long hi, TermFn&& term) {
  BigRational acc = 0;
  for (long long k = 1; k <= hi; ++k) acc += term(k);
  return acc;
}

BigInt F(Sequences& s, long long i) { return sv(s, SK::Fib, i); }
BigInt L(Sequences& s, long long i) { return sv(s, SK::Lucas, i); }

// prod_{j=1}^{m-1} top(nk+jnq+off) / prod_{j=0}^{m} bot(nk+jnq)
BigRational plain_ratio_summand(Sequences& s, SK top, SK bot, const Params& p, long long k,
                                long long off) {
  BigInt num = 1, den = 1;
  for (long long j = 1; j <= p.m - 1; ++j) num *= sv(s, top, p.n * k + j * p.n * p.q + off);
  for (long long j = 0; j <= p.m; ++j) den *= sv(s, bot, p.n * k + j * p.n * p.q);
  return BigRational(num, den);
}

BigRational mnq_fib(Sequences& s, const Params& p) {
  return BigRational(s.fib(static_cast<std::uint64_t>(p.m * p.n * p.q)));
}
BigRational mnq_lucas(Sequences& s, const Params& p) {
  return BigRational(s.lucas(static_cast<std::uint64_t>(p.m * p.n * p.q)));
}

// N-term partial sum of a catalog entry, scaled
std::function<BigRational(Sequences&, const Params&, long long)> entry_sum(
    const char* entry_id,
    std::function<BigRational(Sequences&, const Params&)> coeff) {
  std::string id = entry_id;
  return [id, coeff](Sequences& s, const Params& p, long long N) {
    return coeff(s, p) * partial_sum(s, catalog_entry(id), p, N);
  };
}

const auto kNoConstraint = [](const Params&) { return true; };
const auto kQOdd = [](const Params& p) { return p.q % 2 == 1; };
const auto kQEven = [](const Params& p) { return p.q % 2 == 0; };
const auto kMNQOdd = [](const Params& p) { return (p.m * p.n * p.q) % 2 == 1; };
const auto kMNQEven = [](const Params& p) { return (p.m * p.n * p.q) % 2 == 0; };
const auto kQOddMNEven = [](const Params& p) { return p.q % 2 == 1 && (p.m * p.n) % 2 == 0; };
const auto kQEvenOrMNQOdd = [](const Params& p) { return p.q % 2 == 0 || (p.m * p.n * p.q) % 2 == 1; };

std::vector<FiniteIdentity> build_table() {
  std::vector<FiniteIdentity> t;
  auto add = [&t](FiniteIdentity f) { t.push_back(std::move(f)); };

  // ---- A/B product telescopes
  add({"oy4215f", "2*F[mnq] * sum A1-terms = shifted head sum - head sum", "", false, true,
       kNoConstraint,
       entry_sum("A1", [](Sequences& s, const Params& p) { return 2 * mnq_fib(s, p); }),
       [](Sequences& s, const Params& p, long long N) {
         return ksum(p.q, [&](long long k) { return ratio_prod(s, SK::Lucas, SK::Fib, p, k, p.m, N); }) -
                ksum(p.q, [&](long long k) { return ratio_prod(s, SK::Lucas, SK::Fib, p, k, p.m); });
       }});
  add({"rcy3566", "2*F[mnq] * sum B1-terms = head sum - shifted head sum", "", false, true,
       kNoConstraint,
       entry_sum("B1", [](Sequences& s, const Params& p) { return 2 * mnq_fib(s, p); }),
       [](Sequences& s, const Params& p, long long N) {
         return ksum(p.q, [&](long long k) { return ratio_prod(s, SK::Fib, SK::Lucas, p, k, p.m); }) -
                ksum(p.q, [&](long long k) { return ratio_prod(s, SK::Fib, SK::Lucas, p, k, p.m, N); });
       }});
  add({"bo7m7gb", "2 * sum A5-terms = alternating head + oscillating shifted head", "q is odd",
       false, true, kQOdd,
       entry_sum("A5", [](Sequences&, const Params&) { return BigRational(2); }),
       [](Sequences& s, const Params& p, long long N) {
         BigRational head = ksum(p.q, [&](long long k) {
           BigRational v = ratio_prod(s, SK::Lucas, SK::Fib, p, k, p.m);
           return alt1(k) > 0 ? v : -v;
         });
         BigRational shifted = ksum(p.q, [&](long long k) {
           BigRational v = ratio_prod(s, SK::Lucas, SK::Fib, p, k, p.m, N);
           return alt1(k) > 0 ? v : -v;
         });
         return pow_m1(N - 1) > 0 ? head + shifted : head - shifted;
       }});
  add({"s11wekj", "2 * sum B5-terms = alternating head + oscillating shifted head", "q is odd",
       false, true, kQOdd,
       entry_sum("B5", [](Sequences&, const Params&) { return BigRational(2); }),
       [](Sequences& s, const Params& p, long long N) {
         BigRational head = ksum(p.q, [&](long long k) {
           BigRational v = ratio_prod(s, SK::Fib, SK::Lucas, p, k, p.m);
           return alt1(k) > 0 ? v : -v;
         });
         BigRational shifted = ksum(p.q, [&](long long k) {
           BigRational v = ratio_prod(s, SK::Fib, SK::Lucas, p, k, p.m, N);
           return alt1(k) > 0 ? v : -v;
         });
         return pow_m1(N - 1) > 0 ? head + shifted : head - shifted;
       }});
  add({"a6fin", "F[mnq]*F[np] * sum A6-terms = shifted head - head", "p is a positive integer",
       true, true, [](const Params& p) { return p.p >= 1; },
       entry_sum("A6",
                 [](Sequences& s, const Params& p) {
                   return mnq_fib(s, p) * BigRational(s.fib(static_cast<std::uint64_t>(p.n * p.p)));
                 }),
       [](Sequences& s, const Params& p, long long N) {
         long long off = p.n * p.p;
         return ksum(p.q, [&](long long k) { return ratio_prod(s, SK::Fib, SK::Fib, p, k, p.m, N, off); }) -
                ksum(p.q, [&](long long k) { return ratio_prod(s, SK::Fib, SK::Fib, p, k, p.m, 0, off); });
       }});
  // a7fin holds for any n (the alternating lemma needs only q even), so the
  // sum is evaluated directly instead of through the n-odd entry A7
  add({"a7fin", "F[mnq]*F[np] * sum of plain A6-shape terms = oscillating alternating heads",
       "n is odd and q is even; p is a positive integer", true, true,
       [](const Params& p) { return p.n % 2 == 1 && p.q % 2 == 0 && p.p >= 1; },
       [](Sequences& s, const Params& p, long long N) {
         BigRational acc = ksum(N, [&](long long k) {
           return plain_ratio_summand(s, SK::Fib, SK::Fib, p, k, p.n * p.p);
         });
         return mnq_fib(s, p) * BigRational(s.fib(static_cast<std::uint64_t>(p.n * p.p))) * acc;
       },
       [](Sequences& s, const Params& p, long long N) {
         long long off = p.n * p.p;
         BigRational shifted = ksum(p.q, [&](long long k) {
           BigRational v = ratio_prod(s, SK::Fib, SK::Fib, p, k, p.m, N, off);
           return alt1(k) > 0 ? v : -v;
         });
         BigRational head = ksum(p.q, [&](long long k) {
           BigRational v = ratio_prod(s, SK::Fib, SK::Fib, p, k, p.m, 0, off);
           return alt1(k) > 0 ? v : -v;
         });
         return (pow_m1(N) > 0 ? shifted : -shifted) - head;
       }});
  add({"b6fin", "5*F[mnq]*F[np] * sum B6-terms = head - shifted head", "p is a positive integer",
       true, true, [](const Params& p) { return p.p >= 1; },
       entry_sum("B6",
                 [](Sequences& s, const Params& p) {
                   return 5 * mnq_fib(s, p) * BigRational(s.fib(static_cast<std::uint64_t>(p.n * p.p)));
                 }),
       [](Sequences& s, const Params& p, long long N) {
         long long off = p.n * p.p;
         return ksum(p.q, [&](long long k) { return ratio_prod(s, SK::Lucas, SK::Lucas, p, k, p.m, 0, off); }) -
                ksum(p.q, [&](long long k) { return ratio_prod(s, SK::Lucas, SK::Lucas, p, k, p.m, N, off); });
       }});
  add({"b7fin", "5*F[mnq]*F[np] * sum of plain B6-shape terms = oscillating alternating heads",
       "n is odd and q is even; p is a positive integer", true, true,
       [](const Params& p) { return p.n % 2 == 1 && p.q % 2 == 0 && p.p >= 1; },
       [](Sequences& s, const Params& p, long long N) {
         BigRational acc = ksum(N, [&](long long k) {
           return plain_ratio_summand(s, SK::Lucas, SK::Lucas, p, k, p.n * p.p);
         });
         return 5 * mnq_fib(s, p) * BigRational(s.fib(static_cast<std::uint64_t>(p.n * p.p))) * acc;
       },
       [](Sequences& s, const Params& p, long long N) {
         long long off = p.n * p.p;
         BigRational shifted = ksum(p.q, [&](long long k) {
           BigRational v = ratio_prod(s, SK::Lucas, SK::Lucas, p, k, p.m, N, off);
           return alt1(k) > 0 ? v : -v;
         });
         BigRational head = ksum(p.q, [&](long long k) {
           BigRational v = ratio_prod(s, SK::Lucas, SK::Lucas, p, k, p.m, 0, off);
           return alt1(k) > 0 ? v : -v;
         });
         return head + (pow_m1(N - 1) > 0 ? shifted : -shifted);
       }});

  // ---- E/G double-spaced families: head sums run k = 1..2q
  struct Spaced {
    const char* id;
    const char* entry;
    SK den;
    bool five;      // 5*F[mnq] prefactor instead of F/L
    char pre;       // 'L' or 'F'
    bool alternating;
    std::function<bool(const Params&)> valid;
    const char* constraint;
  };
  const Spaced spaced[] = {
      {"u640lbl", "E1", SK::Fib, false, 'L', false, kMNQOdd, "mnq is odd"},
      {"bdnv59h", "E1A", SK::Fib, false, 'L', true, kMNQOdd, "mnq is odd"},
      {"medhcfp", "E2", SK::Fib, false, 'F', false, kMNQEven, "mnq is even"},
      {"pmefb69", "E2A", SK::Fib, false, 'F', true, kMNQEven, "mnq is even"},
      {"r78m8j9", "G1", SK::Lucas, false, 'L', false, kMNQOdd, "mnq is odd"},
      {"ans99dd", "G1A", SK::Lucas, false, 'L', true, kMNQOdd, "mnq is odd"},
      {"en25r4r", "G2", SK::Lucas, true, 'F', false, kMNQEven, "mnq is even"},
      {"qa1qok6", "G2A", SK::Lucas, true, 'F', true, kMNQEven, "mnq is even"},
  };
  for (const auto& sp : spaced) {
    SK den = sp.den;
    bool alternating = sp.alternating;
    char pre = sp.pre;
    bool five = sp.five;
    auto coeff = [pre, five](Sequences& s, const Params& p) {
      BigRational c = pre == 'L' ? mnq_lucas(s, p) : mnq_fib(s, p);
      return five ? 5 * c : c;
    };
    add({sp.id,
         std::string(five ? "5*" : "") + (pre == 'L' ? "L[mnq]" : "F[mnq]") + " * sum " + sp.entry +
             "-terms vs head sums over k=1..2q",
         sp.constraint, false, true, sp.valid, entry_sum(sp.entry, coeff),
         [den, alternating](Sequences& s, const Params& p, long long N) {
           if (!alternating) {
             return ksum(2 * p.q, [&](long long k) { return inv_prod(s, den, p, k, p.m, 0, 2); }) -
                    ksum(2 * p.q, [&](long long k) { return inv_prod(s, den, p, k, p.m, N, 2); });
           }
           BigRational head = ksum(2 * p.q, [&](long long k) {
             BigRational v = inv_prod(s, den, p, k, p.m, 0, 2);
             return alt1(k) > 0 ? v : -v;
           });
           BigRational shifted = ksum(2 * p.q, [&](long long k) {
             BigRational v = inv_prod(s, den, p, k, p.m, N, 2);
             return alt1(k) > 0 ? v : -v;
           });
           return head + (pow_m1(N - 1) > 0 ? shifted : -shifted);
         }});
  }

  // ---- H/I doubled-index families: head sums run k = 1..q
  struct Doubled {
    const char* id;
    const char* entry;
    SK den;
    bool five;
    char pre;
    bool alternating;
    std::function<bool(const Params&)> valid;
    const char* constraint;
  };
  const Doubled doubled[] = {
      {"h1fin", "H1", SK::Fib, false, 'L', false, kMNQOdd, "mnq is odd"},
      {"h2fin", "H2", SK::Fib, false, 'L', true, kQOddMNEven, "q is odd and mn is even"},
      {"h3fin", "H3", SK::Fib, false, 'F', false, kMNQEven, "mnq is even"},
      {"h4fin", "H4", SK::Fib, false, 'F', true, kQEvenOrMNQOdd, "q is even or mnq is odd"},
      {"i1fin", "I1", SK::Lucas, false, 'L', false, kMNQOdd, "mnq is odd"},
      {"i2fin", "I2", SK::Lucas, false, 'L', true, kQOddMNEven, "q is odd and mn is even"},
      {"i3fin", "I3", SK::Lucas, true, 'F', false, kMNQEven, "mnq is even"},
      {"i4fin", "I4", SK::Lucas, true, 'F', true, kQEvenOrMNQOdd, "q is even or mnq is odd"},
  };
  for (const auto& db : doubled) {
    SK den = db.den;
    bool alternating = db.alternating;
    char pre = db.pre;
    bool five = db.five;
    auto coeff = [pre, five](Sequences& s, const Params& p) {
      BigRational c = pre == 'L' ? mnq_lucas(s, p) : mnq_fib(s, p);
      return five ? 5 * c : c;
    };
    add({db.id,
         std::string(five ? "5*" : "") + (pre == 'L' ? "L[mnq]" : "F[mnq]") + " * sum " + db.entry +
             "-terms vs head sums at doubled indices",
         db.constraint, false, true, db.valid, entry_sum(db.entry, coeff),
         [den, alternating](Sequences& s, const Params& p, long long N) {
           if (!alternating) {
             return ksum(p.q, [&](long long k) { return inv_prod(s, den, p, k, p.m, 0, 2, 2); }) -
                    ksum(p.q, [&](long long k) { return inv_prod(s, den, p, k, p.m, N, 2, 2); });
           }
           BigRational head = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod(s, den, p, k, p.m, 0, 2, 2);
             return alt1(k) > 0 ? v : -v;
           });
           BigRational shifted = ksum(p.q, [&](long long k) {
             BigRational v = inv_prod(s, den, p, k, p.m, N, 2, 2);
             return alt1(k) > 0 ? v : -v;
           });
           return head + (pow_m1(N - 1) > 0 ? shifted : -shifted);
         }});
  }

  // ---- J-family proof identities
  add({"j1fin", "sum J1-terms = (1/F[mnq]) * (head - shifted head) over squared products",
       "mnq is even", false, true, kMNQEven,
       entry_sum("J1", [](Sequences&, const Params&) { return BigRational(1); }),
       [](Sequences& s, const Params& p, long long N) {
         BigRational fm = mnq_fib(s, p);
         return (ksum(p.q, [&](long long k) { return inv_prod(s, SK::Fib, p, k, p.m, 0, 1, 1, 2); }) -
                 ksum(p.q, [&](long long k) { return inv_prod(s, SK::Fib, p, k, p.m, N, 1, 1, 2); })) /
                fm;
       }});
  add({"j3fin", "4*F[mnq] * sum J3-terms = shifted squared-ratio head - head", "", false, true,
       kNoConstraint,
       entry_sum("J3", [](Sequences& s, const Params& p) { return 4 * mnq_fib(s, p); }),
       [](Sequences& s, const Params& p, long long N) {
         return ksum(p.q, [&](long long k) { return ratio_prod(s, SK::Lucas, SK::Fib, p, k, p.m, N, 0, 2); }) -
                ksum(p.q, [&](long long k) { return ratio_prod(s, SK::Lucas, SK::Fib, p, k, p.m, 0, 0, 2); });
       }});

  // ---- L/M-family proof identities
  add({"l1fin", "F[mnq] * sum L1-terms = paired head - shifted paired head",
       "mnq is even; p is a non-negative integer", true, true, kMNQEven,
       entry_sum("L1", [](Sequences& s, const Params& p) { return mnq_fib(s, p); }),
       [](Sequences& s, const Params& p, long long N) {
         return ksum(p.q, [&](long long k) { return inv_prod_pair(s, SK::Fib, p, k, p.m); }) -
                ksum(p.q, [&](long long k) { return inv_prod_pair(s, SK::Fib, p, k, p.m, N); });
       }});
  add({"m1fin", "5*F[mnq] * sum M1-terms = paired Lucas head - shifted head",
       "mnq is even; p is a non-negative integer", true, true, kMNQEven,
       entry_sum("M1", [](Sequences& s, const Params& p) { return 5 * mnq_fib(s, p); }),
       [](Sequences& s, const Params& p, long long N) {
         return ksum(p.q, [&](long long k) { return inv_prod_pair(s, SK::Lucas, p, k, p.m); }) -
                ksum(p.q, [&](long long k) { return inv_prod_pair(s, SK::Lucas, p, k, p.m, N); });
       }});
  add({"m2fin", "5*F[mnq] * sum M2-terms = alternating paired heads",
       "mnq is odd or q is even; p is a non-negative integer", true, true,
       [](const Params& p) { return (p.m * p.n * p.q) % 2 == 1 || p.q % 2 == 0; },
       entry_sum("M2", [](Sequences& s, const Params& p) { return 5 * mnq_fib(s, p); }),
       [](Sequences& s, const Params& p, long long N) {
         BigRational head = ksum(p.q, [&](long long k) {
           BigRational v = inv_prod_pair(s, SK::Lucas, p, k, p.m);
           return alt1(k) > 0 ? v : -v;
         });
         BigRational shifted = ksum(p.q, [&](long long k) {
           BigRational v = inv_prod_pair(s, SK::Lucas, p, k, p.m, N);
           return alt1(k) > 0 ? v : -v;
         });
         return head + (pow_m1(N - 1) > 0 ? shifted : -shifted);
       }});

  // ---- N-family proof identity
  add({"n1fin", "F[mnq] * sum N1-terms = shifted square-ratio head - head", "", false, true,
       kNoConstraint,
       entry_sum("N1", [](Sequences& s, const Params& p) { return mnq_fib(s, p); }),
       [](Sequences& s, const Params& p, long long N) {
         return ksum(p.q, [&](long long k) { return shift_sq_ratio(s, p, k, p.m, N); }) -
                ksum(p.q, [&](long long k) { return shift_sq_ratio(s, p, k, p.m); });
       }});

  // ---- the three cross identities (no N; m and p unused)
  add({"x1", "(1/F[n]) sum F[nk+n]/F[nk] - (1/2) sum L[nk]/F[nk] = (q/2)*L[n]/F[n]",
       "m = 1 and p = 0 (unused)", false, false,
       [](const Params& p) { return p.m == 1 && p.p == 0; },
       [](Sequences& s, const Params& p, long long) {
         BigRational a = ksum(p.q, [&](long long k) {
           return BigRational(F(s, p.n * k + p.n)) / BigRational(F(s, p.n * k));
         });
         BigRational b = ksum(p.q, [&](long long k) {
           return BigRational(L(s, p.n * k)) / BigRational(F(s, p.n * k));
         });
         return a / BigRational(s.fib(static_cast<std::uint64_t>(p.n))) - b / BigRational(2);
       },
       [](Sequences& s, const Params& p, long long) {
         return BigRational(p.q) * BigRational(L(s, p.n)) /
                (BigRational(2) * BigRational(F(s, p.n)));
       }});
  add({"x2", "(1/2) sum (-1)^k L[nk]/F[nk] = (1/F[n]) sum (-1)^k F[nk+n]/F[nk]",
       "q is even; m = 1 and p = 0 (unused)", false, false,
       [](const Params& p) { return p.q % 2 == 0 && p.m == 1 && p.p == 0; },
       [](Sequences& s, const Params& p, long long) {
         BigRational acc = ksum(p.q, [&](long long k) {
           BigRational v = BigRational(L(s, p.n * k)) / BigRational(F(s, p.n * k));
           return alt1(k) > 0 ? -v : v;
         });
         return acc / BigRational(2);
       },
       [](Sequences& s, const Params& p, long long) {
         BigRational acc = ksum(p.q, [&](long long k) {
           BigRational v = BigRational(F(s, p.n * k + p.n)) / BigRational(F(s, p.n * k));
           return alt1(k) > 0 ? -v : v;
         });
         return acc / BigRational(s.fib(static_cast<std::uint64_t>(p.n)));
       }});
  add({"x3", "(1/2) sum (-1)^(k-1) F[nk]/L[nk] = (1/(5F[n])) sum (-1)^(k-1) L[nk+n]/L[nk]",
       "q is even; m = 1 and p = 0 (unused)", false, false,
       [](const Params& p) { return p.q % 2 == 0 && p.m == 1 && p.p == 0; },
       [](Sequences& s, const Params& p, long long) {
         BigRational acc = ksum(p.q, [&](long long k) {
           BigRational v = BigRational(F(s, p.n * k)) / BigRational(L(s, p.n * k));
           return alt1(k) > 0 ? v : -v;
         });
         return acc / BigRational(2);
       },
       [](Sequences& s, const Params& p, long long) {
         BigRational acc = ksum(p.q, [&](long long k) {
           BigRational v = BigRational(L(s, p.n * k + p.n)) / BigRational(L(s, p.n * k));
           return alt1(k) > 0 ? v : -v;
         });
         return acc / BigRational(5 * s.fib(static_cast<std::uint64_t>(p.n)));
       }});

  return t;
}

}  // namespace

const std::vector<FiniteIdentity>& finite_identities() {
  static const std::vector<FiniteIdentity> table = build_table();
  return table;
}

const FiniteIdentity* find_finite_identity(const std::string& id) {
  for (const auto& f : finite_identities()) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

const FiniteIdentity& finite_identity(const std::string& id) {
  const FiniteIdentity* f = find_finite_identity(id);
  if (!f) throw UnknownIdError("unknown finite identity: " + id);
  return *f;
}

}  // namespace fibsum
