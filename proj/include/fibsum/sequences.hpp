#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fibsum/quadratic.hpp"
#include "fibsum/rational.hpp"

namespace fibsum {

/// F_n and L_n for n >= 0 (F0=0, F1=1, L0=2, L1=1), computed by fast
/// doubling over (F_k, F_{k+1}) pairs with a per-instance memo cache.
/// Thread-safe: the cache is mutex-guarded, values are immutable once
/// inserted, and concurrent calls return identical values.
class Sequences {
 public:
  Sequences() = default;
  Sequences(const Sequences&) = delete;
  Sequences& operator=(const Sequences&) = delete;

  BigInt fib(std::uint64_t n);
  BigInt lucas(std::uint64_t n);  // L_n = 2*F_{n+1} - F_n

  /// phi^n = (L_n + F_n*sqrt5)/2, exactly; phi^0 = 1.
  QuadRat phi_pow(std::uint64_t n);
  /// phi^e for any integer e (negative exponents via exact inversion).
  QuadRat phi_pow_signed(long long e);
  /// sqrt5^m: 5^(m/2) for even m, 5^((m-1)/2)*sqrt5 for odd m.
  static QuadRat sqrt5_pow(std::uint64_t m);

  std::uint64_t cache_hits() const { return hits_.load(); }
  std::uint64_t cache_misses() const { return misses_.load(); }
  std::size_t cache_size() const;

 private:
  std::pair<BigInt, BigInt> fib_pair(std::uint64_t n);  // (F_n, F_{n+1})

  mutable std::mutex mu_;
  std::unordered_map<std::uint64_t, std::pair<BigInt, BigInt>> cache_;
  std::atomic<std::uint64_t> hits_{0}, misses_{0};
};

/// Process-wide shared instance (catalog verification reuses thousands of
/// nearby indices across checks).
Sequences& shared_sequences();

/// One probe of the ratio limits F_{N+m}/F_{N+n} -> phi^{m-n},
/// L_{N+m}/L_{N+n} -> phi^{m-n} and F_{N+m}/L_{N+n} -> phi^{m-n}/sqrt5.
struct LimitProbe {
  std::uint64_t N = 0;
  QuadRat err_fib_fib;    // |F_{N+m}/F_{N+n} - phi^{m-n}|, exact
  QuadRat err_lucas_lucas;
  QuadRat err_fib_lucas;
  // certified rational upper bounds on the three errors (ceiling at 60
  // fractional digits), for the report
  BigRational bound_fib_fib, bound_lucas_lucas, bound_fib_lucas;
};

struct LimitReport {
  long long m = 0, n = 0;
  std::vector<LimitProbe> probes;
  bool monotone = false;  // all three errors strictly decrease along N_list
                          // (non-strict where an error is exactly zero)
  bool pass = false;
};

/// Checks the ratio limits along a strictly increasing N_list. Every
/// comparison is exact; floating point is never consulted.
/// Requires N + m >= 0 and N + n >= 0 for every N.
LimitReport check_limits(Sequences& seq, long long m, long long n,
                         const std::vector<std::uint64_t>& N_list);

}  // namespace fibsum
