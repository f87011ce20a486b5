#include "fibsum/sequences.hpp"

namespace fibsum {

std::pair<BigInt, BigInt> Sequences::fib_pair(std::uint64_t n) {
  if (n == 0) return {BigInt(0), BigInt(1)};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it != cache_.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
  }
  misses_.fetch_add(1, std::memory_order_relaxed);

  // F_{2k} = F_k*(2*F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
  auto [a, b] = fib_pair(n / 2);
  BigInt c = a * (2 * b - a);
  BigInt d = a * a + b * b;
  std::pair<BigInt, BigInt> result =
      (n % 2 == 0) ? std::make_pair(c, d) : std::make_pair(d, BigInt(c + d));

  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(n, std::move(result)).first->second;
}

BigInt Sequences::fib(std::uint64_t n) { return fib_pair(n).first; }

BigInt Sequences::lucas(std::uint64_t n) {
  auto [f, f1] = fib_pair(n);
  return 2 * f1 - f;
}

QuadRat Sequences::phi_pow(std::uint64_t n) {
  if (n == 0) return QuadRat(1);
  return QuadRat(lucas(n), fib(n), 2);
}

QuadRat Sequences::phi_pow_signed(long long e) {
  if (e >= 0) return phi_pow(static_cast<std::uint64_t>(e));
  return phi_pow(static_cast<std::uint64_t>(-e)).inverse();
}

QuadRat Sequences::sqrt5_pow(std::uint64_t m) {
  BigInt five_pow;
  mpz_ui_pow_ui(five_pow.get_mpz_t(), 5, m / 2);
  if (m % 2 == 0) return QuadRat(five_pow, 0, 1);
  return QuadRat(0, five_pow, 1);
}

std::size_t Sequences::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

Sequences& shared_sequences() {
  static Sequences instance;
  return instance;
}

namespace {

// smallest r = t/10^60 with r >= v, for v >= 0
BigRational ceil_bound(const QuadRat& v) {
  if (v.is_zero()) return BigRational(0);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 60);
  QuadRat scaled = v * QuadRat(scale, 0, 1);
  // ceiling via sign probes around an isqrt-based floor estimate
  BigInt lo = 0;
  {
    // floor(a/d) + floor(|b|*sqrt5/d) is within 2 of the true floor; refine by stepping
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), BigInt(5 * scaled.b() * scaled.b()).get_mpz_t());
    BigInt num = scaled.a() + (sgn(scaled.b()) >= 0 ? s : BigInt(-s - 1));
    mpz_fdiv_q(lo.get_mpz_t(), num.get_mpz_t(), scaled.d().get_mpz_t());
  }
  while (QuadRat(BigRational(lo)) < scaled) lo += 1;
  while (lo > 0 && !(QuadRat(BigRational(lo - 1)) < scaled)) lo -= 1;
  return BigRational(lo, scale);
}

std::uint64_t shifted(std::uint64_t N, long long off) {
  return static_cast<std::uint64_t>(static_cast<long long>(N) + off);
}

}  // namespace

LimitReport check_limits(Sequences& seq, long long m, long long n,
                         const std::vector<std::uint64_t>& N_list) {
  LimitReport report;
  report.m = m;
  report.n = n;
  for (std::size_t i = 1; i < N_list.size(); ++i) {
    if (N_list[i] <= N_list[i - 1]) throw DomainError("check_limits: N_list must be strictly increasing");
  }
  for (std::uint64_t N : N_list) {
    if (static_cast<long long>(N) + m < 0 || static_cast<long long>(N) + n < 0) {
      throw DomainError("check_limits: N+m and N+n must be non-negative");
    }
  }

  QuadRat phi_mn = seq.phi_pow_signed(m - n);
  QuadRat fib_lucas_limit = phi_mn / QuadRat::sqrt5();

  for (std::uint64_t N : N_list) {
    LimitProbe probe;
    probe.N = N;
    BigRational ff(seq.fib(shifted(N, m)), seq.fib(shifted(N, n)));
    BigRational ll(seq.lucas(shifted(N, m)), seq.lucas(shifted(N, n)));
    BigRational fl(seq.fib(shifted(N, m)), seq.lucas(shifted(N, n)));
    probe.err_fib_fib = (QuadRat(ff) - phi_mn).abs();
    probe.err_lucas_lucas = (QuadRat(ll) - phi_mn).abs();
    probe.err_fib_lucas = (QuadRat(fl) - fib_lucas_limit).abs();
    probe.bound_fib_fib = ceil_bound(probe.err_fib_fib);
    probe.bound_lucas_lucas = ceil_bound(probe.err_lucas_lucas);
    probe.bound_fib_lucas = ceil_bound(probe.err_fib_lucas);
    report.probes.push_back(std::move(probe));
  }

  report.monotone = true;
  for (std::size_t i = 1; i < report.probes.size(); ++i) {
    const auto& prev = report.probes[i - 1];
    const auto& cur = report.probes[i];
    auto shrinks = [](const QuadRat& before, const QuadRat& after) {
      if (before.is_zero() && after.is_zero()) return true;  // m == n case
      return after.cmp(before) < 0;
    };
    if (!shrinks(prev.err_fib_fib, cur.err_fib_fib) ||
        !shrinks(prev.err_lucas_lucas, cur.err_lucas_lucas) ||
        !shrinks(prev.err_fib_lucas, cur.err_fib_lucas)) {
      report.monotone = false;
    }
  }
  report.pass = report.monotone;
  return report;
}

}  // namespace fibsum
