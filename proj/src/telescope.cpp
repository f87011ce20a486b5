#include "fibsum/telescope.hpp"

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

int alt_sign(long long k) { return (k - 1) % 2 == 0 ? 1 : -1; }

QuadRat apply_sign(int s, QuadRat v) { return s >= 0 ? v : -v; }

// prod_{j=j0..j1} f(nk + j*n*q); empty range (j0 > j1) yields 1
QuadRat inner_product(const SeqFn& f, long long n, long long q, long long k,
                      long long j0, long long j1) {
  QuadRat acc = 1;
  for (long long j = j0; j <= j1; ++j) acc *= f.eval(n * k + j * n * q);
  return acc;
}

}  // namespace

SidePair telescope_finite(const SeqFn& f, long long q, long long N) {
  if (q < 1) throw DomainError("telescope_finite: q must be positive");
  if (N < q) throw DomainError("telescope_finite: requires N >= q");
  QuadRat lhs = 0, head = 0, shifted = 0;
  for (long long k = 1; k <= N; ++k) lhs += f.eval(k) - f.eval(k + q);
  for (long long k = 1; k <= q; ++k) {
    head += f.eval(k);
    shifted += f.eval(k + N);
  }
  return {lhs, head - shifted};
}

SidePair telescope_finite_alt(const SeqFn& f, long long q, long long N) {
  if (q < 1) throw DomainError("telescope_finite_alt: q must be positive");
  if (N < 1) throw DomainError("telescope_finite_alt: N must be positive");
  int bracket = (q - 1) % 2 == 0 ? 1 : -1;  // (-1)^(q-1)
  QuadRat lhs = 0, head = 0, shifted = 0;
  for (long long k = 1; k <= N; ++k) {
    lhs += apply_sign(alt_sign(k), f.eval(k) + apply_sign(bracket, f.eval(k + q)));
  }
  for (long long k = 1; k <= q; ++k) {
    head += apply_sign(alt_sign(k), f.eval(k));
    shifted += apply_sign(alt_sign(k), f.eval(k + N));
  }
  return {lhs, head + apply_sign(alt_sign(N), shifted)};
}

SidePair lemma_product_finite(const SeqFn& f, long long m, long long n, long long q,
                              long long N, LemmaMode mode) {
  if (m < 1 || n < 1 || q < 1 || N < 1) {
    throw DomainError("lemma_product_finite: m, n, q, N must be positive");
  }
  if (mode == LemmaMode::AltQEven && q % 2 != 0) {
    throw DomainError("lemma_product_finite: AltQEven requires q even");
  }
  if (mode == LemmaMode::AltQOdd && q % 2 != 1) {
    throw DomainError("lemma_product_finite: AltQOdd requires q odd");
  }

  bool alternating = mode != LemmaMode::Plain;
  bool plus_bracket = mode == LemmaMode::AltQOdd;

  QuadRat lhs = 0;
  for (long long k = 1; k <= N; ++k) {
    QuadRat bracket = plus_bracket ? f.eval(n * k) + f.eval(n * k + m * n * q)
                                   : f.eval(n * k) - f.eval(n * k + m * n * q);
    QuadRat term = bracket * inner_product(f, n, q, k, 1, m - 1);
    lhs += alternating ? apply_sign(alt_sign(k), term) : term;
  }

  QuadRat head = 0, shifted = 0;
  for (long long k = 1; k <= q; ++k) {
    QuadRat h = inner_product(f, n, q, k, 0, m - 1);
    // the shifted product is prod_j f(nk + nN + jnq)
    QuadRat s = 1;
    for (long long j = 0; j <= m - 1; ++j) s *= f.eval(n * k + n * N + j * n * q);
    if (alternating) {
      h = apply_sign(alt_sign(k), h);
      s = apply_sign(alt_sign(k), s);
    }
    head += h;
    shifted += s;
  }

  QuadRat rhs = alternating ? head + apply_sign(alt_sign(N), shifted) : head - shifted;
  return {lhs, rhs};
}

InfiniteProbe lemma_product_infinite(const SeqFn& f, const QuadRat& f_limit,
                                     long long m, long long n, long long q,
                                     InfiniteMode mode, long long N_probe) {
  if (m < 1 || n < 1 || q < 1) throw DomainError("lemma_product_infinite: m, n, q must be positive");
  if (N_probe < q) throw DomainError("lemma_product_infinite: requires N_probe >= q");

  InfiniteProbe probe;
  if (mode == InfiniteMode::Plain) {
    QuadRat head = 0;
    for (long long k = 1; k <= q; ++k) head += inner_product(f, n, q, k, 0, m - 1);
    probe.closed_form = head - f_limit.pow(static_cast<unsigned long>(m)) * QuadRat(q);
    QuadRat partial = 0;
    for (long long k = 1; k <= N_probe; ++k) {
      partial += (f.eval(n * k) - f.eval(n * k + m * n * q)) * inner_product(f, n, q, k, 1, m - 1);
    }
    probe.series_partial = partial;
  } else {
    QuadRat head = 0;
    for (long long k = 1; k <= q; ++k) {
      head += apply_sign(alt_sign(k), inner_product(f, n, q, k, 0, m - 1));
    }
    probe.closed_form = head;
    bool plus_bracket = q % 2 == 1;  // lower sign when q is odd
    QuadRat partial = 0;
    for (long long k = 1; k <= N_probe; ++k) {
      QuadRat bracket = plus_bracket ? f.eval(n * k) + f.eval(n * k + m * n * q)
                                     : f.eval(n * k) - f.eval(n * k + m * n * q);
      partial += apply_sign(alt_sign(k), bracket * inner_product(f, n, q, k, 1, m - 1));
    }
    probe.series_partial = partial;
  }
  probe.tail_bound = (probe.series_partial - probe.closed_form).abs();
  return probe;
}

}  // namespace fibsum
