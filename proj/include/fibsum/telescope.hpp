#pragma once

#include <functional>
#include <string>

#include "fibsum/quadratic.hpp"

namespace fibsum {

/// Abstract sequence k -> f(k) over positive integers. Evaluation must be
/// deterministic: the same k always yields the same value.
struct SeqFn {
  std::function<QuadRat(long long)> eval;
  std::string description;
};

struct SidePair {
  QuadRat lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

/// sum_{k=1..N} [f(k) - f(k+q)]  vs  sum_{k=1..q} f(k) - sum_{k=1..q} f(k+N).
/// Requires N >= q.
SidePair telescope_finite(const SeqFn& f, long long q, long long N);

/// sum_{k=1..N} (-1)^(k-1) [f(k) + (-1)^(q-1) f(k+q)]  vs
/// sum_{k=1..q} (-1)^(k-1) f(k) + (-1)^(N-1) sum_{k=1..q} (-1)^(k-1) f(k+N).
SidePair telescope_finite_alt(const SeqFn& f, long long q, long long N);

enum class LemmaMode {
  Plain,     // [f(nk) - f(nk+mnq)] * prod, plain sum
  AltQEven,  // (-1)^(k-1) [f(nk) - f(nk+mnq)] * prod, requires q even
  AltQOdd,   // (-1)^(k-1) [f(nk) + f(nk+mnq)] * prod, requires q odd
};

/// Finite product-telescoping identity over f(nk), f(nk+jnq), ...,
/// with the inner products honoring the empty-product convention at m = 1.
SidePair lemma_product_finite(const SeqFn& f, long long m, long long n, long long q,
                              long long N, LemmaMode mode);

enum class InfiniteMode { Plain, Alternating };

struct InfiniteProbe {
  QuadRat series_partial;  // exact N_probe-term partial sum of the series
  QuadRat closed_form;     // exact limit built from the caller's f_limit
  QuadRat tail_bound;      // |series_partial - closed_form|, exact
};

/// Infinite form of the product-telescoping lemmas. The caller supplies the
/// exact limit of f (limits live in Q(sqrt5) and are caller knowledge).
/// Plain: closed = sum_{k=1..q} prod_j f(nk+jnq) - f_limit^m * q.
/// Alternating: closed = sum_{k=1..q} (-1)^(k-1) prod_j f(nk+jnq), with the
/// series bracket sign picked by the parity of q. Requires N_probe >= q.
InfiniteProbe lemma_product_infinite(const SeqFn& f, const QuadRat& f_limit,
                                     long long m, long long n, long long q,
                                     InfiniteMode mode, long long N_probe);

}  // namespace fibsum
