#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fibsum/errors.hpp"

namespace fibsum {

using BigInt = mpz_class;

/// mpz_class has no long long constructor; on LP64 a long round-trips.
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

/// Exact rational with a canonical representation: denominator > 0,
/// gcd(|num|, den) == 1, zero is 0/1. Immutable value semantics; every
/// operation returns a canonical result.
class BigRational {
 public:
  BigRational() : v_(0) {}
  BigRational(int n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  BigRational(long n) : v_(n) {}                    // NOLINT
  BigRational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT
  BigRational(const BigInt& n) : v_(n) {}                 // NOLINT
  template <class T, class U>
  BigRational(const __gmp_expr<T, U>& e) : v_(BigInt(e)) {}  // NOLINT: gmp expression results
  BigRational(const BigInt& num, const BigInt& den);
  BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

  /// Accepts "p" or "p/q" with optional leading '-'.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRational operator-() const;
  BigRational abs() const;
  BigRational inverse() const;

  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  /// Total order consistent with the real values: -1, 0, +1.
  int cmp(const BigRational& o) const { return ::cmp(v_, o.v_); }
  friend bool operator==(const BigRational& a, const BigRational& b) { return a.cmp(b) == 0; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.cmp(b) != 0; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.cmp(b) > 0; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.cmp(b) >= 0; }

  /// "p/q"; integers render without the "/q" part.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

 private:
  explicit BigRational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // kept canonical
};

}  // namespace fibsum
