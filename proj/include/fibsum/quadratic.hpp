#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "fibsum/rational.hpp"

namespace fibsum {

/// Exact element (a + b*sqrt5)/d of Q(sqrt5). Canonical representation:
/// d > 0 and gcd(|a|, |b|, d) == 1. The value is rational iff b == 0.
/// Comparisons never go through floating point: the sign of a + b*sqrt5 is
/// decided by comparing a^2 against 5*b^2.
class QuadRat {
 public:
  QuadRat() : a_(0), b_(0), d_(1) {}
  QuadRat(long v) : a_(v), b_(0), d_(1) {}  // NOLINT(google-explicit-constructor)
  QuadRat(const BigRational& v);            // NOLINT: embedding, b == 0
  QuadRat(BigInt a, BigInt b, BigInt d);    // canonicalizes, throws on d == 0

  static QuadRat sqrt5() { return QuadRat(0, 1, 1); }
  /// (1 + sqrt5)/2
  static QuadRat phi() { return QuadRat(1, 1, 2); }
  /// Accepts the str() grammar: "p", "p/q", or "(a+b*sqrt5)/d" (also '-' forms).
  static QuadRat parse(std::string_view text);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  /// Requires is_rational().
  BigRational to_rational() const;

  /// Exact sign of the real value: -1, 0, +1.
  int sign() const;
  int cmp(const QuadRat& o) const { return (*this - o).sign(); }

  QuadRat operator-() const;
  QuadRat conj() const;  // b -> -b
  QuadRat abs() const;
  QuadRat inverse() const;
  QuadRat pow(unsigned long e) const;

  friend QuadRat operator+(const QuadRat& x, const QuadRat& y);
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y);
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y);
  friend QuadRat operator/(const QuadRat& x, const QuadRat& y);
  QuadRat& operator+=(const QuadRat& o) { return *this = *this + o; }
  QuadRat& operator-=(const QuadRat& o) { return *this = *this - o; }
  QuadRat& operator*=(const QuadRat& o) { return *this = *this * o; }
  QuadRat& operator/=(const QuadRat& o) { return *this = *this / o; }

  friend bool operator==(const QuadRat& x, const QuadRat& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }
  friend bool operator<(const QuadRat& x, const QuadRat& y) { return x.cmp(y) < 0; }
  friend bool operator<=(const QuadRat& x, const QuadRat& y) { return x.cmp(y) <= 0; }
  friend bool operator>(const QuadRat& x, const QuadRat& y) { return x.cmp(y) > 0; }
  friend bool operator>=(const QuadRat& x, const QuadRat& y) { return x.cmp(y) >= 0; }

  bool operator<(const BigRational& r) const { return cmp(QuadRat(r)) < 0; }
  bool operator>(const BigRational& r) const { return cmp(QuadRat(r)) > 0; }

  /// "(a+b*sqrt5)/d"; b == 0 renders like BigRational.
  std::string str() const;

  /// Correctly rounded (round half to even) fixed-point rendering with
  /// `digits` fractional digits, digits in [1, 10000]. Reporting only;
  /// never used in equality or ordering decisions.
  std::string to_decimal(unsigned digits) const;

  friend std::ostream& operator<<(std::ostream& os, const QuadRat& v);

 private:
  void canonicalize();
  BigInt a_, b_, d_;  // (a + b*sqrt5)/d
};

}  // namespace fibsum
