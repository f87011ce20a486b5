#include "fibsum/quadratic.hpp"

#include <ostream>
#include <utility>

namespace fibsum {

namespace {

// floor(|w| * sqrt5) for w >= 0; exact, via integer square root of 5*w^2.
BigInt floor_sqrt5_times(const BigInt& w) {
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), BigInt(5 * w * w).get_mpz_t());
  return s;
}

// Exact sign of u + w*sqrt5.
int sign_pair(const BigInt& u, const BigInt& w) {
  int su = sgn(u), sw = sgn(w);
  if (sw == 0) return su;
  if (su == 0) return sw;
  if (su == sw) return su;
  // mixed signs: the dominant of u^2 vs 5*w^2 decides
  int c = cmp(u * u, 5 * w * w);
  if (c == 0) return 0;  // impossible for w != 0 (sqrt5 irrational), kept for safety
  return c > 0 ? su : sw;
}

// floor(u + w*sqrt5); exact for any signs.
BigInt floor_pair(const BigInt& u, const BigInt& w) {
  if (sgn(w) == 0) return u;
  BigInt s = floor_sqrt5_times(::abs(w));
  // w*sqrt5 is irrational, so floor(w*sqrt5) = s for w > 0 and -(s+1) for w < 0
  return sgn(w) > 0 ? BigInt(u + s) : BigInt(u - s - 1);
}

}  // namespace

QuadRat::QuadRat(const BigRational& v) : a_(v.numerator()), b_(0), d_(v.denominator()) {}

QuadRat::QuadRat(BigInt a, BigInt b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (sgn(d_) == 0) throw DomainError("QuadRat: zero denominator");
  canonicalize();
}

void QuadRat::canonicalize() {
  if (sgn(d_) < 0) {
    a_ = -a_;
    b_ = -b_;
    d_ = -d_;
  }
  if (sgn(a_) == 0 && sgn(b_) == 0) {
    d_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d_.get_mpz_t());
  if (g != 1) {
    a_ /= g;
    b_ /= g;
    d_ /= g;
  }
}

BigRational QuadRat::to_rational() const {
  if (!is_rational()) throw DomainError("QuadRat: " + str() + " is irrational");
  return BigRational(a_, d_);
}

int QuadRat::sign() const { return sign_pair(a_, b_); }

QuadRat QuadRat::operator-() const { return QuadRat(-a_, -b_, d_); }

QuadRat QuadRat::conj() const { return QuadRat(a_, -b_, d_); }

QuadRat QuadRat::abs() const { return sign() < 0 ? -*this : *this; }

QuadRat QuadRat::inverse() const {
  if (is_zero()) throw DomainError("QuadRat: inverse of zero");
  // 1/((a+b*sqrt5)/d) = d*(a-b*sqrt5)/(a^2-5b^2)
  BigInt norm = a_ * a_ - 5 * b_ * b_;
  return QuadRat(d_ * a_, -d_ * b_, norm);
}

QuadRat QuadRat::pow(unsigned long e) const {
  QuadRat base = *this, acc = 1;
  while (e != 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

QuadRat operator+(const QuadRat& x, const QuadRat& y) {
  return QuadRat(x.a_ * y.d_ + y.a_ * x.d_, x.b_ * y.d_ + y.b_ * x.d_, x.d_ * y.d_);
}

QuadRat operator-(const QuadRat& x, const QuadRat& y) {
  return QuadRat(x.a_ * y.d_ - y.a_ * x.d_, x.b_ * y.d_ - y.b_ * x.d_, x.d_ * y.d_);
}

QuadRat operator*(const QuadRat& x, const QuadRat& y) {
  return QuadRat(x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.d_ * y.d_);
}

QuadRat operator/(const QuadRat& x, const QuadRat& y) {
  if (y.is_zero()) throw DomainError("QuadRat: division by zero (" + x.str() + " / 0)");
  return x * y.inverse();
}

std::string QuadRat::str() const {
  if (is_rational()) return BigRational(a_, d_).str();
  std::string s = "(" + a_.get_str();
  s += sgn(b_) < 0 ? "-" : "+";
  s += BigInt(::abs(b_)).get_str();
  s += "*sqrt5)/";
  s += d_.get_str();
  return s;
}

QuadRat QuadRat::parse(std::string_view text) {
  if (text.empty()) throw ParseError("QuadRat: empty string");
  if (text.front() != '(') {
    BigRational r = BigRational::parse(text);
    return QuadRat(r);
  }
  // "(a+b*sqrt5)/d" or "(a-b*sqrt5)/d"
  auto close = text.find(")/");
  if (close == std::string_view::npos) throw ParseError("QuadRat: cannot parse \"" + std::string(text) + "\"");
  std::string_view inner = text.substr(1, close - 1);
  std::string_view dstr = text.substr(close + 2);
  auto star = inner.rfind("*sqrt5");
  if (star == std::string_view::npos || star + 6 != inner.size()) {
    throw ParseError("QuadRat: cannot parse \"" + std::string(text) + "\"");
  }
  // the sign separating a and b is the last '+'/'-' before the b part, past index 0
  size_t sep = std::string_view::npos;
  for (size_t i = star; i-- > 1;) {
    if (inner[i] == '+' || inner[i] == '-') {
      sep = i;
      break;
    }
  }
  if (sep == std::string_view::npos) throw ParseError("QuadRat: cannot parse \"" + std::string(text) + "\"");
  try {
    BigInt a(std::string(inner.substr(0, sep)));
    BigInt b(std::string(inner.substr(sep + 1, star - sep - 1)));
    if (inner[sep] == '-') b = -b;
    BigInt d((std::string(dstr)));
    if (sgn(d) <= 0) throw ParseError("QuadRat: denominator must be positive");
    return QuadRat(a, b, d);
  } catch (const std::invalid_argument&) {
    throw ParseError("QuadRat: cannot parse \"" + std::string(text) + "\"");
  }
}

std::string QuadRat::to_decimal(unsigned digits) const {
  if (digits < 1 || digits > 10000) throw DomainError("QuadRat: digits must be in [1, 10000]");
  bool negative = sign() < 0;
  BigInt a = negative ? BigInt(-a_) : a_;
  BigInt b = negative ? BigInt(-b_) : b_;

  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // t = floor(|x| * 10^digits); floor((A+B*sqrt5)/d) = floor(floor(A+B*sqrt5)/d)
  BigInt A = a * scale, B = b * scale;
  BigInt f = floor_pair(A, B);
  BigInt t;
  mpz_fdiv_q(t.get_mpz_t(), f.get_mpz_t(), d_.get_mpz_t());

  // round to nearest: compare 2*|x|*10^digits against 2t+1
  int c = sign_pair(2 * A - (2 * t + 1) * d_, 2 * B);
  if (c > 0) {
    t += 1;
  } else if (c == 0) {
    // exactly half way (rational values only): round half to even
    if (mpz_odd_p(t.get_mpz_t())) t += 1;
  }

  std::string ds = t.get_str();
  if (ds.size() < digits + 1) ds.insert(0, digits + 1 - ds.size(), '0');
  ds.insert(ds.size() - digits, ".");
  if (negative && t != 0) ds.insert(0, "-");
  return ds;
}

std::ostream& operator<<(std::ostream& os, const QuadRat& v) { return os << v.str(); }

}  // namespace fibsum
