#include "fibsum/rational.hpp"

#include <ostream>

namespace fibsum {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) {
    throw DomainError("BigRational: zero denominator in " + num.get_str() + "/0");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return BigRational(BigInt(std::string(text)));
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (sgn(den) <= 0) {
      throw ParseError("BigRational: denominator must be positive in \"" + std::string(text) + "\"");
    }
    return BigRational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("BigRational: cannot parse \"" + std::string(text) + "\"");
  }
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-v_)); }

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(v_))); }

BigRational BigRational::inverse() const {
  if (is_zero()) throw DomainError("BigRational: inverse of zero");
  mpq_class r(v_.get_den(), v_.get_num());
  r.canonicalize();
  return BigRational(r);
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  return BigRational(mpq_class(a.v_ + b.v_));
}
BigRational operator-(const BigRational& a, const BigRational& b) {
  return BigRational(mpq_class(a.v_ - b.v_));
}
BigRational operator*(const BigRational& a, const BigRational& b) {
  return BigRational(mpq_class(a.v_ * b.v_));
}
BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw DomainError("BigRational: division by zero (" + a.str() + " / 0)");
  return BigRational(mpq_class(a.v_ / b.v_));
}

BigRational& BigRational::operator+=(const BigRational& o) { v_ += o.v_; return *this; }
BigRational& BigRational::operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
BigRational& BigRational::operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DomainError("BigRational: division by zero (" + str() + " / 0)");
  v_ /= o.v_;
  return *this;
}

std::string BigRational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

}  // namespace fibsum
