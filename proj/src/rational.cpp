#include "polycomp/rational.hpp"

#include <stdexcept>

#include "polycomp/error.hpp"

namespace polycomp {

Rational::Rational(Integer n, Integer d) {
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  Integer g = gcd(n, d);
  if (!g.is_one()) {
    n = divexact(n, g);
    d = divexact(d, g);
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  Integer d = Integer::parse(text.substr(slash + 1));
  if (d.is_zero()) throw std::invalid_argument("zero denominator");
  return Rational(Integer::parse(text.substr(0, slash)), d);
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(den_, num_);
}

std::int64_t Rational::valuation(std::int64_t p) const {
  ensure(!is_zero(), "valuation of zero");
  return static_cast<std::int64_t>(num_.valuation(p)) -
         static_cast<std::int64_t>(den_.valuation(p));
}

std::string Rational::str() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer()) return Rational(a.num_ + b.num_);
  if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer()) return Rational(a.num_ - b.num_);
  if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.is_integer() && b.is_integer()) return Rational(a.num_ * b.num_);
  // Cross-cancel first so the product is already reduced.
  Integer g1 = gcd(a.num_, b.den_);
  Integer g2 = gcd(b.num_, a.den_);
  return Rational(divexact(a.num_, g1) * divexact(b.num_, g2),
                  divexact(a.den_, g2) * divexact(b.den_, g1), Rational::Reduced{});
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, Rational::Reduced{}); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational rational_power(std::int64_t p, std::int64_t e) {
  Integer base(p);
  if (e >= 0) return Rational(base.pow(static_cast<unsigned>(e)));
  return Rational(Integer(1), base.pow(static_cast<unsigned>(-e)));
}

}  // namespace polycomp
