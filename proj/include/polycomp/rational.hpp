#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "polycomp/integer.hpp"

namespace polycomp {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n) : num_(n), den_(1) {}        // NOLINT(google-explicit-constructor)
  Rational(int n) : num_(n), den_(1) {}                 // NOLINT(google-explicit-constructor)
  Rational(Integer n, Integer d);

  /// Accepts "n" or "n/d".
  static Rational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_.is_one(); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  /// v_p(num) - v_p(den); requires a nonzero value.
  std::int64_t valuation(std::int64_t p) const;

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

 private:
  struct Reduced {};
  Rational(Integer n, Integer d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

  Integer num_;
  Integer den_;
};

/// p^e as a rational, e may be negative.
Rational rational_power(std::int64_t p, std::int64_t e);

}  // namespace polycomp
