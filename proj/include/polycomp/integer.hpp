#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace polycomp {

/// Arbitrary-precision integer with an inline 64-bit fast path.
///
/// Values that fit in int64_t are always stored inline; larger values live in
/// a GMP integer. Keeping the representation canonical makes equality a
/// structural comparison and keeps the common small-coefficient case free of
/// heap traffic.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(std::int64_t v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) noexcept : small_(v) {}           // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& v) { assign(v); }

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  /// Parses an optionally signed decimal literal; throws std::invalid_argument.
  static Integer parse(std::string_view text);

  bool is_small() const noexcept { return !big_; }
  std::int64_t small_value() const noexcept { return small_; }
  mpz_class to_mpz() const;

  int sign() const noexcept;
  bool is_zero() const noexcept { return is_small() && small_value() == 0; }
  bool is_one() const noexcept { return is_small() && small_value() == 1; }

  Integer abs() const;
  Integer pow(unsigned exponent) const;

  /// Largest k with p^k | *this. Requires *this != 0 and p >= 2.
  unsigned valuation(std::int64_t p) const;

  /// Nonnegative square root if *this is a perfect square.
  std::optional<Integer> exact_sqrt() const;

  std::string str() const;

  friend Integer operator+(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (a.is_small() && b.is_small() && !__builtin_add_overflow(a.small_, b.small_, &r)) return r;
    return add_slow(a, b);
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (a.is_small() && b.is_small() && !__builtin_sub_overflow(a.small_, b.small_, &r)) return r;
    return sub_slow(a, b);
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (a.is_small() && b.is_small() && !__builtin_mul_overflow(a.small_, b.small_, &r)) return r;
    return mul_slow(a, b);
  }
  friend Integer operator-(const Integer& a);

  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (a.is_small() != b.is_small()) return false;  // canonical representation
    if (a.is_small()) return a.small_ == b.small_;
    return *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

 private:
  void assign(const mpz_class& v);
  static Integer add_slow(const Integer& a, const Integer& b);
  static Integer sub_slow(const Integer& a, const Integer& b);
  static Integer mul_slow(const Integer& a, const Integer& b);

  // big_ is set exactly when the value does not fit in int64_t.
  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

/// Quotient of an exact division; the caller guarantees b | a.
Integer divexact(const Integer& a, const Integer& b);

/// Floor division and the matching nonnegative-for-positive-divisor remainder.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

/// True iff a divides b (0 divides only 0).
bool divides(const Integer& a, const Integer& b);

/// Nonnegative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // nonnegative
  Integer s;
  Integer t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

bool is_prime(const Integer& n);

}  // namespace polycomp
