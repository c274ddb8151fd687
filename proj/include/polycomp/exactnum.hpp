#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include "polycomp/integer.hpp"
#include "polycomp/rational.hpp"

namespace polycomp {

/// Element a + b*sqrt(d) of Q(sqrt(d)). Rationals are the b == 0 case and are
/// stored with d == 0, so equality is componentwise. Two irrational operands
/// must share d.
class QuadElement {
 public:
  QuadElement() = default;
  QuadElement(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadElement(std::int64_t a) : a_(a) {}         // NOLINT(google-explicit-constructor)
  QuadElement(int a) : a_(a) {}                  // NOLINT(google-explicit-constructor)
  /// d must be squarefree and different from 0 and 1 whenever b != 0.
  QuadElement(Rational a, Rational b, std::int64_t d);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  std::int64_t d() const noexcept { return d_; }

  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const noexcept { return b_.is_zero(); }
  bool is_one() const noexcept { return b_.is_zero() && a_ == Rational(1); }

  QuadElement conj() const;
  QuadElement inverse() const;
  /// a^2 - d*b^2.
  Rational norm() const;

  /// Canonical text: "3/2", "(1+sqrt(-5))", "(-1/2+3/2*sqrt(-5))".
  std::string str() const;

  friend QuadElement operator+(const QuadElement& x, const QuadElement& y);
  friend QuadElement operator-(const QuadElement& x, const QuadElement& y);
  friend QuadElement operator*(const QuadElement& x, const QuadElement& y);
  friend QuadElement operator/(const QuadElement& x, const QuadElement& y);
  friend QuadElement operator-(const QuadElement& x);

  QuadElement& operator+=(const QuadElement& o) { return *this = *this + o; }
  QuadElement& operator-=(const QuadElement& o) { return *this = *this - o; }
  QuadElement& operator*=(const QuadElement& o) { return *this = *this * o; }

  friend bool operator==(const QuadElement& x, const QuadElement& y) noexcept {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadElement& v) { return os << v.str(); }

 private:
  struct Trusted {};
  QuadElement(Rational a, Rational b, std::int64_t d, Trusted);

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

bool is_squarefree(std::int64_t d);

Rational quad_norm(const QuadElement& x);

/// Which subring K of L an element is tested against.
enum class KKind { Integers, Rationals, LocalizedIntegers, QuadRing, QuadField };

struct KTag {
  KKind kind = KKind::Integers;
  std::int64_t param = 0;  // the prime p, or d for the quadratic kinds

  static KTag integers() { return {KKind::Integers, 0}; }
  static KTag rationals() { return {KKind::Rationals, 0}; }
  static KTag localized(std::int64_t p);
  static KTag quad_ring(std::int64_t d);
  static KTag quad_field(std::int64_t d);

  bool is_field() const { return kind == KKind::Rationals || kind == KKind::QuadField; }
  /// Canonical descriptor text: "Z", "Q", "Z_(2)", "Z[sqrt(-5)]", "Q(sqrt(-1))".
  std::string str() const;

  friend bool operator==(const KTag&, const KTag&) = default;
};

/// True iff x lies in the subring named by tag. Throws IncompatibleTag when the
/// field of x cannot contain that subring.
bool k_membership(const QuadElement& x, const KTag& tag);

/// Units of K (nonzero for fields).
bool is_k_unit(const QuadElement& x, const KTag& tag);

/// A unit u of K such that u*x is the canonical associate of x.
///   Z: positive. Z_(p): p^v. Z[sqrt(d)]: a > 0, or a == 0 and b > 0.
///   Fields: first nonzero component equal to 1.
QuadElement unit_normalizer(const QuadElement& x, const KTag& tag);

inline QuadElement unit_normalize(const QuadElement& x, const KTag& tag) {
  return x.is_zero() ? x : unit_normalizer(x, tag) * x;
}

/// Generator of the least principal K-submodule of L containing l1 and l2,
/// unit-normalized. Throws BothZero and NotGCDDomain.
QuadElement inf_fraction(const QuadElement& l1, const QuadElement& l2, const KTag& tag);

/// Least positive integer c (for Z_(p): least power of p) with c*x in K.
/// Only meaningful when L is the quotient field of K.
Integer clearing_constant(const QuadElement& x, const KTag& tag);

/// Lowest common clearing constant for several elements.
Integer clearing_constant(std::span<const QuadElement> xs, const KTag& tag);

/// True iff Z[sqrt(d)] is norm-Euclidean (d = -1, -2); these are the
/// quadratic rings where inf_fraction is supported.
bool quad_ring_is_euclidean(std::int64_t d);

}  // namespace polycomp
