#include "polycomp/exactnum.hpp"

#include <array>

#include "polycomp/error.hpp"

namespace polycomp {

namespace {

std::int64_t common_d(const QuadElement& x, const QuadElement& y) {
  if (x.d() == 0) return y.d();
  if (y.d() != 0 && y.d() != x.d()) {
    fail(ErrorCode::FieldMismatch, "elements of Q(sqrt(" + std::to_string(x.d()) +
                                       ")) and Q(sqrt(" + std::to_string(y.d()) + ")) mixed");
  }
  return x.d();
}

void require_rational(const QuadElement& x, const KTag& tag) {
  if (!x.is_rational()) {
    fail(ErrorCode::IncompatibleTag,
         x.str() + " does not lie in the quotient field of " + tag.str());
  }
}

void require_same_field(const QuadElement& x, const KTag& tag) {
  if (x.d() != 0 && x.d() != tag.param) {
    fail(ErrorCode::IncompatibleTag, x.str() + " is not an element of a field containing " +
                                         tag.str());
  }
}

// Nearest integer, ties toward +infinity.
Integer round_nearest(const Rational& r) {
  return floor_div(r.num() * Integer(2) + r.den(), r.den() * Integer(2));
}

QuadElement quad_euclid_gcd(QuadElement x, QuadElement y) {
  while (!y.is_zero()) {
    QuadElement ratio = x / y;
    QuadElement q(Rational(round_nearest(ratio.a())), Rational(round_nearest(ratio.b())),
                  ratio.d() != 0 ? ratio.d() : y.d());
    QuadElement r = x - q * y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace

bool is_squarefree(std::int64_t d) {
  if (d == 0) return false;
  std::int64_t n = d < 0 ? -d : d;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % (f * f) == 0) return false;
  }
  return true;
}

QuadElement::QuadElement(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_.is_zero()) {
    d_ = 0;
    return;
  }
  if (d == 1 || !is_squarefree(d)) {
    fail(ErrorCode::FieldMismatch, "sqrt(" + std::to_string(d) + ") needs squarefree d != 0, 1");
  }
}

QuadElement::QuadElement(Rational a, Rational b, std::int64_t d, Trusted)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_.is_zero()) d_ = 0;
}

QuadElement QuadElement::conj() const { return QuadElement(a_, -b_, d_, Trusted{}); }

Rational QuadElement::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ - Rational(d_) * b_ * b_;
}

QuadElement QuadElement::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (b_.is_zero()) return QuadElement(a_.inverse());
  Rational n = norm();
  return QuadElement(a_ / n, -b_ / n, d_, Trusted{});
}

std::string QuadElement::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out = "(";
  if (!a_.is_zero()) out += a_.str();
  Rational mag = b_.abs();
  if (b_.sign() < 0) {
    out += "-";
  } else if (!a_.is_zero()) {
    out += "+";
  }
  if (mag != Rational(1)) out += mag.str() + "*";
  out += "sqrt(" + std::to_string(d_) + "))";
  return out;
}

QuadElement operator+(const QuadElement& x, const QuadElement& y) {
  if (x.is_rational() && y.is_rational()) return QuadElement(x.a_ + y.a_);
  return QuadElement(x.a_ + y.a_, x.b_ + y.b_, common_d(x, y), QuadElement::Trusted{});
}

QuadElement operator-(const QuadElement& x, const QuadElement& y) {
  if (x.is_rational() && y.is_rational()) return QuadElement(x.a_ - y.a_);
  return QuadElement(x.a_ - y.a_, x.b_ - y.b_, common_d(x, y), QuadElement::Trusted{});
}

QuadElement operator*(const QuadElement& x, const QuadElement& y) {
  if (x.is_rational() && y.is_rational()) return QuadElement(x.a_ * y.a_);
  std::int64_t d = common_d(x, y);
  return QuadElement(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d,
                     QuadElement::Trusted{});
}

QuadElement operator/(const QuadElement& x, const QuadElement& y) {
  if (x.is_rational() && y.is_rational()) return QuadElement(x.a_ / y.a_);
  return x * y.inverse();
}

QuadElement operator-(const QuadElement& x) {
  return QuadElement(-x.a_, -x.b_, x.d_, QuadElement::Trusted{});
}

Rational quad_norm(const QuadElement& x) { return x.norm(); }

KTag KTag::localized(std::int64_t p) {
  if (!is_prime(Integer(p))) {
    fail(ErrorCode::UnsupportedPair, "Z_(" + std::to_string(p) + "): localization needs a prime");
  }
  return {KKind::LocalizedIntegers, p};
}

KTag KTag::quad_ring(std::int64_t d) {
  if (d == 1 || !is_squarefree(d)) {
    fail(ErrorCode::UnsupportedPair, "Z[sqrt(" + std::to_string(d) + ")]: d must be squarefree");
  }
  return {KKind::QuadRing, d};
}

KTag KTag::quad_field(std::int64_t d) {
  if (d == 1 || !is_squarefree(d)) {
    fail(ErrorCode::UnsupportedPair, "Q(sqrt(" + std::to_string(d) + ")): d must be squarefree");
  }
  return {KKind::QuadField, d};
}

std::string KTag::str() const {
  switch (kind) {
    case KKind::Integers: return "Z";
    case KKind::Rationals: return "Q";
    case KKind::LocalizedIntegers: return "Z_(" + std::to_string(param) + ")";
    case KKind::QuadRing: return "Z[sqrt(" + std::to_string(param) + ")]";
    case KKind::QuadField: return "Q(sqrt(" + std::to_string(param) + "))";
  }
  return "?";
}

bool k_membership(const QuadElement& x, const KTag& tag) {
  switch (tag.kind) {
    case KKind::Integers:
      return x.is_rational() && x.a().is_integer();
    case KKind::Rationals:
      return x.is_rational();
    case KKind::LocalizedIntegers:
      return x.is_rational() && !divides(Integer(tag.param), x.a().den());
    case KKind::QuadRing:
      require_same_field(x, tag);
      return x.a().is_integer() && x.b().is_integer();
    case KKind::QuadField:
      require_same_field(x, tag);
      return true;
  }
  return false;
}

bool is_k_unit(const QuadElement& x, const KTag& tag) {
  if (x.is_zero() || !k_membership(x, tag)) return false;
  switch (tag.kind) {
    case KKind::Integers:
      return x.a().num().abs().is_one();
    case KKind::Rationals:
    case KKind::QuadField:
      return true;
    case KKind::LocalizedIntegers:
      return x.a().valuation(tag.param) == 0;
    case KKind::QuadRing:
      return x.norm().abs() == Rational(1);
  }
  return false;
}

QuadElement unit_normalizer(const QuadElement& x, const KTag& tag) {
  if (x.is_zero()) fail(ErrorCode::ZeroElement, "cannot normalize zero");
  switch (tag.kind) {
    case KKind::Integers:
      require_rational(x, tag);
      return QuadElement(x.a().sign() < 0 ? -1 : 1);
    case KKind::LocalizedIntegers: {
      require_rational(x, tag);
      std::int64_t v = x.a().valuation(tag.param);
      return QuadElement(rational_power(tag.param, v) / x.a());
    }
    case KKind::Rationals:
      return QuadElement(x.a().is_zero() ? x.b().inverse() : x.a().inverse());
    case KKind::QuadField:
      return x.inverse();
    case KKind::QuadRing: {
      require_same_field(x, tag);
      if (tag.param == -1) {
        // Four units; exactly one rotation lands in a > 0, b >= 0.
        const std::array<QuadElement, 4> units = {
            QuadElement(1), QuadElement(Rational(0), Rational(1), -1), QuadElement(-1),
            QuadElement(Rational(0), Rational(-1), -1)};
        for (const auto& u : units) {
          QuadElement y = u * x;
          if (y.a().sign() > 0 && y.b().sign() >= 0) return u;
        }
        ensure(false, "no Gaussian unit rotation found");
      }
      if (tag.param > 0) {
        fail(ErrorCode::UnsupportedPair, "unit normalization in real quadratic rings");
      }
      bool positive = x.a().sign() > 0 || (x.a().is_zero() && x.b().sign() > 0);
      return QuadElement(positive ? 1 : -1);
    }
  }
  return QuadElement(1);
}

bool quad_ring_is_euclidean(std::int64_t d) { return d == -1 || d == -2; }

QuadElement inf_fraction(const QuadElement& l1, const QuadElement& l2, const KTag& tag) {
  if (l1.is_zero() && l2.is_zero()) fail(ErrorCode::BothZero, "inf of (0, 0)");
  switch (tag.kind) {
    case KKind::Rationals:
    case KKind::QuadField:
      return QuadElement(1);
    case KKind::Integers: {
      require_rational(l1, tag);
      require_rational(l2, tag);
      const Rational& x = l1.a();
      const Rational& y = l2.a();
      return QuadElement(Rational(gcd(x.num(), y.num()), lcm(x.den(), y.den())));
    }
    case KKind::LocalizedIntegers: {
      require_rational(l1, tag);
      require_rational(l2, tag);
      std::int64_t p = tag.param;
      std::int64_t v;
      if (l1.is_zero()) {
        v = l2.a().valuation(p);
      } else if (l2.is_zero()) {
        v = l1.a().valuation(p);
      } else {
        v = std::min(l1.a().valuation(p), l2.a().valuation(p));
      }
      return QuadElement(rational_power(p, v));
    }
    case KKind::QuadRing: {
      require_same_field(l1, tag);
      require_same_field(l2, tag);
      if (!quad_ring_is_euclidean(tag.param)) {
        fail(ErrorCode::NotGCDDomain, tag.str() + " is not a GCD domain");
      }
      std::array<QuadElement, 2> xs = {l1, l2};
      Integer den = clearing_constant(xs, tag);
      QuadElement scale{Rational(den)};
      QuadElement g = quad_euclid_gcd(l1 * scale, l2 * scale);
      return unit_normalize(g / scale, tag);
    }
  }
  return QuadElement(1);
}

Integer clearing_constant(const QuadElement& x, const KTag& tag) {
  switch (tag.kind) {
    case KKind::Integers:
      require_rational(x, tag);
      return x.a().den();
    case KKind::LocalizedIntegers: {
      require_rational(x, tag);
      if (x.is_zero()) return Integer(1);
      std::int64_t v = x.a().valuation(tag.param);
      return v >= 0 ? Integer(1) : Integer(tag.param).pow(static_cast<unsigned>(-v));
    }
    case KKind::QuadRing:
      require_same_field(x, tag);
      return lcm(x.a().den(), x.b().den());
    case KKind::Rationals:
    case KKind::QuadField:
      if (!k_membership(x, tag)) {
        fail(ErrorCode::NotQuotientField, "no constant in " + tag.str() + " clears " + x.str());
      }
      return Integer(1);
  }
  return Integer(1);
}

Integer clearing_constant(std::span<const QuadElement> xs, const KTag& tag) {
  Integer c(1);
  for (const auto& x : xs) c = lcm(c, clearing_constant(x, tag));
  return c;
}

}  // namespace polycomp
