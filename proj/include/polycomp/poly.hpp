#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polycomp/exactnum.hpp"

namespace polycomp {

/// Dense univariate polynomial over L, constant term first, trailing zeros
/// trimmed. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<QuadElement> coeffs);
  Poly(QuadElement constant);  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(QuadElement(constant)) {}  // NOLINT(google-explicit-constructor)

  /// c * X^k
  static Poly monomial(QuadElement c, std::size_t k);
  static Poly x() { return monomial(QuadElement(1), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const QuadElement> coeffs() const noexcept { return c_; }

  /// Coefficient of X^i; zero beyond the degree.
  const QuadElement& coeff(std::size_t i) const;
  const QuadElement& constant() const { return coeff(0); }
  const QuadElement& leading() const;

  /// Index of the lowest nonzero coefficient. Requires a nonzero polynomial.
  std::size_t ord() const;

  Poly monic() const;
  Poly scaled(const QuadElement& s) const;
  /// Multiply by X^k.
  Poly shifted_up(std::size_t k) const;
  /// Divide by X^k; requires ord() >= k.
  Poly shifted_down(std::size_t k) const;

  QuadElement eval(const QuadElement& x) const;

  /// Descending degree, e.g. "3/2*X^2 - X + (1+sqrt(-5))".
  std::string str() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<QuadElement> c_;
};

/// Quotient and remainder in L[X]; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// a / b when b divides a in L[X].
std::optional<Poly> exact_quotient(const Poly& a, const Poly& b);

struct PolyXgcd {
  Poly g;      // monic gcd (zero only if both inputs are zero)
  Poly alpha;  // alpha*t1 + beta*t2 == g
  Poly beta;
};

/// Monic gcd without cofactors.
Poly poly_gcd(const Poly& t1, const Poly& t2);

/// Extended Euclidean algorithm in L[X].
PolyXgcd poly_xgcd(const Poly& t1, const Poly& t2);

}  // namespace polycomp
