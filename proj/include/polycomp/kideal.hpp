#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycomp/exactnum.hpp"

namespace polycomp {

/// Nonzero finitely generated fractional ideal of K inside L.
///
/// Z, Z_(p) and Q keep a single canonical generator. Z[sqrt(d)] keeps the
/// Hermite basis {q/D, (r + s*sqrt(d))/D} (0 <= r < q) of the underlying
/// Z-lattice. Every basis element carries K-coefficients on the input
/// generators, so membership answers come with a combination.
class KIdeal {
 public:
  /// Zero generators are allowed (they get coefficient 0); throws ZeroInput
  /// if every generator is zero.
  KIdeal(KTag tag, std::vector<QuadElement> gens);

  const KTag& tag() const noexcept { return tag_; }
  const std::vector<QuadElement>& gens() const noexcept { return gens_; }

  /// Canonical basis: one element for rank-one K, two for quadratic rings.
  const std::vector<QuadElement>& basis() const noexcept { return basis_; }

  /// K-coefficients c with sum c[i]*gens()[i] == x, if x is in the ideal.
  std::optional<std::vector<QuadElement>> coefficients(const QuadElement& x) const;
  bool contains(const QuadElement& x) const { return coefficients(x).has_value(); }

  /// Least positive rational in the ideal, with its coefficients.
  QuadElement least_positive_rational() const;
  std::vector<QuadElement> least_positive_rational_coefficients() const;

  /// Absolute norm; multiplicative on products.
  Rational norm() const;

  /// A generator when the ideal is principal. Quadratic rings decide this by
  /// searching for an element whose norm equals the ideal norm.
  std::optional<QuadElement> principal_generator() const;

  /// One generator if principal, otherwise the two basis elements.
  std::vector<QuadElement> reduced_generators() const;

  bool is_integral() const;

  /// "(2)", "(2; (1+sqrt(-5)))" from the reduced generators.
  std::string str() const;

  friend KIdeal operator*(const KIdeal& a, const KIdeal& b);
  /// Same ideal (compares canonical bases).
  friend bool operator==(const KIdeal& a, const KIdeal& b) { return a.tag_ == b.tag_ && a.basis_ == b.basis_; }

 private:
  void build_rank_one();
  void build_lattice();
  std::optional<std::vector<QuadElement>> lattice_coefficients(const QuadElement& x) const;

  KTag tag_;
  std::vector<QuadElement> gens_;
  std::vector<QuadElement> basis_;
  std::vector<std::vector<QuadElement>> basis_coeffs_;
  // Lattice data: D*ideal has Z-basis q, r + s*sqrt(d).
  Integer den_{1}, q_{1}, r_{0}, s_{1};
};

/// Prime ideal of K above 2 in Z[sqrt(d)]: (2, 1 + sqrt(d)) for d = 3 mod 4,
/// (2, sqrt(d)) for d = 2 mod 4.
KIdeal quad_prime_above_two(std::int64_t d);

/// True iff the integral ideal is a prime ideal of K. For Z[sqrt(d)] this
/// checks that the residue ring has prime order or is a field of order p^2.
bool is_prime_k_ideal(const KIdeal& p);

}  // namespace polycomp
