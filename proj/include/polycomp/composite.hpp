#pragma once

#include <optional>
#include <string>

#include "polycomp/error.hpp"
#include "polycomp/poly.hpp"
#include "polycomp/ringdesc.hpp"

namespace polycomp {

/// Element of R = K + X*L[X]: a polynomial over L whose constant term lies in K.
class CompositeElement {
 public:
  /// Throws NotInRing if the constant term is not in K.
  CompositeElement(PairRef pair, Poly poly);
  static CompositeElement zero(PairRef pair) { return {std::move(pair), Poly(), Trusted{}}; }
  static CompositeElement one(PairRef pair) { return {std::move(pair), Poly(1), Trusted{}}; }

  const PairRef& pair() const noexcept { return pair_; }
  const CompositePair& ring() const noexcept { return *pair_; }
  const KTag& k_tag() const noexcept { return pair_->k_tag; }
  const Poly& poly() const noexcept { return p_; }

  bool is_zero() const noexcept { return p_.is_zero(); }
  int degree() const noexcept { return p_.degree(); }
  const QuadElement& coeff(std::size_t i) const { return p_.coeff(i); }
  const QuadElement& constant() const { return p_.constant(); }

  std::string str() const { return p_.str(); }

  friend CompositeElement operator+(const CompositeElement& a, const CompositeElement& b);
  friend CompositeElement operator-(const CompositeElement& a, const CompositeElement& b);
  friend CompositeElement operator*(const CompositeElement& a, const CompositeElement& b);
  friend CompositeElement operator-(const CompositeElement& a);

  /// Multiplication by an element of K.
  CompositeElement scaled(const QuadElement& k) const;

  friend bool operator==(const CompositeElement& a, const CompositeElement& b) {
    return a.pair_->same_ring(*b.pair_) && a.p_ == b.p_;
  }

 private:
  struct Trusted {};
  CompositeElement(PairRef pair, Poly poly, Trusted) : pair_(std::move(pair)), p_(std::move(poly)) {
#ifdef POLYCOMP_CHECKED
    ensure(k_membership(p_.constant(), pair_->k_tag), "constant term left K");
#endif
  }

  PairRef pair_;
  Poly p_;
};

CompositeElement add(const CompositeElement& a, const CompositeElement& b);
CompositeElement mul(const CompositeElement& a, const CompositeElement& b);
CompositeElement neg(const CompositeElement& a);

/// Throws PairMismatch unless a and b live in the same ring.
void require_same_pair(const CompositeElement& a, const CompositeElement& b);

/// Index of the first nonzero coefficient. Throws ZeroElement.
std::size_t ord_x(const CompositeElement& a);

/// q with b*q == a and q in R, if it exists. divides(b, 0) is 0.
/// Throws ZeroDivisor when b is zero.
std::optional<CompositeElement> divides(const CompositeElement& b, const CompositeElement& a);

/// Units of R are the units of K.
bool is_unit(const CompositeElement& a);

/// Canonical associate: multiplied by the K-unit that normalizes the lowest
/// nonzero coefficient.
CompositeElement unit_normalize(const CompositeElement& a);

/// True iff a and b differ by a unit of R.
bool associates(const CompositeElement& a, const CompositeElement& b);

struct ScaledIntoR {
  QuadElement c;  // nonzero element of K
  CompositeElement r;  // r == c*t
};

/// Clears the constant term of t into K with the least positive constant.
/// Throws NotQuotientField unless L = qf(K); throws ZeroElement for t == 0.
ScaledIntoR scale_into_r(const PairRef& pair, const Poly& t);

}  // namespace polycomp
