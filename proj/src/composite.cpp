#include "polycomp/composite.hpp"

#include "polycomp/error.hpp"

namespace polycomp {

CompositeElement::CompositeElement(PairRef pair, Poly poly) : pair_(std::move(pair)), p_(std::move(poly)) {
  ensure(pair_ != nullptr, "composite element without a ring");
  for (const auto& c : p_.coeffs()) {
    if (c.d() != 0 && c.d() != pair_->l_field.d) {
      fail(ErrorCode::FieldMismatch, c.str() + " is not in " + pair_->l_field.str());
    }
  }
  if (!k_membership(p_.constant(), pair_->k_tag)) {
    fail(ErrorCode::NotInRing, "constant term " + p_.constant().str() + " of " + p_.str() +
                                   " is not in " + pair_->k_tag.str());
  }
}

void require_same_pair(const CompositeElement& a, const CompositeElement& b) {
  if (a.pair() != b.pair() && !a.ring().same_ring(b.ring())) {
    fail(ErrorCode::PairMismatch, a.ring().str() + " vs " + b.ring().str());
  }
}

CompositeElement operator+(const CompositeElement& a, const CompositeElement& b) {
  require_same_pair(a, b);
  return {a.pair_, a.p_ + b.p_, CompositeElement::Trusted{}};
}

CompositeElement operator-(const CompositeElement& a, const CompositeElement& b) {
  require_same_pair(a, b);
  return {a.pair_, a.p_ - b.p_, CompositeElement::Trusted{}};
}

CompositeElement operator*(const CompositeElement& a, const CompositeElement& b) {
  require_same_pair(a, b);
  return {a.pair_, a.p_ * b.p_, CompositeElement::Trusted{}};
}

CompositeElement operator-(const CompositeElement& a) {
  return {a.pair_, -a.p_, CompositeElement::Trusted{}};
}

CompositeElement CompositeElement::scaled(const QuadElement& k) const {
  if (!k_membership(k, k_tag())) fail(ErrorCode::NotInRing, k.str() + " is not in " + k_tag().str());
  return {pair_, p_.scaled(k), Trusted{}};
}

CompositeElement add(const CompositeElement& a, const CompositeElement& b) { return a + b; }
CompositeElement mul(const CompositeElement& a, const CompositeElement& b) { return a * b; }
CompositeElement neg(const CompositeElement& a) { return -a; }

std::size_t ord_x(const CompositeElement& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "X-order of zero");
  return a.poly().ord();
}

std::optional<CompositeElement> divides(const CompositeElement& b, const CompositeElement& a) {
  require_same_pair(a, b);
  if (b.is_zero()) fail(ErrorCode::ZeroDivisor, "division by zero");
  if (a.is_zero()) return CompositeElement::zero(a.pair());
  if (a.degree() < b.degree()) return std::nullopt;
  // Low-order check first: a nonzero quotient needs ord(a) >= ord(b).
  if (a.poly().ord() < b.poly().ord()) return std::nullopt;
  auto q = exact_quotient(a.poly(), b.poly());
  if (!q || !k_membership(q->constant(), a.k_tag())) return std::nullopt;
  return CompositeElement(a.pair(), std::move(*q));
}

bool is_unit(const CompositeElement& a) {
  return a.degree() == 0 && is_k_unit(a.constant(), a.k_tag());
}

CompositeElement unit_normalize(const CompositeElement& a) {
  if (a.is_zero()) return a;
  const QuadElement& low = a.coeff(a.poly().ord());
  QuadElement u = unit_normalizer(low, a.k_tag());
  if (u.is_one()) return a;
  return a.scaled(u);
}

bool associates(const CompositeElement& a, const CompositeElement& b) {
  require_same_pair(a, b);
  return unit_normalize(a) == unit_normalize(b);
}

ScaledIntoR scale_into_r(const PairRef& pair, const Poly& t) {
  if (!pair->l_is_quotient_field_of_k) {
    fail(ErrorCode::NotQuotientField, pair->l_field.str() + " is not the quotient field of " +
                                          pair->k_tag.str());
  }
  if (t.is_zero()) fail(ErrorCode::ZeroElement, "scale_into_r of zero");
  QuadElement c{Rational(clearing_constant(t.constant(), pair->k_tag))};
  CompositeElement r(pair, t.scaled(c));
  return {std::move(c), std::move(r)};
}

}  // namespace polycomp
