#include "polycomp/gcdengine.hpp"

#include "polycomp/error.hpp"
#include "polycomp/oracle.hpp"

namespace polycomp {

PolyXgcd poly_gcd_l(const Poly& t1, const Poly& t2) {
  if (t1.is_zero() && t2.is_zero()) fail(ErrorCode::BothZero, "gcd of (0, 0)");
  return poly_xgcd(t1, t2);
}

void require_gcd_configuration(const CompositePair& pair) {
  if (!property_holds(pair, Property::GCD)) {
    fail(ErrorCode::NotGCDConfiguration, pair.str() + " is not a GCD domain");
  }
}

Poly inf_r_units_of_tm(const CompositePair& pair, const Poly& t, const Poly& u) {
  if (u.constant().is_zero()) fail(ErrorCode::UnitDenominatorZero, "u(0) = 0");
  require_gcd_configuration(pair);
  Poly g = poly_gcd(t, u);
  QuadElement l = inf_fraction(t.constant(), u.constant(), pair.k_tag);
  return g.scaled(l / g.constant());
}

GcdResult gcd_composite(const CompositeElement& a, const CompositeElement& b) {
  require_same_pair(a, b);
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroInput, "gcd with a zero argument");
  require_gcd_configuration(a.ring());

  const std::size_t oa = a.poly().ord();
  const std::size_t ob = b.poly().ord();
  const std::size_t v = std::min(oa, ob);
  // Order the pair so that u = b / X^v has a nonzero constant term.
  const bool swapped = ob != v;
  const Poly& pa = swapped ? b.poly() : a.poly();
  const Poly& pb = swapped ? a.poly() : b.poly();
  Poly t = pa.shifted_down(v);
  Poly u = pb.shifted_down(v);

  Poly h = inf_r_units_of_tm(a.ring(), t, u).shifted_up(v);
  ensure(k_membership(h.constant(), a.k_tag()), "assembled gcd left R");
  CompositeElement g = unit_normalize(CompositeElement(a.pair(), std::move(h)));

  auto qa = divides(g, a);
  auto qb = divides(g, b);
  ensure(qa.has_value() && qb.has_value(), "gcd does not divide its inputs");
  return {std::move(g), std::make_pair(std::move(*qa), std::move(*qb))};
}

CompositeElement lcm_composite(const CompositeElement& a, const CompositeElement& b) {
  GcdResult r = gcd_composite(a, b);
  // a*b/g == (a/g)*b, already in R.
  return unit_normalize(r.cofactors->first * b);
}

}  // namespace polycomp
