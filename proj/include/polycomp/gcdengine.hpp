#pragma once

#include <optional>
#include <utility>

#include "polycomp/composite.hpp"

namespace polycomp {

/// Monic gcd in L[X] with alpha*t1 + beta*t2 == g. Throws BothZero.
PolyXgcd poly_gcd_l(const Poly& t1, const Poly& t2);

/// inf_R(t, u) for t, u in L[X] with u(0) != 0: the L[X]-gcd rescaled so its
/// constant term is inf_K(t(0), u(0)). The result need not lie in R on its own.
/// Throws UnitDenominatorZero, NotGCDConfiguration.
Poly inf_r_units_of_tm(const CompositePair& pair, const Poly& t, const Poly& u);

struct GcdResult {
  CompositeElement g;
  std::optional<std::pair<CompositeElement, CompositeElement>> cofactors;  // a/g, b/g
};

/// Greatest common divisor in R, unit-normalized, with exact cofactors.
/// Throws ZeroInput, NotGCDConfiguration.
GcdResult gcd_composite(const CompositeElement& a, const CompositeElement& b);

/// a*b / gcd(a, b), unit-normalized.
CompositeElement lcm_composite(const CompositeElement& a, const CompositeElement& b);

/// Throws NotGCDConfiguration unless the oracle's GCD verdict holds.
void require_gcd_configuration(const CompositePair& pair);

}  // namespace polycomp
