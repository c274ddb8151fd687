#include "polycomp/spectrum.hpp"

#include "polycomp/error.hpp"

namespace polycomp {

namespace {

bool is_rational_square(const Rational& r) {
  return r.sign() >= 0 && r.num().exact_sqrt() && r.den().exact_sqrt();
}

Rational rational_sqrt(const Rational& r) { return Rational(*r.num().exact_sqrt(), *r.den().exact_sqrt()); }

bool is_square_in_field(const QuadElement& x, std::int64_t d) {
  if (x.is_rational()) {
    if (is_rational_square(x.a())) return true;
    return d != 0 && is_rational_square(x.a() / Rational(d));
  }
  // (u + v sqrt(d))^2 = u^2 + d v^2 + 2uv sqrt(d)
  Rational n2 = x.norm();
  if (!is_rational_square(n2)) return false;
  Rational n = rational_sqrt(n2);
  for (const Rational& u2 : {(x.a() + n) / Rational(2), (x.a() - n) / Rational(2)}) {
    if (!u2.is_zero() && is_rational_square(u2)) return true;
  }
  return false;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer m = n.abs();
  for (Integer k(1); k * k <= m; k += Integer(1)) {
    if (!divides(k, m)) continue;
    out.push_back(k);
    Integer other = divexact(m, k);
    if (!(other == k)) out.push_back(other);
  }
  return out;
}

bool has_rational_root(const Poly& f) {
  Integer den(1);
  for (const auto& c : f.coeffs()) den = lcm(den, c.a().den());
  if (f.constant().is_zero()) return true;
  const Integer c0 = (f.constant().a() * Rational(den)).num();
  const Integer cn = (f.leading().a() * Rational(den)).num();
  for (const auto& u : positive_divisors(c0)) {
    for (const auto& v : positive_divisors(cn)) {
      for (const Rational& r : {Rational(u, v), Rational(-u, v)}) {
        if (f.eval(QuadElement(r)).is_zero()) return true;
      }
    }
  }
  return false;
}

std::string residue_description(const CompositePair& pair, const KIdeal& p) {
  const Integer n = p.norm().num();
  std::string size = n.str();
  if (!is_prime(n)) size = n.exact_sqrt()->str() + "^2";
  return pair.k_tag.str() + "/" + p.str() + ", a field of order " + size;
}

KIdeal first_prime_of_k(const KTag& tag) {
  switch (tag.kind) {
    case KKind::Integers: return KIdeal(tag, {QuadElement(2)});
    case KKind::LocalizedIntegers: return KIdeal(tag, {QuadElement(tag.param)});
    case KKind::QuadRing: return quad_prime_above_two(tag.param);
    case KKind::Rationals:
    case KKind::QuadField: break;
  }
  fail(ErrorCode::NotPrime, tag.str() + " is a field and has no nonzero prime");
}

}  // namespace

PrimeDescriptor PrimeDescriptor::from_t(Poly f) {
  PrimeDescriptor q;
  q.kind = Kind::FromT;
  if (f.is_zero()) fail(ErrorCode::NotPrime, "T(0) is the zero ideal");
  q.f = f.monic();
  return q;
}

PrimeDescriptor PrimeDescriptor::over_m(std::optional<KIdeal> p) {
  PrimeDescriptor q;
  q.kind = Kind::OverM;
  q.p = std::move(p);
  return q;
}

bool PrimeDescriptor::is_m() const {
  return (kind == Kind::FromT && f == Poly::x()) || (kind == Kind::OverM && !p);
}

std::string PrimeDescriptor::str() const {
  switch (kind) {
    case Kind::Zero: return "prime:0";
    case Kind::FromT: return f == Poly::x() ? "prime:M" : "prime:T(" + f.str() + ")";
    case Kind::OverM: return p ? "prime:K" + p->str() : "prime:M";
  }
  return "prime:?";
}

bool prime_contains(const PrimeDescriptor& q, const CompositeElement& x) {
  switch (q.kind) {
    case PrimeDescriptor::Kind::Zero: return x.is_zero();
    case PrimeDescriptor::Kind::FromT: return x.is_zero() || exact_quotient(x.poly(), q.f).has_value();
    case PrimeDescriptor::Kind::OverM:
      if (!q.p) return x.constant().is_zero();
      return q.p->contains(x.constant());
  }
  return false;
}

bool is_irreducible(const Poly& f, std::int64_t d) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  if (d == 0) {
    for (const auto& c : f.coeffs()) {
      if (!c.is_rational()) fail(ErrorCode::FieldMismatch, f.str() + " is not over Q");
    }
    if (n > 3) fail(ErrorCode::UnsupportedDegree, "irreducibility over Q is certified up to degree 3");
    return !has_rational_root(f);
  }
  if (n > 2) {
    fail(ErrorCode::UnsupportedDegree, "irreducibility over a quadratic field is certified up to degree 2");
  }
  const QuadElement& a = f.coeff(2);
  const QuadElement& b = f.coeff(1);
  const QuadElement& c = f.coeff(0);
  return !is_square_in_field(b * b - QuadElement(4) * a * c, d);
}

PrimeReport classify_prime(const CompositePair& pair, const PrimeDescriptor& q) {
  if (!pair.l_is_quotient_field_of_k) {
    fail(ErrorCode::NotQuotientField, pair.l_field.str() + " is not the quotient field of " +
                                          pair.k_tag.str());
  }
  const std::string k = pair.k_tag.str();
  const bool k_dim_one = pair.k_flags.krull_dim == 1;
  PrimeReport r;
  switch (q.kind) {
    case PrimeDescriptor::Kind::Zero:
      r = {"Zero", "(0)", false, false, false, 0, "R"};
      break;
    case PrimeDescriptor::Kind::FromT: {
      for (const auto& c : q.f.coeffs()) {
        if (c.d() != 0 && c.d() != pair.l_field.d) fail(ErrorCode::FieldMismatch, c.str() + " is not in " + pair.l_field.str());
      }
      if (!is_irreducible(q.f, pair.l_field.d)) fail(ErrorCode::NotPrime, q.f.str() + " is reducible");
      if (q.is_m()) {
        r = {"ContractionFromT", "(0)", true, true, false, 1, k};
      } else {
        std::string quotient = q.f.degree() == 1 ? pair.l_field.str()
                                                 : pair.l_field.str() + "[X]/(" + q.f.str() + ")";
        r = {"ContractionFromT", "(0)", false, false, true, 1, quotient};
      }
      break;
    }
    case PrimeDescriptor::Kind::OverM:
      if (!q.p) {
        r = {"OverM", "(0)", true, true, false, 1, k};
        break;
      }
      if (!(q.p->tag() == pair.k_tag)) fail(ErrorCode::PairMismatch, q.p->tag().str() + " vs " + k);
      if (!is_prime_k_ideal(*q.p)) fail(ErrorCode::NotPrime, q.p->str() + " is not a prime of " + k);
      ensure(k_dim_one, "fact table gives K of dimension 1 for every quotient-field pair");
      r = {"OverM", q.p->str(), true, false, true, 2, residue_description(pair, *q.p)};
      break;
  }
  return r;
}

std::int64_t krull_dim(const CompositePair& pair) {
  if (!pair.l_is_quotient_field_of_k) {
    fail(ErrorCode::NotQuotientField, "dimension formula needs L = qf(K); " + pair.l_field.str() +
                                          " is not the quotient field of " + pair.k_tag.str());
  }
  if (!pair.k_flags.krull_dim) fail(ErrorCode::InsufficientData, "dim " + pair.k_tag.str() + " unknown");
  return std::max<std::int64_t>(1 + *pair.k_flags.krull_dim, 1);
}

PrimeChain witness_chain(const PairRef& pair) {
  const std::int64_t dim = krull_dim(*pair);
  ensure(dim == 2, "fact table gives dim K = 1 for every quotient-field pair");
  KIdeal p = first_prime_of_k(pair->k_tag);
  const QuadElement p_gen = p.least_positive_rational();

  PrimeChain chain;
  chain.links = {PrimeDescriptor::zero(), PrimeDescriptor::m(), PrimeDescriptor::over_m(p)};
  chain.separators = {CompositeElement(pair, Poly::x()), CompositeElement(pair, Poly(p_gen))};

  for (const auto& link : chain.links) classify_prime(*pair, link);
  for (std::size_t i = 0; i + 1 < chain.links.size(); ++i) {
    ensure(prime_contains(chain.links[i + 1], chain.separators[i]) &&
               !prime_contains(chain.links[i], chain.separators[i]),
           "chain separator does not separate");
  }
  ensure(static_cast<std::int64_t>(chain.links.size()) - 1 == dim, "chain length differs from dimension");
  return chain;
}

}  // namespace polycomp
