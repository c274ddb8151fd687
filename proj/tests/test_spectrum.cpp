#include <doctest.h>

#include "polycomp/error.hpp"
#include "polycomp/spectrum.hpp"
#include "polycomp/text.hpp"
#include "printers.hpp"
#include "support.hpp"

using namespace polycomp;
using namespace testing_support;

namespace {

CompositeElement el(const PairRef& p, const char* s) { return CompositeElement(p, parse_poly(s)); }

void expect_error(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL("expected " << error_name(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

// Rational-root search on the integerized polynomial.
bool has_rational_root(const Poly& f) {
  Integer lcm(1);
  for (const auto& c : f.coeffs()) lcm = polycomp::lcm(lcm, c.a().den());
  std::vector<std::int64_t> z;
  for (const auto& c : f.coeffs()) {
    const Rational r = c.a() * Rational(lcm);
    z.push_back(r.num().small_value());
  }
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) return true;
  const std::int64_t a0 = z.front() < 0 ? -z.front() : z.front();
  const std::int64_t an = z.back() < 0 ? -z.back() : z.back();
  for (std::int64_t p = 1; p <= a0; ++p) {
    if (a0 % p != 0) continue;
    for (std::int64_t q = 1; q <= an; ++q) {
      if (an % q != 0) continue;
      for (std::int64_t s : {p, -p}) {
        const QuadElement x{Rational(Integer(s), Integer(q))};
        if (f.eval(x).is_zero()) return true;
      }
    }
  }
  return false;
}

PrimeDescriptor over(const KTag& tag, std::vector<QuadElement> gens) {
  return PrimeDescriptor::over_m(KIdeal(tag, std::move(gens)));
}

std::vector<PrimeDescriptor> sample_primes(const PairRef& p) {
  std::vector<PrimeDescriptor> out{PrimeDescriptor::zero(), PrimeDescriptor::m(),
                                   PrimeDescriptor::from_t(parse_poly("X - 1")),
                                   PrimeDescriptor::from_t(parse_poly("X + 1/2")),
                                   PrimeDescriptor::from_t(parse_poly("X^2 + 3"))};
  switch (p->k_tag.kind) {
    case KKind::Integers:
      out.push_back(over(p->k_tag, {QuadElement(3)}));
      out.push_back(over(p->k_tag, {QuadElement(2)}));
      break;
    case KKind::LocalizedIntegers: out.push_back(over(p->k_tag, {QuadElement(p->k_tag.param)})); break;
    case KKind::QuadRing: out.push_back(PrimeDescriptor::over_m(quad_prime_above_two(p->k_tag.param))); break;
    default: break;
  }
  return out;
}

}  // namespace

TEST_CASE("Krull dimension") {
  CHECK(krull_dim(*z_q()) == 2);
  CHECK(krull_dim(*z2_q()) == 2);
  CHECK(krull_dim(*zs5()) == 2);
  expect_error(ErrorCode::NotQuotientField, [] { (void)krull_dim(*q_qi()); });
}

TEST_CASE("witness chains have strict links and correct separators") {
  for (const PairRef& p : {z_q(), z2_q(), zs5()}) {
    CAPTURE(p->str());
    const PrimeChain c = witness_chain(p);
    REQUIRE(c.links.size() == static_cast<std::size_t>(krull_dim(*p)) + 1);
    REQUIRE(c.separators.size() + 1 == c.links.size());
    CHECK(c.links.front().kind == PrimeDescriptor::Kind::Zero);
    CHECK(c.links[1].is_m());
    for (std::size_t i = 0; i + 1 < c.links.size(); ++i) {
      CHECK(prime_contains(c.links[i + 1], c.separators[i]));
      CHECK_FALSE(prime_contains(c.links[i], c.separators[i]));
    }
    for (std::size_t i = 0; i < c.links.size(); ++i) {
      const PrimeReport r = classify_prime(*p, c.links[i]);
      CHECK(r.height == static_cast<std::int64_t>(i));
    }
    CHECK(classify_prime(*p, c.links.back()).maximal);
  }
}

TEST_CASE("prime classification worked values") {
  const PrimeReport zero = classify_prime(*z_q(), PrimeDescriptor::zero());
  CHECK(zero.branch == "Zero");
  CHECK(zero.height == 0);
  CHECK_FALSE(zero.maximal);

  const PrimeReport m = classify_prime(*z_q(), PrimeDescriptor::m());
  CHECK(m.branch == "ContractionFromT");
  CHECK(m.equals_m);
  CHECK(m.contains_m);
  CHECK_FALSE(m.maximal);
  CHECK(m.quotient == "Z");

  const PrimeReport lin = classify_prime(*z_q(), PrimeDescriptor::from_t(parse_poly("X - 1")));
  CHECK(lin.contraction == "(0)");
  CHECK_FALSE(lin.contains_m);
  CHECK(lin.maximal);
  CHECK(lin.height == 1);

  const PrimeReport two = classify_prime(*zs5(), PrimeDescriptor::over_m(quad_prime_above_two(-5)));
  CHECK(two.branch == "OverM");
  CHECK(two.contains_m);
  CHECK_FALSE(two.equals_m);
  CHECK(two.maximal);
  CHECK(two.height == 2);

  CHECK(PrimeDescriptor::over_m(std::nullopt).is_m());
  CHECK(PrimeDescriptor::from_t(parse_poly("X - 1")).str() == "prime:T(X - 1)");
  CHECK(PrimeDescriptor::m().str() == "prime:M");
}

TEST_CASE("classification errors") {
  expect_error(ErrorCode::NotQuotientField, [] { (void)classify_prime(*q_qi(), PrimeDescriptor::m()); });
  expect_error(ErrorCode::NotPrime, [] {
    (void)classify_prime(*z_q(), PrimeDescriptor::over_m(KIdeal(KTag::integers(), {QuadElement(4)})));
  });
  expect_error(ErrorCode::NotPrime,
               [] { (void)classify_prime(*z_q(), PrimeDescriptor::from_t(parse_poly("X^2 - 1"))); });
  expect_error(ErrorCode::UnsupportedDegree,
               [] { (void)classify_prime(*z_q(), PrimeDescriptor::from_t(parse_poly("X^4 + 1"))); });
}

TEST_CASE("irreducibility against rational roots") {
  Gen g(91);
  for (int i = 0; i < 400; ++i) {
    Poly f = g.l_poly(0, 3, 12, 3);
    if (f.degree() < 1) continue;
    CHECK(is_irreducible(f, 0) == (f.degree() == 1 || !has_rational_root(f)));
  }
  CHECK_FALSE(is_irreducible(parse_poly("X^2 + 1"), -1));
  CHECK(is_irreducible(parse_poly("X^2 + 1"), -2));
  CHECK_FALSE(is_irreducible(parse_poly("X^2 + 5/4"), -5));
  CHECK_FALSE(is_irreducible(parse_poly("X^2 + 2*sqrt(-1)*X - 1"), -1));
  CHECK(is_irreducible(parse_poly("X^2 - 2"), -1));
  expect_error(ErrorCode::UnsupportedDegree, [] { (void)is_irreducible(parse_poly("X^3 + 2"), -1); });
}

TEST_CASE("every sample prime is closed under the prime condition") {
  Gen g(92);
  for (const PairRef& p : {z_q(), z2_q(), zs5()}) {
    for (const PrimeDescriptor& q : sample_primes(p)) {
      CAPTURE(q.str());
      // ab in Q iff a in Q or b in Q.
      for (int i = 0; i < 150; ++i) {
        const CompositeElement a = g.element(p, 3, 6);
        const CompositeElement b = g.element(p, 3, 6);
        CHECK(prime_contains(q, a * b) == (prime_contains(q, a) || prime_contains(q, b)));
        CHECK(prime_contains(q, a + a * b) == (prime_contains(q, a) || prime_contains(q, CompositeElement::one(p) + b)));
      }
      CHECK(prime_contains(q, CompositeElement::zero(p)));
      CHECK_FALSE(prime_contains(q, CompositeElement::one(p)));
      const PrimeReport r = classify_prime(*p, q);
      CHECK(r.contains_m == prime_contains(q, el(p, "X")));
      CHECK(r.contains_m == prime_contains(q, el(p, "1/7*X^2 + 3/5*X")));
    }
  }
}
