#include <doctest.h>

#include "polycomp/composite.hpp"
#include "polycomp/error.hpp"
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

}  // namespace

TEST_CASE("construction enforces the constant-term condition") {
  CHECK_NOTHROW(el(z_q(), "1/2*X + 3"));
  expect_error(ErrorCode::NotInRing, [] { (void)el(z_q(), "X + 1/2"); });
  CHECK_NOTHROW(el(z2_q(), "1/3"));
  expect_error(ErrorCode::NotInRing, [] { (void)el(z2_q(), "1/2"); });
  CHECK_NOTHROW(el(q_qi(), "sqrt(-1)*X + 1/2"));
  expect_error(ErrorCode::NotInRing, [] { (void)el(q_qi(), "sqrt(-1)"); });
  CHECK_NOTHROW(el(zs5(), "(1/2+sqrt(-5))*X + 1 + sqrt(-5)"));
  expect_error(ErrorCode::FieldMismatch, [] { (void)el(z_q(), "sqrt(-1)*X"); });
  expect_error(ErrorCode::FieldMismatch, [] { (void)el(zs5(), "sqrt(-1)*X"); });
}

TEST_CASE("ring axioms on random triples") {
  Gen g(51);
  for (const PairRef& p : builtin_pairs()) {
    for (int i = 0; i < 200; ++i) {
      const CompositeElement a = g.element(p, 4, 12);
      const CompositeElement b = g.element(p, 4, 12);
      const CompositeElement c = g.element(p, 4, 12);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + CompositeElement::zero(p) == a);
      CHECK(a * CompositeElement::one(p) == a);
      CHECK((a + (-a)).is_zero());
      CHECK(add(a, neg(b)) == a - b);
      CHECK(mul(a, b) == a * b);
      for (const CompositeElement& x : {a + b, a * b, a - c, -a}) {
        CHECK(k_membership(x.constant(), p->k_tag));
      }
    }
  }
}

TEST_CASE("mixing rings is rejected") {
  expect_error(ErrorCode::PairMismatch, [] { (void)(el(z_q(), "X") + el(z2_q(), "X")); });
  CHECK(el(z_q(), "X") + el(z_q(), "X") == el(z_q(), "2*X"));
}

TEST_CASE("X-order") {
  CHECK(ord_x(el(z_q(), "3*X^2 + X^5")) == 2);
  CHECK(ord_x(el(z_q(), "7")) == 0);
  expect_error(ErrorCode::ZeroElement, [] { (void)ord_x(CompositeElement::zero(z_q())); });
}

TEST_CASE("divisibility") {
  const PairRef p = z_q();
  CHECK(divides(el(p, "2"), el(p, "X")) == el(p, "1/2*X"));
  CHECK_FALSE(divides(el(p, "X"), el(p, "2")).has_value());
  CHECK_FALSE(divides(el(p, "2*X"), el(p, "X")).has_value());
  CHECK(divides(el(p, "X"), el(p, "2*X")) == el(p, "2"));
  CHECK(divides(el(p, "X"), el(p, "0")) == CompositeElement::zero(p));
  expect_error(ErrorCode::ZeroDivisor, [&] { (void)divides(CompositeElement::zero(p), el(p, "X")); });

  Gen g(52);
  for (const PairRef& q : builtin_pairs()) {
    for (int i = 0; i < 200; ++i) {
      const CompositeElement a = g.nonzero_element(q, 3, 9);
      const auto self = divides(a, a);
      REQUIRE(self);
      CHECK(*self == CompositeElement::one(q));
      // Witnessed chain a | a*b | a*b*c.
      const CompositeElement b = g.nonzero_element(q, 3, 9);
      const CompositeElement c = g.nonzero_element(q, 3, 9);
      const auto q1 = divides(a, a * b);
      const auto q2 = divides(a * b, a * b * c);
      REQUIRE(q1);
      REQUIRE(q2);
      CHECK(*q1 == b);
      CHECK(*q2 == c);
      const auto q3 = divides(a, a * b * c);
      REQUIRE(q3);
      CHECK(*q3 == *q1 * *q2);
    }
  }
}

TEST_CASE("units and normalization") {
  const PairRef p = z_q();
  CHECK(is_unit(el(p, "-1")));
  CHECK_FALSE(is_unit(el(p, "2")));
  CHECK_FALSE(is_unit(el(p, "1 + X")));
  CHECK(is_unit(el(z2_q(), "3")));
  CHECK(unit_normalize(el(p, "-2*X + 3*X^2")) == el(p, "2*X - 3*X^2"));
  CHECK(unit_normalize(el(z2_q(), "12 + X")) == el(z2_q(), "4 + 1/3*X"));
  CHECK(associates(el(p, "-X"), el(p, "X")));
  CHECK_FALSE(associates(el(p, "2*X"), el(p, "X")));

  Gen g(53);
  for (const PairRef& q : builtin_pairs()) {
    for (int i = 0; i < 200; ++i) {
      const CompositeElement a = g.nonzero_element(q, 3, 9);
      const CompositeElement n = unit_normalize(a);
      CHECK(associates(a, n));
      CHECK(unit_normalize(n) == n);
      CHECK(unit_normalize(a.scaled(QuadElement(-1))) == n);
    }
  }
}

TEST_CASE("scaling an element of L[X] into R") {
  const ScaledIntoR s = scale_into_r(z_q(), parse_poly("1/6 + X"));
  CHECK(s.c == QuadElement(6));
  CHECK(s.r == el(z_q(), "1 + 6*X"));
  expect_error(ErrorCode::NotQuotientField, [] { (void)scale_into_r(q_qi(), parse_poly("X")); });
  expect_error(ErrorCode::ZeroElement, [] { (void)scale_into_r(z_q(), Poly()); });

  Gen g(54);
  for (const PairRef& q : {z_q(), z2_q(), zs5()}) {
    for (int i = 0; i < 300; ++i) {
      Poly t = g.l_poly(q->l_field.d, 4, 30, 20);
      if (t.is_zero()) continue;
      const ScaledIntoR r = scale_into_r(q, t);
      CHECK(k_membership(r.c, q->k_tag));
      CHECK_FALSE(r.c.is_zero());
      CHECK(r.r.poly() == t.scaled(r.c));
      CHECK(k_membership(r.r.constant(), q->k_tag));
    }
  }
}

TEST_CASE("scaling by K") {
  CHECK(el(z_q(), "X + 1").scaled(QuadElement(3)) == el(z_q(), "3*X + 3"));
  expect_error(ErrorCode::NotInRing, [] { (void)el(z_q(), "X + 1").scaled(QuadElement(Rational(Integer(1), Integer(2)))); });
}
