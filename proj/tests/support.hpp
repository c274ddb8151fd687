#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polycomp/composite.hpp"
#include "polycomp/exactnum.hpp"
#include "polycomp/poly.hpp"
#include "polycomp/ringdesc.hpp"

namespace testing_support {

using namespace polycomp;

inline PairRef z_q() { return make_pair_ref(KTag::integers(), FieldDesc::rationals()); }
inline PairRef z2_q() { return make_pair_ref(KTag::localized(2), FieldDesc::rationals()); }
inline PairRef q_qi() { return make_pair_ref(KTag::rationals(), FieldDesc::quadratic(-1)); }
inline PairRef zs5() { return make_pair_ref(KTag::quad_ring(-5), FieldDesc::quadratic(-5)); }

inline std::vector<PairRef> builtin_pairs() { return {z_q(), z2_q(), q_qi(), zs5()}; }

inline std::vector<PairRef> all_supported_pairs() {
  std::vector<PairRef> out{z_q(), z2_q(), make_pair_ref(KTag::localized(3), FieldDesc::rationals())};
  for (std::int64_t d : {-1, -2, -5, -6, -10, -13}) {
    out.push_back(make_pair_ref(KTag::rationals(), FieldDesc::quadratic(d)));
    out.push_back(make_pair_ref(KTag::quad_ring(d), FieldDesc::quadratic(d)));
  }
  return out;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(std::int64_t height, std::int64_t max_den) {
    return Rational(Integer(range(-height, height)), Integer(range(1, max_den)));
  }
  Rational nonzero_rational(std::int64_t height, std::int64_t max_den) {
    for (;;) {
      Rational r = rational(height, max_den);
      if (!r.is_zero()) return r;
    }
  }

  /// Element of L = Q(sqrt(d)), d == 0 meaning Q.
  QuadElement l_elem(std::int64_t d, std::int64_t height, std::int64_t max_den) {
    if (d == 0 || coin()) return QuadElement(rational(height, max_den));
    return QuadElement(rational(height, max_den), rational(height, max_den), d);
  }

  QuadElement k_elem(const KTag& tag, std::int64_t height) {
    switch (tag.kind) {
      case KKind::Integers: return QuadElement(range(-height, height));
      case KKind::Rationals: return QuadElement(rational(height, height));
      case KKind::LocalizedIntegers: {
        std::int64_t den = range(1, height);
        while (den % tag.param == 0) den = range(1, height);
        return QuadElement(Rational(Integer(range(-height, height)), Integer(den)));
      }
      case KKind::QuadRing:
        return QuadElement(Rational(range(-height, height)), Rational(range(-height, height)), tag.param);
      case KKind::QuadField:
        return QuadElement(rational(height, height), rational(height, height), tag.param);
    }
    return QuadElement(0);
  }

  QuadElement nonzero_k_elem(const KTag& tag, std::int64_t height) {
    for (;;) {
      QuadElement x = k_elem(tag, height);
      if (!x.is_zero()) return x;
    }
  }

  Poly l_poly(std::int64_t d, int max_degree, std::int64_t height, std::int64_t max_den) {
    std::vector<QuadElement> c;
    const int deg = static_cast<int>(range(0, max_degree));
    for (int i = 0; i <= deg; ++i) c.push_back(l_elem(d, height, max_den));
    return Poly(std::move(c));
  }

  /// Random element of R: constant term from K, the rest from L.
  CompositeElement element(const PairRef& pair, int max_degree, std::int64_t height) {
    Poly tail = l_poly(pair->l_field.d, max_degree, height, std::max<std::int64_t>(2, height / 4));
    std::vector<QuadElement> c(tail.coeffs().begin(), tail.coeffs().end());
    if (c.empty()) c.emplace_back(0);
    c[0] = k_elem(pair->k_tag, height);
    return CompositeElement(pair, Poly(std::move(c)));
  }

  CompositeElement nonzero_element(const PairRef& pair, int max_degree, std::int64_t height) {
    for (;;) {
      CompositeElement x = element(pair, max_degree, height);
      if (!x.is_zero()) return x;
    }
  }

  /// Nonzero element with its X-order drawn from [0, max_shift].
  CompositeElement shifted_element(const PairRef& pair, int max_degree, std::int64_t height, int max_shift) {
    CompositeElement x = nonzero_element(pair, max_degree, height);
    const auto k = static_cast<std::size_t>(range(0, max_shift));
    if (k == 0) return x;
    return CompositeElement(pair, x.poly().shifted_up(k));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support
