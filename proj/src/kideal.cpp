#include "polycomp/kideal.hpp"

#include <utility>

#include "polycomp/error.hpp"

namespace polycomp {

namespace {

QuadElement quad(const Integer& a, const Integer& b, const Integer& den, std::int64_t d) {
  return QuadElement(Rational(a, den), Rational(b, den), d);
}

// Row of the Hermite reduction: lattice vector (a, b) and its integer
// combination over the 2n generators g_i, sqrt(d)*g_i.
struct Row {
  Integer a, b;
  std::vector<Integer> t;
};

void sub_multiple(Row& x, const Row& y, const Integer& k) {
  if (k.is_zero()) return;
  x.a -= k * y.a;
  x.b -= k * y.b;
  for (std::size_t i = 0; i < x.t.size(); ++i) {
    if (!y.t[i].is_zero()) x.t[i] -= k * y.t[i];
  }
}

void negate(Row& x) {
  x.a = -x.a;
  x.b = -x.b;
  for (auto& v : x.t) v = -v;
}

// Euclid over rows on one column; afterwards at most one row (returned) has a
// nonzero entry there, and that entry is positive.
std::optional<Row> eliminate(std::vector<Row>& rows, Integer Row::*col) {
  for (;;) {
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((rows[i].*col).is_zero()) continue;
      if (pivot == rows.size() || (rows[i].*col).abs() < (rows[pivot].*col).abs()) pivot = i;
    }
    if (pivot == rows.size()) return std::nullopt;
    bool others = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot || (rows[i].*col).is_zero()) continue;
      sub_multiple(rows[i], rows[pivot], floor_div(rows[i].*col, rows[pivot].*col));
      others = others || !(rows[i].*col).is_zero();
    }
    if (!others) {
      Row p = std::move(rows[pivot]);
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
      if ((p.*col).sign() < 0) negate(p);
      return p;
    }
  }
}

std::int64_t legendre(const Integer& a, const Integer& p) {
  mpz_class x = a.to_mpz(), m = p.to_mpz();
  return mpz_legendre(x.get_mpz_t(), m.get_mpz_t());
}

}  // namespace

KIdeal::KIdeal(KTag tag, std::vector<QuadElement> gens) : tag_(tag), gens_(std::move(gens)) {
  bool nonzero = false;
  for (const auto& g : gens_) nonzero = nonzero || !g.is_zero();
  if (!nonzero) fail(ErrorCode::ZeroInput, "fractional ideal with no nonzero generator");
  if (tag_.kind == KKind::QuadRing) {
    build_lattice();
  } else {
    build_rank_one();
  }
}

void KIdeal::build_rank_one() {
  const std::size_t n = gens_.size();
  std::vector<QuadElement> coeffs(n);
  QuadElement g;
  switch (tag_.kind) {
    case KKind::Integers: {
      Integer den(1);
      for (const auto& x : gens_) {
        if (!x.is_rational()) fail(ErrorCode::IncompatibleTag, x.str() + " is not in Q");
        den = lcm(den, x.a().den());
      }
      // Fold the extended gcd over the cleared numerators.
      Integer acc(0);
      std::vector<Integer> c(n);
      for (std::size_t i = 0; i < n; ++i) {
        Integer v = (gens_[i].a() * Rational(den)).num();
        ExtendedGcd e = extended_gcd(acc, v);
        for (std::size_t j = 0; j < i; ++j) c[j] *= e.s;
        c[i] = e.t;
        acc = e.g;
      }
      g = QuadElement(Rational(acc, den));
      for (std::size_t i = 0; i < n; ++i) coeffs[i] = QuadElement(Rational(c[i]));
      break;
    }
    case KKind::LocalizedIntegers: {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (!gens_[i].is_rational()) fail(ErrorCode::IncompatibleTag, gens_[i].str() + " is not in Q");
        if (gens_[i].is_zero()) continue;
        if (best == n || gens_[i].a().valuation(tag_.param) < gens_[best].a().valuation(tag_.param)) {
          best = i;
        }
      }
      g = unit_normalize(gens_[best], tag_);
      coeffs[best] = g / gens_[best];
      break;
    }
    case KKind::Rationals:
    case KKind::QuadField: {
      for (const auto& x : gens_) k_membership(x, tag_);
      std::size_t i = 0;
      while (gens_[i].is_zero()) ++i;
      g = QuadElement(1);
      coeffs[i] = gens_[i].inverse();
      break;
    }
    case KKind::QuadRing:
      ensure(false, "rank-one path used for a quadratic ring");
  }
  basis_ = {g};
  basis_coeffs_ = {std::move(coeffs)};
}

void KIdeal::build_lattice() {
  const std::int64_t d = tag_.param;
  const std::size_t n = gens_.size();
  for (const auto& x : gens_) k_membership(x, tag_);  // field check
  den_ = Integer(1);
  for (const auto& x : gens_) den_ = lcm(den_, lcm(x.a().den(), x.b().den()));
  const QuadElement root(Rational(0), Rational(1), d);
  std::vector<Row> rows;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    QuadElement v = (k < n ? gens_[k] : gens_[k - n] * root) * QuadElement(Rational(den_));
    Row r{v.a().num(), v.b().num(), std::vector<Integer>(2 * n)};
    r.t[k] = Integer(1);
    rows.push_back(std::move(r));
  }
  auto second = eliminate(rows, &Row::b);
  auto first = eliminate(rows, &Row::a);
  ensure(first.has_value() && second.has_value(), "ideal lattice is not of full rank");
  q_ = first->a;
  s_ = second->b;
  sub_multiple(*second, *first, floor_div(second->a, q_));
  r_ = second->a;

  basis_ = {quad(q_, Integer(0), den_, d), quad(r_, s_, den_, d)};
  basis_coeffs_.clear();
  for (const Row* row : {&*first, &*second}) {
    std::vector<QuadElement> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = QuadElement(Rational(row->t[i]), Rational(row->t[n + i]), d);
    basis_coeffs_.push_back(std::move(c));
  }
}

std::optional<std::vector<QuadElement>> KIdeal::lattice_coefficients(const QuadElement& x) const {
  QuadElement y = x * QuadElement(Rational(den_));
  if (!y.a().is_integer() || !y.b().is_integer()) return std::nullopt;
  const Integer& A = y.a().num();
  const Integer& B = y.b().num();
  if (!divides(s_, B)) return std::nullopt;
  Integer k2 = divexact(B, s_);
  Integer rest = A - k2 * r_;
  if (!divides(q_, rest)) return std::nullopt;
  Integer k1 = divexact(rest, q_);
  std::vector<QuadElement> c(gens_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = basis_coeffs_[0][i] * QuadElement(Rational(k1)) + basis_coeffs_[1][i] * QuadElement(Rational(k2));
  }
  return c;
}

std::optional<std::vector<QuadElement>> KIdeal::coefficients(const QuadElement& x) const {
  if (x.is_zero()) return std::vector<QuadElement>(gens_.size());
  if (tag_.kind == KKind::QuadRing) {
    if (x.d() != 0 && x.d() != tag_.param) fail(ErrorCode::IncompatibleTag, x.str());
    return lattice_coefficients(x);
  }
  QuadElement ratio = x / basis_[0];
  if (!k_membership(ratio, tag_)) return std::nullopt;
  std::vector<QuadElement> c = basis_coeffs_[0];
  for (auto& v : c) v *= ratio;
  return c;
}

// basis_[0] is the least positive rational for every kind of K.
QuadElement KIdeal::least_positive_rational() const { return basis_[0]; }

std::vector<QuadElement> KIdeal::least_positive_rational_coefficients() const {
  return basis_coeffs_[0];
}

Rational KIdeal::norm() const {
  switch (tag_.kind) {
    case KKind::Integers: return basis_[0].a().abs();
    case KKind::LocalizedIntegers: return basis_[0].a();  // p^v
    case KKind::Rationals:
    case KKind::QuadField: return Rational(1);
    case KKind::QuadRing: return Rational(q_ * s_, den_ * den_);
  }
  return Rational(1);
}

std::optional<QuadElement> KIdeal::principal_generator() const {
  if (tag_.kind != KKind::QuadRing) return basis_[0];
  const std::int64_t d = tag_.param;
  if (d > 0) fail(ErrorCode::UnsupportedPair, "principality in real quadratic rings");
  // x^2 + |d| y^2 == N for the integral ideal D*J.
  const Integer N = q_ * s_;
  const Integer absd(-d);
  for (Integer y(0); absd * y * y <= N; y += Integer(1)) {
    Integer rest = N - absd * y * y;
    auto x = rest.exact_sqrt();
    if (!x) continue;
    for (const Integer& xs : {*x, -*x}) {
      for (const Integer& ys : {y, -y}) {
        QuadElement alpha = quad(xs, ys, den_, d);
        if (lattice_coefficients(alpha)) return unit_normalize(alpha, tag_);
      }
    }
  }
  return std::nullopt;
}

std::vector<QuadElement> KIdeal::reduced_generators() const {
  if (auto g = principal_generator()) return {*g};
  return basis_;
}

bool KIdeal::is_integral() const {
  for (const auto& b : basis_) {
    if (!k_membership(b, tag_)) return false;
  }
  return true;
}

std::string KIdeal::str() const {
  std::string out = "(";
  const auto gens = reduced_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += "; ";
    out += gens[i].str();
  }
  return out + ")";
}

KIdeal operator*(const KIdeal& a, const KIdeal& b) {
  if (!(a.tag_ == b.tag_)) fail(ErrorCode::PairMismatch, a.tag_.str() + " vs " + b.tag_.str());
  std::vector<QuadElement> gens;
  for (const auto& x : a.basis_) {
    for (const auto& y : b.basis_) gens.push_back(x * y);
  }
  return KIdeal(a.tag_, std::move(gens));
}

KIdeal quad_prime_above_two(std::int64_t d) {
  const QuadElement root(Rational(0), Rational(1), d);
  const std::int64_t m = ((d % 4) + 4) % 4;
  QuadElement second = m == 3 ? QuadElement(1) + root : root;
  return KIdeal(KTag::quad_ring(d), {QuadElement(2), second});
}

bool is_prime_k_ideal(const KIdeal& p) {
  if (!p.is_integral()) return false;
  const Rational n = p.norm();
  switch (p.tag().kind) {
    case KKind::Integers: return is_prime(n.num());
    case KKind::LocalizedIntegers: return n == Rational(p.tag().param);
    case KKind::Rationals:
    case KKind::QuadField: return false;
    case KKind::QuadRing: {
      const Integer& N = n.num();
      if (is_prime(N)) return true;
      auto root = N.exact_sqrt();
      if (!root || !is_prime(*root) || *root == Integer(2)) return false;
      // Inert prime: the ideal is (p) and d is a non-residue mod p.
      KIdeal inert(p.tag(), {QuadElement(Rational(*root))});
      return inert == p && legendre(Integer(p.tag().param), *root) == -1;
    }
  }
  return false;
}

}  // namespace polycomp
