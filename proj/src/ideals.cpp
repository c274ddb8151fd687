#include "polycomp/ideals.hpp"

#include <algorithm>

#include "polycomp/error.hpp"
#include "polycomp/gcdengine.hpp"
#include "polycomp/oracle.hpp"

namespace polycomp {

namespace {

// sum w[i]*gens[i]
CompositeElement combine(const std::vector<CompositeElement>& w, const FGIdeal& ideal) {
  CompositeElement acc = CompositeElement::zero(ideal.pair());
  for (std::size_t i = 0; i < w.size(); ++i) acc = acc + w[i] * ideal.gens()[i];
  return acc;
}

// Dense linear solve over Q; returns one solution or nothing.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> a,
                                                     std::vector<Rational> rhs) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(rhs[p], rhs[r]);
    Rational inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
      }
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!rhs[i].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

// Field K = Q inside L = Q(sqrt(d)): cofactors c_i = k_i + sum_j m_ij X^j with
// j <= bound, solved coefficientwise over Q.
MembershipResult field_membership(const CompositeElement& x, const FGIdeal& ideal) {
  const auto& gens = ideal.gens();
  const std::int64_t d = ideal.ring().l_field.d;
  const int bound = std::max(x.degree(), 0) +
                    std::max_element(gens.begin(), gens.end(), [](const auto& p, const auto& q) {
                      return p.degree() < q.degree();
                    })->degree();
  const std::size_t per_gen = 1 + 2 * static_cast<std::size_t>(bound);
  const std::size_t cols = gens.size() * per_gen;
  const std::size_t top = static_cast<std::size_t>(2 * bound) + 1;
  std::vector<std::vector<Rational>> a(2 * top, std::vector<Rational>(cols));
  std::vector<Rational> rhs(2 * top);
  for (std::size_t t = 0; t < top; ++t) {
    rhs[2 * t] = x.coeff(t).a();
    rhs[2 * t + 1] = x.coeff(t).b();
  }
  const Rational dd(d);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t base = i * per_gen;
    for (std::size_t e = 0; e <= static_cast<std::size_t>(gens[i].degree()); ++e) {
      const QuadElement& g = gens[i].coeff(e);
      if (g.is_zero()) continue;
      // k_i * g at X^e.
      a[2 * e][base] += g.a();
      a[2 * e + 1][base] += g.b();
      for (std::size_t j = 1; j <= static_cast<std::size_t>(bound); ++j) {
        const std::size_t t = e + j;
        if (t >= top) break;
        const std::size_t ca = base + 2 * j - 1, cb = base + 2 * j;
        // (m_a + m_b sqrt(d)) * (g_a + g_b sqrt(d))
        a[2 * t][ca] += g.a();
        a[2 * t][cb] += dd * g.b();
        a[2 * t + 1][ca] += g.b();
        a[2 * t + 1][cb] += g.a();
      }
    }
  }
  auto sol = solve_rational(std::move(a), std::move(rhs));
  MembershipResult res;
  if (!sol) {
    res.status = MembershipResult::Status::NotMemberWithinBound;
    return res;
  }
  std::vector<CompositeElement> w;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t base = i * per_gen;
    std::vector<QuadElement> c(static_cast<std::size_t>(bound) + 1);
    c[0] = QuadElement((*sol)[base]);
    for (std::size_t j = 1; j <= static_cast<std::size_t>(bound); ++j) {
      c[j] = QuadElement((*sol)[base + 2 * j - 1], (*sol)[base + 2 * j], d);
    }
    w.emplace_back(ideal.pair(), Poly(std::move(c)));
  }
  ensure(combine(w, ideal) == x, "field-case membership witness does not recombine");
  res.status = MembershipResult::Status::Member;
  res.witness = std::move(w);
  return res;
}

}  // namespace

FGIdeal::FGIdeal(std::vector<CompositeElement> gens) {
  for (auto& g : gens) {
    if (!gens_.empty()) require_same_pair(gens_.front(), g);
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  if (gens_.empty()) fail(ErrorCode::EmptyIdeal, "ideal needs a nonzero generator");
}

std::string FGIdeal::str() const {
  std::string out = "ideal(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += "; ";
    out += gens_[i].str();
  }
  return out + ")";
}

KIdeal IdealNormalForm::j_ideal(const KTag& tag) const {
  std::vector<QuadElement> gens = lambdas;
  gens.emplace_back(1);
  return KIdeal(tag, std::move(gens));
}

IdealNormalForm normalize_ideal(const FGIdeal& ideal) {
  const CompositePair& ring = ideal.ring();
  const PairRef& pair = ideal.pair();
  if (!ring.l_is_quotient_field_of_k) {
    fail(ErrorCode::NotQuotientField, ring.l_field.str() + " is not the quotient field of " +
                                          ring.k_tag.str());
  }
  const auto& gens = ideal.gens();
  const std::size_t n = gens.size();

  // Folded extended gcd in L[X].
  Poly d = gens[0].poly().monic();
  std::vector<Poly> alpha(n);
  alpha[0] = Poly(gens[0].poly().leading().inverse());
  for (std::size_t i = 1; i < n; ++i) {
    PolyXgcd x = poly_gcd_l(d, gens[i].poly());
    for (std::size_t j = 0; j < i; ++j) alpha[j] = alpha[j] * x.alpha;
    alpha[i] = x.beta;
    d = std::move(x.g);
  }

  // Clear the constant terms of the cofactors into K.
  std::vector<QuadElement> consts;
  for (const auto& a : alpha) consts.push_back(a.constant());
  const QuadElement c0{Rational(clearing_constant(consts, ring.k_tag))};
  const Poly b0 = d.scaled(c0);
  std::vector<CompositeElement> w0;
  for (const auto& a : alpha) w0.emplace_back(pair, a.scaled(c0));

  std::vector<QuadElement> lambda0;
  std::vector<Poly> tail0;
  for (const auto& g : gens) {
    auto q = exact_quotient(g.poly(), b0);
    ensure(q.has_value(), "generator not divisible by the L[X]-gcd");
    lambda0.push_back(q->constant());
    tail0.push_back(*q - Poly(q->constant()));
  }

  // Rescale by the least positive rational of J0 = (lambda0..., 1).
  std::vector<QuadElement> j0_gens = lambda0;
  j0_gens.emplace_back(1);
  const KIdeal j0(ring.k_tag, j0_gens);
  const QuadElement gamma = j0.least_positive_rational();
  const std::vector<QuadElement> kappa = j0.least_positive_rational_coefficients();

  // gamma*b0 = sum_i kappa_i*(g_i - b0*m0_i) + kappa_n*b0 with b0 = sum_j w0_j g_j.
  Poly shared = Poly(kappa[n]);
  for (std::size_t i = 0; i < n; ++i) shared = shared - tail0[i].scaled(kappa[i]);
  std::vector<CompositeElement> witness;
  for (std::size_t j = 0; j < n; ++j) {
    witness.emplace_back(pair, Poly(kappa[j]) + shared * w0[j].poly());
  }

  Poly b = b0.scaled(gamma);
  const QuadElement u = unit_normalizer(b.coeff(b.ord()), ring.k_tag);
  const QuadElement scale = gamma * u;
  IdealNormalForm nf{CompositeElement(pair, b.scaled(u)), {}, {}, {}};
  for (auto& w : witness) nf.b_witness.push_back(w.scaled(u));
  for (std::size_t i = 0; i < n; ++i) {
    nf.lambdas.push_back(lambda0[i] / scale);
    nf.tails.push_back(tail0[i].scaled(scale.inverse()));
  }

  ensure(combine(nf.b_witness, ideal) == nf.b, "normal-form witness does not recombine");
  for (std::size_t i = 0; i < n; ++i) {
    ensure(nf.b.poly() * (Poly(nf.lambdas[i]) + nf.tails[i]) == gens[i].poly(),
           "generator does not factor through the normal form");
  }
  return nf;
}

MembershipResult membership(const CompositeElement& x, const FGIdeal& ideal) {
  require_same_pair(x, ideal.gens().front());
  const std::size_t n = ideal.gens().size();
  MembershipResult res;
  if (x.is_zero()) {
    res.status = MembershipResult::Status::Member;
    res.witness = std::vector<CompositeElement>(n, CompositeElement::zero(x.pair()));
    return res;
  }
  if (!ideal.ring().l_is_quotient_field_of_k) return field_membership(x, ideal);

  IdealNormalForm nf = normalize_ideal(ideal);
  auto q = exact_quotient(x.poly(), nf.b.poly());
  if (!q) return res;
  auto mu = nf.j_ideal(x.k_tag()).coefficients(q->constant());
  if (!mu) return res;

  // x = sum_i mu_i*(g_i - b*m_i) + (mu_n + q - q(0))*b
  Poly shared = Poly((*mu)[n]) + (*q - Poly(q->constant()));
  for (std::size_t i = 0; i < n; ++i) shared = shared - nf.tails[i].scaled((*mu)[i]);
  std::vector<CompositeElement> w;
  for (std::size_t j = 0; j < n; ++j) {
    w.emplace_back(x.pair(), Poly((*mu)[j]) + shared * nf.b_witness[j].poly());
  }
  ensure(combine(w, ideal) == x, "membership witness does not recombine");
  res.status = MembershipResult::Status::Member;
  res.witness = std::move(w);
  return res;
}

FGIdeal ideal_sum(const FGIdeal& a, const FGIdeal& b) {
  require_same_pair(a.gens().front(), b.gens().front());
  std::vector<CompositeElement> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return FGIdeal(std::move(gens));
}

FGIdeal ideal_product(const FGIdeal& a, const FGIdeal& b) {
  require_same_pair(a.gens().front(), b.gens().front());
  std::vector<CompositeElement> gens;
  for (const auto& x : a.gens()) {
    for (const auto& y : b.gens()) gens.push_back(x * y);
  }
  return FGIdeal(std::move(gens));
}

std::optional<CompositeElement> principal_generator(const FGIdeal& ideal) {
  IdealNormalForm nf = normalize_ideal(ideal);
  auto j = nf.j_ideal(ideal.ring().k_tag).principal_generator();
  if (!j) return std::nullopt;
  return unit_normalize(CompositeElement(ideal.pair(), nf.b.poly().scaled(*j)));
}

FGIdeal ideal_intersect(const FGIdeal& a, const FGIdeal& b) {
  require_same_pair(a.gens().front(), b.gens().front());
  if (!property_holds(a.ring(), Property::Bezout)) {
    fail(ErrorCode::NotBezoutConfiguration, a.ring().str() + " is not a Bezout domain");
  }
  auto ga = principal_generator(a);
  auto gb = principal_generator(b);
  ensure(ga.has_value() && gb.has_value(), "ideal of a Bezout domain is not principal");
  return FGIdeal({lcm_composite(*ga, *gb)});
}

std::string IdealClass::str() const {
  if (index == 0) return "Trivial";
  return "NonTrivial(order " + std::to_string(group.order) + ")";
}

IdealClass class_product(const IdealClass& a, const IdealClass& b) {
  ensure(a.group == b.group, "classes from different groups");
  if (a.group.kind != ClassGroup::Kind::Cyclic) return a;
  return {a.group, (a.index + b.index) % a.group.order};
}

IdealClass ideal_class(const FGIdeal& ideal) {
  const CompositePair& ring = ideal.ring();
  if (!property_holds(ring, Property::Prufer)) {
    fail(ErrorCode::NotPruferConfiguration, ring.str() + " is not a Prufer domain");
  }
  const ClassGroup& group = ring.k_flags.class_group;
  if (!group.known()) fail(ErrorCode::UnknownClassGroup, "class group of " + ring.k_tag.str());
  if (group.kind == ClassGroup::Kind::Trivial) return {group, 0};
  // Principality separates the two classes of a group of order 2.
  if (group.order != 2) fail(ErrorCode::UnknownClassGroup, "class computation needs |C(K)| <= 2");
  IdealNormalForm nf = normalize_ideal(ideal);
  bool principal = nf.j_ideal(ring.k_tag).principal_generator().has_value();
  return {group, principal ? 0 : 1};
}

FGIdeal reduce_generators(const FGIdeal& ideal, std::optional<std::int64_t> n) {
  const CompositePair& ring = ideal.ring();
  std::int64_t bound = n.value_or(0);
  if (!n) {
    auto k_n = ring.k_flags.n_generator;
    auto t_n = polynomial_ring_flags().n_generator;
    if (!k_n || !t_n) fail(ErrorCode::InsufficientData, "n-generator bound of " + ring.str());
    bound = std::max(*k_n, *t_n);
  }
  if (!n_generator_holds(ring, bound)) {
    fail(ErrorCode::NotNGeneratorConfiguration,
         ring.str() + " is not a " + std::to_string(bound) + "-generator Prufer domain");
  }
  IdealNormalForm nf = normalize_ideal(ideal);
  std::vector<CompositeElement> out;
  for (const auto& j : nf.j_ideal(ring.k_tag).reduced_generators()) {
    out.push_back(unit_normalize(CompositeElement(ideal.pair(), nf.b.poly().scaled(j))));
  }
  ensure(static_cast<std::int64_t>(out.size()) <= bound, "too many generators after reduction");
  FGIdeal reduced(std::move(out));
  ensure(same_ideal(ideal, reduced), "reduced generators span a different ideal");
  return reduced;
}

bool same_ideal(const FGIdeal& a, const FGIdeal& b) {
  for (const auto& g : a.gens()) {
    if (!membership(g, b).member()) return false;
  }
  for (const auto& g : b.gens()) {
    if (!membership(g, a).member()) return false;
  }
  return true;
}

}  // namespace polycomp
