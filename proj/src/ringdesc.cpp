#include "polycomp/ringdesc.hpp"

#include <array>
#include <utility>

#include "polycomp/error.hpp"

namespace polycomp {

namespace {

// Class numbers of the maximal orders Z[sqrt(d)], d = 2, 3 mod 4.
constexpr std::array<std::pair<std::int64_t, std::int64_t>, 6> kQuadClassNumbers = {{
    {-1, 1}, {-2, 1}, {-5, 2}, {-6, 2}, {-10, 2}, {-13, 2},
}};

bool is_true(const std::optional<bool>& f) { return f.has_value() && *f; }
bool is_false(const std::optional<bool>& f) { return f.has_value() && !*f; }

RingFlags all_true_flags() {
  RingFlags f;
  f.is_noetherian = f.is_coherent = f.is_prufer = f.is_bezout = f.is_gcd = f.is_dedekind = true;
  f.n_generator = 1;
  f.class_group = ClassGroup::trivial();
  return f;
}

RingFlags field_flags() {
  RingFlags f = all_true_flags();
  f.is_field = true;
  f.krull_dim = 0;
  return f;
}

RingFlags dvr_or_pid_flags() {
  RingFlags f = all_true_flags();
  f.is_field = false;
  f.krull_dim = 1;
  return f;
}

RingFlags quad_ring_flags(std::int64_t class_number) {
  RingFlags f;
  f.is_field = false;
  f.is_noetherian = f.is_coherent = f.is_prufer = f.is_dedekind = true;
  f.is_bezout = f.is_gcd = (class_number == 1);
  f.n_generator = class_number == 1 ? 1 : 2;
  f.krull_dim = 1;
  f.class_group = ClassGroup::cyclic(class_number);
  return f;
}

}  // namespace

std::string ClassGroup::str() const {
  switch (kind) {
    case Kind::Trivial: return "Trivial";
    case Kind::Cyclic: return "Z/" + std::to_string(order);
    case Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

void validate_flags(const RingFlags& f, const std::string& what) {
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::InconsistentFlags, what + ": " + why);
  };
  if (is_true(f.is_field)) {
    for (const auto* flag : {&f.is_noetherian, &f.is_coherent, &f.is_prufer, &f.is_bezout,
                             &f.is_gcd, &f.is_dedekind}) {
      if (is_false(*flag)) bad("a field has every listed property");
    }
    if (f.krull_dim && *f.krull_dim != 0) bad("a field has dimension 0");
    if (f.class_group.known() && f.class_group.kind != ClassGroup::Kind::Trivial) {
      bad("a field has trivial class group");
    }
    if (f.n_generator && *f.n_generator != 1) bad("a field is 1-generator");
  }
  if (is_true(f.is_bezout)) {
    if (is_false(f.is_prufer) || is_false(f.is_gcd)) bad("Bezout implies Prufer and GCD");
    if (f.class_group.known() && f.class_group.kind != ClassGroup::Kind::Trivial) {
      bad("Bezout implies trivial class group");
    }
    if (f.n_generator && *f.n_generator != 1) bad("Bezout implies 1-generator");
  }
  if (is_true(f.is_dedekind)) {
    if (is_false(f.is_noetherian) || is_false(f.is_prufer)) {
      bad("Dedekind implies Noetherian and Prufer");
    }
    if (f.n_generator && *f.n_generator > 2) bad("Dedekind implies 2-generator");
  }
  if ((is_true(f.is_noetherian) || is_true(f.is_prufer)) && is_false(f.is_coherent)) {
    bad("Noetherian and Prufer domains are coherent");
  }
  if (f.n_generator && *f.n_generator < 1) bad("n-generator count must be positive");
  if (f.krull_dim && *f.krull_dim < 0) bad("negative Krull dimension");
  if (f.krull_dim && *f.krull_dim == 0 && is_false(f.is_field)) bad("a domain of dimension 0 is a field");
}

FieldDesc FieldDesc::quadratic(std::int64_t d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) {
    fail(ErrorCode::UnsupportedPair, "Q(sqrt(" + std::to_string(d) + ")) needs squarefree d != 0, 1");
  }
  return {d};
}

std::string FieldDesc::str() const {
  if (d == 0) return "Q";
  return "Q(sqrt(" + std::to_string(d) + "))";
}

std::string CompositePair::str() const { return k_tag.str() + " + X*" + l_field.str() + "[X]"; }

std::optional<std::int64_t> quad_ring_class_number(std::int64_t d) {
  for (const auto& [dd, h] : kQuadClassNumbers) {
    if (dd == d) return h;
  }
  return std::nullopt;
}

CompositePair builtin_pair(const KTag& k, const FieldDesc& l) {
  CompositePair p;
  p.k_tag = k;
  p.l_field = l;
  const std::string name = k.str() + " inside " + l.str();
  switch (k.kind) {
    case KKind::Integers:
    case KKind::LocalizedIntegers:
      if (!l.is_rationals()) fail(ErrorCode::UnsupportedPair, name);
      p.k_flags = dvr_or_pid_flags();
      p.l_is_quotient_field_of_k = true;
      break;
    case KKind::Rationals:
      if (l.is_rationals()) fail(ErrorCode::KEqualsL, "K = L = Q degenerates the construction");
      p.k_flags = field_flags();
      p.degree_l_over_k = 2;
      break;
    case KKind::QuadField:
      if (l.d == k.param) fail(ErrorCode::KEqualsL, "K = L = " + l.str() + " degenerates the construction");
      fail(ErrorCode::UnsupportedPair, name);
    case KKind::QuadRing: {
      if (l.d != k.param) fail(ErrorCode::UnsupportedPair, name);
      auto h = quad_ring_class_number(k.param);
      if (!h) fail(ErrorCode::UnsupportedPair, name + ": class group not tabulated");
      p.k_flags = quad_ring_flags(*h);
      p.l_is_quotient_field_of_k = true;
      break;
    }
  }
  validate_flags(p.k_flags, k.str());
  return p;
}

PairRef make_pair_ref(const KTag& k, const FieldDesc& l) {
  return std::make_shared<const CompositePair>(builtin_pair(k, l));
}

std::string LRelation::str() const {
  switch (kind) {
    case Kind::QuotientField: return "QuotientField";
    case Kind::FiniteExtension: return "FiniteExtension(" + std::to_string(degree) + ")";
    case Kind::Other: return "Other";
    case Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

RingFlags polynomial_ring_flags() { return dvr_or_pid_flags(); }

GeneralComposite general_from_pair(const CompositePair& p) {
  GeneralComposite g;
  g.k_flags = p.k_flags;
  if (p.l_is_quotient_field_of_k) {
    g.l_relation = {LRelation::Kind::QuotientField, 0};
  } else if (p.degree_l_over_k) {
    g.l_relation = {LRelation::Kind::FiniteExtension, *p.degree_l_over_k};
  } else {
    g.l_relation = {LRelation::Kind::Other, 0};
  }
  g.t_flags = polynomial_ring_flags();
  g.m_finitely_generated = true;
  g.t_m_is_valuation = true;
  g.height_m = 1;
  return g;
}

void validate_general(const GeneralComposite& g) {
  validate_flags(g.k_flags, "K");
  validate_flags(g.t_flags, "T");
  if (is_true(g.t_flags.is_field)) {
    fail(ErrorCode::InconsistentFlags, "T = L + M with M != 0 is not a field");
  }
  if (g.l_relation.kind == LRelation::Kind::QuotientField && is_true(g.k_flags.is_field)) {
    fail(ErrorCode::InconsistentFlags, "a field K is its own quotient field, but K != L");
  }
  if (g.l_relation.kind == LRelation::Kind::FiniteExtension) {
    if (g.l_relation.degree < 2) {
      fail(ErrorCode::InconsistentFlags, "[L:K] must be at least 2 since K != L");
    }
    if (is_false(g.k_flags.is_field)) {
      fail(ErrorCode::InconsistentFlags, "L finite over K forces K to be a field");
    }
  }
  if (g.height_m && *g.height_m < 1) fail(ErrorCode::InconsistentFlags, "M != 0 has positive height");
}

}  // namespace polycomp
