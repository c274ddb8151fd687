#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycomp/composite.hpp"
#include "polycomp/kideal.hpp"

namespace polycomp {

/// Nonzero finitely generated ideal of R.
class FGIdeal {
 public:
  /// Zero generators are dropped; throws EmptyIdeal if none remain and
  /// PairMismatch if the generators live in different rings.
  explicit FGIdeal(std::vector<CompositeElement> gens);

  const PairRef& pair() const noexcept { return gens_.front().pair(); }
  const CompositePair& ring() const noexcept { return *pair(); }
  const std::vector<CompositeElement>& gens() const noexcept { return gens_; }

  /// "ideal(g1; g2; ...)"
  std::string str() const;

 private:
  std::vector<CompositeElement> gens_;
};

/// I = b * J * R with J = (lambdas..., 1) a fractional ideal of K.
struct IdealNormalForm {
  CompositeElement b;
  std::vector<CompositeElement> b_witness;  // sum b_witness[i]*gens[i] == b
  std::vector<QuadElement> lambdas;         // constant terms of gens[i]/b
  std::vector<Poly> tails;                  // gens[i]/b - lambdas[i], in X*L[X]

  /// J as a K-ideal on the generators (lambdas..., 1).
  KIdeal j_ideal(const KTag& tag) const;
};

/// Throws NotQuotientField unless L = qf(K).
IdealNormalForm normalize_ideal(const FGIdeal& ideal);

struct MembershipResult {
  enum class Status { Member, NotMember, NotMemberWithinBound };
  Status status = Status::NotMember;
  std::optional<std::vector<CompositeElement>> witness;  // sum witness[i]*gens[i] == x

  bool member() const { return status == Status::Member; }
};

/// Decides x in I. For a field K (L not its quotient field) the search is
/// limited to cofactors of degree <= deg x + max deg g_i, and a failed search
/// reports NotMemberWithinBound.
MembershipResult membership(const CompositeElement& x, const FGIdeal& ideal);

FGIdeal ideal_sum(const FGIdeal& a, const FGIdeal& b);
FGIdeal ideal_product(const FGIdeal& a, const FGIdeal& b);

/// Principal generator when J is principal (always in Bezout configurations).
std::optional<CompositeElement> principal_generator(const FGIdeal& ideal);

/// Requires a Bezout configuration (throws NotBezoutConfiguration).
FGIdeal ideal_intersect(const FGIdeal& a, const FGIdeal& b);

/// Class of I in C(R) = C(K). index 0 is the trivial class.
struct IdealClass {
  ClassGroup group;
  std::int64_t index = 0;

  bool trivial() const { return index == 0; }
  std::string str() const;  // "Trivial" or "NonTrivial(order 2)"

  friend bool operator==(const IdealClass&, const IdealClass&) = default;
};

IdealClass class_product(const IdealClass& a, const IdealClass& b);

/// Throws NotPruferConfiguration or UnknownClassGroup.
IdealClass ideal_class(const FGIdeal& ideal);

/// At most n generators; n defaults to the least n for which R is an
/// n-generator Prufer domain. Throws NotNGeneratorConfiguration.
FGIdeal reduce_generators(const FGIdeal& ideal, std::optional<std::int64_t> n = std::nullopt);

/// Two-way membership check between generator sets.
bool same_ideal(const FGIdeal& a, const FGIdeal& b);

}  // namespace polycomp
