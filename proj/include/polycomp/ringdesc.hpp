#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "polycomp/exactnum.hpp"

namespace polycomp {

/// C(S) as far as the fact table knows it.
struct ClassGroup {
  enum class Kind { Trivial, Cyclic, Unknown };
  Kind kind = Kind::Unknown;
  std::int64_t order = 0;  // for Cyclic

  static ClassGroup trivial() { return {Kind::Trivial, 1}; }
  static ClassGroup cyclic(std::int64_t n) { return n == 1 ? trivial() : ClassGroup{Kind::Cyclic, n}; }
  static ClassGroup unknown() { return {}; }

  bool known() const { return kind != Kind::Unknown; }
  std::string str() const;  // "Trivial", "Z/2", "Unknown"

  friend bool operator==(const ClassGroup&, const ClassGroup&) = default;
};

/// Ring-theoretic facts about K or T. An empty optional means "unknown";
/// the deciders refuse to guess a missing premise.
struct RingFlags {
  std::optional<bool> is_field;
  std::optional<bool> is_noetherian;
  std::optional<bool> is_coherent;
  std::optional<bool> is_prufer;
  std::optional<bool> is_bezout;
  std::optional<bool> is_gcd;
  std::optional<bool> is_dedekind;
  std::optional<std::int64_t> n_generator;  // least n with the n-generator property
  std::optional<std::int64_t> krull_dim;
  ClassGroup class_group;

  friend bool operator==(const RingFlags&, const RingFlags&) = default;
};

/// Throws InconsistentFlags when a known flag contradicts another known flag:
/// field => everything, dim 0, trivial class group; Bezout => Prufer and GCD;
/// Dedekind => Noetherian, Prufer, 2-generator.
void validate_flags(const RingFlags& flags, const std::string& what);

/// The field L: Q (d == 0) or Q(sqrt(d)).
struct FieldDesc {
  std::int64_t d = 0;

  static FieldDesc rationals() { return {0}; }
  static FieldDesc quadratic(std::int64_t d);

  bool is_rationals() const { return d == 0; }
  std::int64_t degree_over_q() const { return d == 0 ? 1 : 2; }
  std::string str() const;  // "Q", "Q(sqrt(-5))"

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

/// K inside L, with T = L[X] and M = X*L[X].
struct CompositePair {
  KTag k_tag;
  RingFlags k_flags;
  FieldDesc l_field;
  bool l_is_quotient_field_of_k = false;
  std::optional<std::int64_t> degree_l_over_k;  // empty = infinite

  /// "Z + X*Q[X]"
  std::string str() const;

  bool same_ring(const CompositePair& o) const { return k_tag == o.k_tag && l_field == o.l_field; }
};

using PairRef = std::shared_ptr<const CompositePair>;

/// Supported instantiations: (Z, Q), (Z_(p), Q), (Q, Q(sqrt(d))) and
/// (Z[sqrt(d)], Q(sqrt(d))) for d in the class-group table (d = -1, -2, -5,
/// -6, -10, -13). Throws UnsupportedPair or KEqualsL.
CompositePair builtin_pair(const KTag& k, const FieldDesc& l);
PairRef make_pair_ref(const KTag& k, const FieldDesc& l);

/// Class number of Z[sqrt(d)] from the fact table, if tabulated.
std::optional<std::int64_t> quad_ring_class_number(std::int64_t d);

/// L-field relation for the general K + M construction.
struct LRelation {
  enum class Kind { QuotientField, FiniteExtension, Other, Unknown };
  Kind kind = Kind::Unknown;
  std::int64_t degree = 0;  // for FiniteExtension

  std::string str() const;
};

/// Descriptor of K + M inside T = L + M with no constraint on T.
struct GeneralComposite {
  RingFlags k_flags;
  LRelation l_relation;
  RingFlags t_flags;
  std::optional<bool> m_finitely_generated;
  std::optional<bool> t_m_is_valuation;
  std::optional<std::int64_t> height_m;
};

/// Throws InconsistentFlags on contradictory descriptor data.
void validate_general(const GeneralComposite& g);

/// Supplies the facts about T = L[X]: a PID of dimension 1 whose localization
/// at X is a DVR; M = (X) has height 1.
GeneralComposite general_from_pair(const CompositePair& p);

/// Flags of L[X] for any field L.
RingFlags polynomial_ring_flags();

}  // namespace polycomp
