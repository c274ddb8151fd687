#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycomp/composite.hpp"
#include "polycomp/kideal.hpp"

namespace polycomp {

/// A prime of R in one of its two shapes: the contraction of a prime f*L[X]
/// of T, or P + M for a prime P of K. FromT(X) and OverM with P = 0 both
/// name M itself.
struct PrimeDescriptor {
  enum class Kind { Zero, FromT, OverM };
  Kind kind = Kind::Zero;
  Poly f;                   // FromT: monic irreducible in L[X]
  std::optional<KIdeal> p;  // OverM: prime of K; empty for P = 0

  static PrimeDescriptor zero() { return {}; }
  static PrimeDescriptor from_t(Poly f);
  static PrimeDescriptor m() { return from_t(Poly::x()); }
  static PrimeDescriptor over_m(std::optional<KIdeal> p);

  bool is_m() const;
  /// "prime:0", "prime:M", "prime:T(X - 1)", "prime:K(2)".
  std::string str() const;
};

struct PrimeReport {
  std::string branch;       // "Zero", "ContractionFromT" or "OverM"
  std::string contraction;  // Q intersected with K
  bool contains_m = false;
  bool equals_m = false;
  bool maximal = false;
  std::int64_t height = 0;
  std::string quotient;  // description of R/Q
};

/// x in Q: Zero: x == 0; FromT(f): f | x in L[X]; OverM(P): x(0) in P.
bool prime_contains(const PrimeDescriptor& q, const CompositeElement& x);

/// Throws NotQuotientField, NotPrime, UnsupportedDegree.
PrimeReport classify_prime(const CompositePair& pair, const PrimeDescriptor& q);

/// Irreducibility over L for the degrees that can be certified: any degree 1,
/// degree <= 3 over Q, degree 2 over Q(sqrt(d)). Throws UnsupportedDegree.
bool is_irreducible(const Poly& f, std::int64_t d);

/// max(1 + dim K, 1). Throws NotQuotientField, InsufficientData.
std::int64_t krull_dim(const CompositePair& pair);

struct PrimeChain {
  std::vector<PrimeDescriptor> links;
  std::vector<CompositeElement> separators;  // separators[i] in links[i+1] \ links[i]
};

/// (0) < M < P + M with P the first prime of K from the fact table.
PrimeChain witness_chain(const PairRef& pair);

}  // namespace polycomp
