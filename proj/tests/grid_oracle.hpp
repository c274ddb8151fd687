#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Machine-integer model of Z + X*Q[X] restricted to small degrees, used as an
// oracle for the gcd engine. Nothing here calls into the library.
namespace grid {

struct Q64 {
  std::int64_t n = 0;
  std::int64_t d = 1;

  Q64() = default;
  Q64(std::int64_t num, std::int64_t den = 1);

  bool zero() const { return n == 0; }
  bool integral() const { return d == 1; }
  friend bool operator==(const Q64&, const Q64&) = default;
};

Q64 operator+(Q64 a, Q64 b);
Q64 operator-(Q64 a, Q64 b);
Q64 operator*(Q64 a, Q64 b);
Q64 operator/(Q64 a, Q64 b);
Q64 operator-(Q64 a);

/// Coefficients, lowest degree first, no trailing zeros.
using P64 = std::vector<Q64>;

void trim(P64& p);
int degree(const P64& p);
std::size_t ord(const P64& p);
P64 mul(const P64& a, const P64& b);
P64 scale(const P64& a, Q64 s);
/// Quotient when b divides a in Q[X].
std::optional<P64> exact_div(const P64& a, const P64& b);
/// c | a in Z + X*Q[X]: the quotient lies in Q[X] and has an integer constant term.
bool divides_in_r(const P64& c, const P64& a);
bool in_r(const P64& p);
bool same_up_to_sign(const P64& a, const P64& b);
std::string show(const P64& p);

/// Monic factorization over Q of a polynomial of degree <= 2: its rational
/// roots with multiplicity plus an irreducible monic quadratic if any.
struct Factors {
  std::vector<Q64> roots;
  std::optional<P64> quadratic;
};
Factors factor(const P64& p);

/// gcd in Z + X*Q[X] from the divisor structure: X-power times the common
/// monic factor, scaled by the generator of the Z-module spanned by the
/// admissible constant terms. Inputs nonzero with degree <= 2.
P64 closed_form_gcd(const P64& a, const P64& b);

/// Per-element data for closed_form_gcd, so a grid pays for factoring once.
struct Prepared {
  P64 p;
  std::size_t ord = 0;
  Q64 c0;           // constant term of p / X^ord
  Factors factors;  // of p / X^ord
};
Prepared prepare(const P64& p);
P64 closed_form_gcd(const Prepared& a, const Prepared& b);

/// Exhaustive search over a finite universe of candidate divisors: returns the
/// common divisor that every other common divisor in the universe divides, if
/// one exists in the universe.
class BruteForce {
 public:
  /// Universe: degree <= 2, integer constant in [-c, c], other coefficients
  /// p/q with |p| <= num and 1 <= q <= den.
  BruteForce(std::int64_t c, std::int64_t num, std::int64_t den);

  std::size_t universe_size() const { return universe_.size(); }
  const P64& candidate(std::size_t i) const { return universe_.at(i); }
  /// Indices into the universe of divisors of a.
  std::vector<std::size_t> divisors(const P64& a) const;
  std::optional<P64> greatest_common_divisor(const std::vector<std::size_t>& da,
                                             const std::vector<std::size_t>& db) const;

 private:
  std::vector<P64> universe_;
};

/// The coefficient values of the acceptance grid: numerators in [-h, h],
/// denominators in dens, deduplicated.
std::vector<Q64> coefficient_values(std::int64_t h, const std::vector<std::int64_t>& dens);

/// Every nonzero polynomial of degree <= 2 with coefficients from values and an
/// integer constant term.
std::vector<P64> grid_elements(const std::vector<Q64>& values);

}  // namespace grid
