#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polycomp/poly.hpp"
#include "polycomp/ringdesc.hpp"

namespace polycomp {

/// Syntax error with the offending position (0-based) and the tokens that
/// would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string input, std::size_t position, std::vector<std::string> expected);

  const std::string& input() const noexcept { return input_; }
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::string input_;
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Elements: sums of terms built from integers, "p/q", "X", "X^k",
/// "sqrt(d)" and parenthesized subexpressions, e.g. "3/2*X^2 - X + (1+sqrt(-5))".
/// Whitespace is ignored.
Poly parse_poly(std::string_view text);

/// "ideal(g1; g2; ...)"
std::vector<Poly> parse_ideal(std::string_view text);

/// Ring descriptor "K + X*L[X]" with K one of Z, Q, Z_(p), Z[sqrt(d)],
/// Q(sqrt(d)) and L one of Q, Q(sqrt(d)).
struct RingSyntax {
  KTag k;
  FieldDesc l;
};
RingSyntax parse_ring(std::string_view text);

/// "prime:0", "prime:M", "prime:T(<poly>)", "prime:K(<g1>; <g2>)".
struct PrimeSyntax {
  enum class Kind { Zero, M, T, K };
  Kind kind = Kind::Zero;
  Poly f;
  std::vector<Poly> gens;
};
PrimeSyntax parse_prime(std::string_view text);

}  // namespace polycomp
