#include "polycomp/integer.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>

#include "polycomp/error.hpp"

namespace polycomp {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

}  // namespace

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("bad integer literal: " + s);
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(mpz_class(s, 10));
}

void Integer::assign(const mpz_class& v) {
  if (v.fits_slong_p()) {
    small_ = static_cast<std::int64_t>(v.get_si());
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(v);
  }
}

mpz_class Integer::to_mpz() const {
  if (is_small()) return mpz_class(static_cast<long>(small_value()));
  return *big_;
}

int Integer::sign() const noexcept {
  if (is_small()) {
    auto v = small_value();
    return (v > 0) - (v < 0);
  }
  return sgn(*big_);
}

Integer Integer::abs() const { return sign() < 0 ? -*this : *this; }

Integer Integer::pow(unsigned exponent) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), to_mpz().get_mpz_t(), exponent);
  return Integer(r);
}

unsigned Integer::valuation(std::int64_t p) const {
  ensure(!is_zero() && p >= 2, "valuation of zero");
  if (is_small()) {
    auto v = small_value();
    unsigned k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    return k;
  }
  mpz_class v = *big_;
  mpz_class pp(static_cast<long>(p));
  return static_cast<unsigned>(mpz_remove(v.get_mpz_t(), v.get_mpz_t(), pp.get_mpz_t()));
}

std::optional<Integer> Integer::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpz_class v = to_mpz();
  if (!mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return Integer(r);
}

std::string Integer::str() const {
  if (is_small()) return std::to_string(small_value());
  return big_->get_str();
}

Integer Integer::add_slow(const Integer& a, const Integer& b) {
  return Integer(mpz_class(a.to_mpz() + b.to_mpz()));
}

Integer Integer::sub_slow(const Integer& a, const Integer& b) {
  return Integer(mpz_class(a.to_mpz() - b.to_mpz()));
}

Integer Integer::mul_slow(const Integer& a, const Integer& b) {
  return Integer(mpz_class(a.to_mpz() * b.to_mpz()));
}

Integer operator-(const Integer& a) {
  if (a.is_small() && a.small_value() != kMin) return Integer(-a.small_value());
  return Integer(mpz_class(-a.to_mpz()));
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (a.is_small() && b.is_small()) return a.small_value() <=> b.small_value();
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "integer division by zero");
  if (a.is_small() && b.is_small() && !(a.small_value() == kMin && b.small_value() == -1)) {
    return Integer(a.small_value() / b.small_value());
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "integer division by zero");
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - b * floor_div(a, b); }

bool divides(const Integer& a, const Integer& b) {
  if (a.is_zero()) return b.is_zero();
  if (a.is_small() && b.is_small()) {
    if (a.small_value() == -1) return true;
    return b.small_value() % a.small_value() == 0;
  }
  return mpz_divisible_p(b.to_mpz().get_mpz_t(), a.to_mpz().get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small_value() != kMin && b.small_value() != kMin) {
    auto x = static_cast<std::uint64_t>(a.small_value() < 0 ? -a.small_value() : a.small_value());
    auto y = static_cast<std::uint64_t>(b.small_value() < 0 ? -b.small_value() : b.small_value());
    if (x == 0) return Integer(static_cast<std::int64_t>(y));
    if (y == 0) return Integer(static_cast<std::int64_t>(x));
    // Binary gcd.
    int shift = __builtin_ctzll(x | y);
    x >>= __builtin_ctzll(x);
    while (y != 0) {
      y >>= __builtin_ctzll(y);
      if (x > y) std::swap(x, y);
      y -= x;
    }
    return Integer(static_cast<std::int64_t>(x << shift));
  }
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return (divexact(a, gcd(a, b)) * b).abs();
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.to_mpz().get_mpz_t(),
             b.to_mpz().get_mpz_t());
  return {Integer(g), Integer(s), Integer(t)};
}

bool is_prime(const Integer& n) {
  if (n < Integer(2)) return false;
  // BPSW plus extra Miller-Rabin rounds; exact below 2^64.
  return mpz_probab_prime_p(n.to_mpz().get_mpz_t(), 50) != 0;
}

}  // namespace polycomp
