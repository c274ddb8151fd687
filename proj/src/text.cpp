#include "polycomp/text.hpp"

#include <cctype>

#include "polycomp/error.hpp"

namespace polycomp {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += xs[i];
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  [[noreturn]] void error(std::vector<std::string> expected) const {
    throw ParseError(std::string(s_), pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) error({std::string("'") + c + "'"});
  }

  // Keywords may contain whitespace between letters.
  bool accept_word(std::string_view word) {
    std::size_t save = pos_;
    for (char c : word) {
      if (peek() != c) {
        pos_ = save;
        return false;
      }
      ++pos_;
    }
    return true;
  }

  void expect_word(std::string_view word) {
    if (!accept_word(word)) error({"'" + std::string(word) + "'"});
  }

  void expect_end() {
    if (!at_end()) error({"end of input"});
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer natural() {
    if (!at_digit()) error({"number"});
    std::string digits;
    while (at_digit()) digits += s_[pos_++];
    return Integer::parse(digits);
  }

  std::int64_t small_integer() {
    bool negative = accept('-');
    skip_ws();
    std::size_t start = pos_;
    Integer v = natural();
    if (!v.is_small()) {
      pos_ = start;
      error({"integer of at most 18 digits"});
    }
    return negative ? -v.small_value() : v.small_value();
  }

  // expr := [+|-] term {(+|-) term}
  Poly expr() {
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    Poly acc = term();
    if (negative) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  // term := factor {(*|/) factor}
  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        Poly divisor = factor();
        if (divisor.degree() != 0) {
          pos_ = at;
          error({"nonzero constant divisor"});
        }
        acc = acc.scaled(divisor.constant().inverse());
      } else {
        return acc;
      }
    }
  }

  // factor := number | X [^ n] | sqrt(d) | ( expr )
  Poly factor() {
    if (at_digit()) return Poly(QuadElement(Rational(natural())));
    if (accept('X')) {
      std::size_t k = 1;
      if (accept('^')) {
        skip_ws();
        std::size_t at = pos_;
        Integer e = natural();
        if (!e.is_small() || e.small_value() > 100000) {
          pos_ = at;
          error({"exponent up to 100000"});
        }
        k = static_cast<std::size_t>(e.small_value());
      }
      return Poly::monomial(QuadElement(1), k);
    }
    if (accept_word("sqrt")) {
      expect('(');
      std::int64_t d = small_integer();
      expect(')');
      return Poly(QuadElement(Rational(0), Rational(1), d));
    }
    if (accept('(')) {
      Poly inner = expr();
      expect(')');
      return inner;
    }
    error({"number", "'X'", "'sqrt'", "'('"});
  }

  std::vector<Poly> list() {
    std::vector<Poly> out{expr()};
    while (accept(';') || accept(',')) out.push_back(expr());
    return out;
  }

  KTag k_part() {
    if (accept('Z')) {
      if (accept('_')) {
        expect('(');
        std::int64_t p = small_integer();
        expect(')');
        return KTag::localized(p);
      }
      if (accept('[')) {
        expect_word("sqrt");
        expect('(');
        std::int64_t d = small_integer();
        expect(')');
        expect(']');
        return KTag::quad_ring(d);
      }
      return KTag::integers();
    }
    if (accept('Q')) {
      if (peek() == '(') {
        expect('(');
        expect_word("sqrt");
        expect('(');
        std::int64_t d = small_integer();
        expect(')');
        expect(')');
        return KTag::quad_field(d);
      }
      return KTag::rationals();
    }
    error({"'Z'", "'Q'"});
  }

  FieldDesc l_part() {
    expect('Q');
    if (accept('(')) {
      expect_word("sqrt");
      expect('(');
      std::int64_t d = small_integer();
      expect(')');
      expect(')');
      return FieldDesc::quadratic(d);
    }
    return FieldDesc::rationals();
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::string input, std::size_t position, std::vector<std::string> expected)
    : std::runtime_error("parse error at position " + std::to_string(position) + " in \"" + input +
                         "\": expected " + join(expected)),
      input_(std::move(input)),
      position_(position),
      expected_(std::move(expected)) {}

Poly parse_poly(std::string_view text) {
  Parser p(text);
  Poly r = p.expr();
  p.expect_end();
  return r;
}

std::vector<Poly> parse_ideal(std::string_view text) {
  Parser p(text);
  p.expect_word("ideal");
  p.expect('(');
  auto gens = p.list();
  p.expect(')');
  p.expect_end();
  return gens;
}

RingSyntax parse_ring(std::string_view text) {
  Parser p(text);
  KTag k = p.k_part();
  p.expect('+');
  p.expect('X');
  p.expect('*');
  FieldDesc l = p.l_part();
  p.expect('[');
  p.expect('X');
  p.expect(']');
  p.expect_end();
  return {k, l};
}

PrimeSyntax parse_prime(std::string_view text) {
  Parser p(text);
  p.expect_word("prime");
  p.expect(':');
  PrimeSyntax out;
  if (p.accept('0')) {
    out.kind = PrimeSyntax::Kind::Zero;
  } else if (p.accept('M')) {
    out.kind = PrimeSyntax::Kind::M;
  } else if (p.accept('T')) {
    out.kind = PrimeSyntax::Kind::T;
    p.expect('(');
    out.f = p.expr();
    p.expect(')');
  } else if (p.accept('K')) {
    out.kind = PrimeSyntax::Kind::K;
    p.expect('(');
    out.gens = p.list();
    p.expect(')');
  } else {
    p.error({"'0'", "'M'", "'T'", "'K'"});
  }
  p.expect_end();
  return out;
}

}  // namespace polycomp
