#include "polycomp/poly.hpp"

#include <algorithm>

#include "polycomp/error.hpp"

namespace polycomp {

namespace {

const QuadElement kZero{};

}  // namespace

Poly::Poly(std::vector<QuadElement> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(QuadElement constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly Poly::monomial(QuadElement c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<QuadElement> v(k + 1);
  v[k] = std::move(c);
  Poly p;
  p.c_ = std::move(v);
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const QuadElement& Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const QuadElement& Poly::leading() const {
  if (c_.empty()) fail(ErrorCode::ZeroElement, "leading coefficient of zero polynomial");
  return c_.back();
}

std::size_t Poly::ord() const {
  if (c_.empty()) fail(ErrorCode::ZeroElement, "X-order of zero");
  std::size_t i = 0;
  while (c_[i].is_zero()) ++i;
  return i;
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return scaled(c_.back().inverse());
}

Poly Poly::scaled(const QuadElement& s) const {
  if (s.is_zero()) return {};
  Poly r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c * s);
  return r;
}

Poly Poly::shifted_up(std::size_t k) const {
  if (c_.empty() || k == 0) return *this;
  Poly r;
  r.c_.assign(k, QuadElement());
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::shifted_down(std::size_t k) const {
  if (k == 0) return *this;
  ensure(!c_.empty() && ord() >= k, "shifted_down past the X-order");
  Poly r;
  r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
  return r;
}

QuadElement Poly::eval(const QuadElement& x) const {
  QuadElement acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    QuadElement c = c_[i];
    if (c.is_zero()) continue;
    bool negative = c.is_rational() && c.a().sign() < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += c.str();
      continue;
    }
    if (!c.is_one()) out += c.str() + "*";
    out += "X";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
  const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
  Poly r = big;
  for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, QuadElement());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroDivisor, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<QuadElement> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<QuadElement> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const bool monic = b.leading().is_one();
  const QuadElement inv_lead = monic ? QuadElement(1) : b.leading().inverse();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const QuadElement& top = rem[k + db];
    if (top.is_zero()) continue;
    QuadElement q = monic ? top : top * inv_lead;
    for (std::size_t j = 0; j <= db; ++j) {
      if (!b.coeff(j).is_zero()) rem[k + j] -= q * b.coeff(j);
    }
    quo[k] = std::move(q);
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::optional<Poly> exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly poly_gcd(const Poly& t1, const Poly& t2) {
  Poly r0 = t1.monic(), r1 = t2.monic();
  while (!r1.is_zero()) {
    Poly r = divmod(r0, r1).second;
    r0 = std::move(r1);
    r1 = r.monic();
  }
  return r0;
}

PolyXgcd poly_xgcd(const Poly& t1, const Poly& t2) {
  Poly r0 = t1, r1 = t2;
  Poly s0(1), s1;
  Poly u0, u1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    Poly u = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    u0 = std::move(u1);
    u1 = std::move(u);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  QuadElement inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), u0.scaled(inv)};
}

}  // namespace polycomp
