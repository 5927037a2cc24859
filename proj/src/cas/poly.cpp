#include "lrjcalc/cas/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "lrjcalc/errors.hpp"

namespace lrj::cas {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (sgn(c) != 0) p.terms_.emplace(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("polynomial variable index");
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

bool Poly::contains_variable(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r(a);
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r(a);
  for (const auto& [m, c] : b.terms_) r.add_term(m, Rational(-c));
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& k) const {
  Poly r(nvars_);
  if (sgn(k) == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, c] : r.terms_) c *= k;
  return r;
}

Poly Poly::power(unsigned k) const {
  Poly result = constant(nvars_, Rational(1));
  Poly base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

std::map<std::uint32_t, Poly> Poly::coefficients_in(std::size_t var) const {
  std::map<std::uint32_t, Poly> out;
  for (const auto& [m, c] : terms_) {
    Monomial stripped = m;
    stripped[var] = 0;
    auto [it, inserted] = out.try_emplace(m[var], Poly(nvars_));
    it->second.add_term(stripped, c);
  }
  return out;
}

std::optional<Poly> divide_exact(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  Poly q(num.nvars());
  Poly r = num;
  const Monomial& ld = den.leading_monomial();
  const Rational& lc = den.leading_coefficient();
  Monomial shift(num.nvars());
  Monomial m(num.nvars());
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      if (lr[i] < ld[i]) return std::nullopt;
      shift[i] = lr[i] - ld[i];
    }
    const Rational k = r.leading_coefficient() / lc;
    q.add_term(shift, k);
    for (const auto& [md, cd] : den.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = md[i] + shift[i];
      r.add_term(m, Rational(-k * cd));
    }
  }
  return q;
}

namespace {

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1 / p.leading_coefficient()));
}

Poly variable_power(std::size_t nvars, std::size_t var, std::uint32_t k) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[var] = k;
  p.add_term(m, Rational(1));
  return p;
}

Poly content_in(const Poly& p, std::size_t var) {
  Poly g(p.nvars());
  for (const auto& [e, c] : p.coefficients_in(var)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Poly primitive_part(const Poly& p, std::size_t var) {
  if (p.is_zero()) return p;
  Poly c = content_in(p, var);
  if (c.is_constant()) return monic(p);
  return monic(*divide_exact(p, c));
}

Poly leading_coefficient_in(const Poly& p, std::size_t var) {
  auto coeffs = p.coefficients_in(var);
  return coeffs.rbegin()->second;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const Poly lcb = leading_coefficient_in(b, var);
  Poly r = a;
  while (!r.is_zero() && r.contains_variable(var) && r.degree_in(var) >= db) {
    const std::uint32_t dr = r.degree_in(var);
    const Poly lcr = leading_coefficient_in(r, var);
    r = lcb * r - lcr * variable_power(a.nvars(), var, dr - db) * b;
  }
  if (db == 0) return Poly(a.nvars());
  return r;
}

int main_variable(const Poly& a, const Poly& b) {
  for (std::size_t v = a.nvars(); v-- > 0;) {
    if (a.contains_variable(v) || b.contains_variable(v)) return static_cast<int>(v);
  }
  return -1;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.nvars(), Rational(1));
  if (a == b) return monic(a);
  const int vi = main_variable(a, b);
  const auto v = static_cast<std::size_t>(vi);
  const bool av = a.contains_variable(v);
  const bool bv = b.contains_variable(v);
  if (!av) return gcd(a, content_in(b, v));
  if (!bv) return gcd(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  Poly pa = ca.is_constant() ? monic(a) : monic(*divide_exact(a, ca));
  Poly pb = cb.is_constant() ? monic(b) : monic(*divide_exact(b, cb));
  const Poly g = gcd(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (true) {
    if (divide_exact(pa, pb)) break;
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.contains_variable(v)) {
      pb = Poly::constant(a.nvars(), Rational(1));
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  return monic(primitive_part(pb, v) * g);
}

// --- rational functions ------------------------------------------------------

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.nvars(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  const Rational k = 1 / den_.leading_coefficient();
  if (k != 1) {
    num_ = num_.scaled(k);
    den_ = den_.scaled(k);
  }
}

RatFunc RatFunc::from_poly(Poly p) {
  const std::size_t n = p.nvars();
  return RatFunc(std::move(p), Poly::constant(n, Rational(1)), Reduced{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc::from_poly(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (b.is_polynomial()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_);
  if (a.is_polynomial()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.num_.nvars());
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc::from_poly(a.num_ * b.num_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by an identically zero expression");
  return a * RatFunc(b.den_, b.num_);
}

RatFunc RatFunc::power(int k) const {
  if (k == 0) return from_poly(Poly::constant(num_.nvars(), Rational(1)));
  if (k < 0) {
    if (is_zero()) throw DomainError("negative power of an identically zero expression");
    return RatFunc(den_, num_).power(-k);
  }
  const auto uk = static_cast<unsigned>(k);
  return RatFunc(num_.power(uk), den_.power(uk), Reduced{});
}

}  // namespace lrj::cas
