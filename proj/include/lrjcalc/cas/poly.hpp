#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "lrjcalc/cas/expr.hpp"

namespace lrj::cas {

/// Dense exponent vector, one entry per polynomial variable.
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Terms are kept in descending lexicographic order (variable 0 most
/// significant); zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // 0 for the zero polynomial
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  std::uint32_t degree_in(std::size_t var) const;
  std::uint32_t total_degree() const;
  bool contains_variable(std::size_t var) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  Poly power(unsigned k) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Coefficients as a polynomial in `var`: exponent -> coefficient (with the
  /// `var` exponent cleared).
  std::map<std::uint32_t, Poly> coefficients_in(std::size_t var) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// Exact quotient num/den, or nullopt if den does not divide num.
std::optional<Poly> divide_exact(const Poly& num, const Poly& den);

/// Greatest common divisor, normalized to leading coefficient 1.
Poly gcd(const Poly& a, const Poly& b);

/// Reduced quotient of polynomials: gcd(num, den) = 1 and the leading
/// coefficient of den is 1.  Two equal rational functions over the same
/// variable list have identical representations.
class RatFunc {
 public:
  explicit RatFunc(std::size_t nvars = 0) : num_(nvars), den_(Poly::constant(nvars, Rational(1))) {}
  RatFunc(Poly num, Poly den);  // reduces; throws DomainError if den == 0
  static RatFunc from_poly(Poly p);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  RatFunc power(int k) const;

 private:
  struct Reduced {};
  RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

}  // namespace lrj::cas
