#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lrj::cas {

using Rational = mpq_class;

enum class Kind : std::uint8_t { Constant, Variable, Add, Mul, Pow, Div, Sin, Cos, Exp };

struct Node;

/// Immutable scalar field on a coordinate chart.
///
/// The tree is built from rational constants, coordinate variables (by chart
/// index), n-ary sums and products, integer powers, a binary quotient, and the
/// unary functions sin, cos and exp.  Construction applies only local
/// simplifications (flattening, constant folding, neutral elements); the
/// canonical form is produced by normalize().  Subtrees are shared, so copies
/// are cheap and values may be read from several threads at once.
class ScalarExpr {
 public:
  ScalarExpr();  // the constant 0
  ScalarExpr(const Rational& c);  // NOLINT(google-explicit-constructor)
  ScalarExpr(long c);             // NOLINT(google-explicit-constructor)
  ScalarExpr(int c) : ScalarExpr(static_cast<long>(c)) {}  // NOLINT

  static ScalarExpr variable(int index);

  Kind kind() const;
  const Rational& value() const;  // Constant only
  int variable_index() const;     // Variable only
  int exponent() const;           // Pow only
  std::span<const ScalarExpr> args() const;

  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_zero_literal() const;
  bool is_one_literal() const;
  std::size_t hash() const;
  const Node* node() const { return node_.get(); }

  // Raw constructors: build exactly the requested node (no simplification).
  // Intended for canonical trees whose shape is already fixed.
  static ScalarExpr raw_nary(Kind k, std::vector<ScalarExpr> args);
  static ScalarExpr raw_pow(ScalarExpr base, int exponent);
  static ScalarExpr raw_div(ScalarExpr num, ScalarExpr den);
  static ScalarExpr raw_unary(Kind k, ScalarExpr arg);

 private:
  explicit ScalarExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  Kind kind = Kind::Constant;
  Rational value;
  int index = 0;  // variable index, or exponent for Pow
  std::vector<ScalarExpr> args;
  std::size_t hash = 0;
};

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator-(const ScalarExpr& a);
ScalarExpr& operator+=(ScalarExpr& a, const ScalarExpr& b);
ScalarExpr& operator-=(ScalarExpr& a, const ScalarExpr& b);
ScalarExpr& operator*=(ScalarExpr& a, const ScalarExpr& b);

ScalarExpr pow(const ScalarExpr& base, int exponent);
ScalarExpr sin(const ScalarExpr& arg);
ScalarExpr cos(const ScalarExpr& arg);
ScalarExpr exp(const ScalarExpr& arg);

ScalarExpr sum(std::span<const ScalarExpr> terms);
ScalarExpr product(std::span<const ScalarExpr> factors);

/// Structural total order (not mathematical equality).
int compare(const ScalarExpr& a, const ScalarExpr& b);
inline bool structurally_equal(const ScalarExpr& a, const ScalarExpr& b) {
  return compare(a, b) == 0;
}

/// Largest variable index occurring in e, or -1.
int max_variable(const ScalarExpr& e);
bool has_transcendental(const ScalarExpr& e);
std::size_t node_count(const ScalarExpr& e);

/// Exact partial derivative with respect to coordinate `coord`.
ScalarExpr diff(const ScalarExpr& e, int coord);

/// Replaces variable i by values[i]; variables beyond values are kept.
ScalarExpr substitute(const ScalarExpr& e, std::span<const ScalarExpr> values);

/// Infix rendering; variables use `names[i]` when available, else `x<i>`.
/// The output is accepted by the .geo scalar grammar.
std::string to_string(const ScalarExpr& e, std::span<const std::string> names = {});

std::string rational_to_string(const Rational& q);

}  // namespace lrj::cas
