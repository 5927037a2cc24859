#pragma once

#include <span>
#include <vector>

#include "lrjcalc/cas/expr.hpp"

namespace lrj::cas {

/// Numeric value at `point` (indexed by chart coordinate).  Throws EvalError
/// naming the denominator when a quotient or negative power hits zero, and
/// std::out_of_range when the point is too short for the expression.
double eval(const ScalarExpr& e, std::span<const double> point);

/// Value together with a cancellation scale: the same expression evaluated
/// with every sum replaced by the sum of absolute values.  Residuals are
/// compared against tol * (1 + scale).
struct ScaledValue {
  double value = 0.0;
  double scale = 0.0;
  bool ok = true;  // false when a zero denominator was met
};

/// Flat postfix program for repeated evaluation of one expression.
/// Immutable once compiled; evaluate() is safe to call concurrently.
class EvalTape {
 public:
  enum class Code : unsigned char { Const, Var, Add, Mul, Div, Pow, Sin, Cos, Exp };
  struct Instr {
    Code code;
    int arg = 0;  // variable index, arity, or exponent
    double value = 0.0;
  };

  explicit EvalTape(const ScalarExpr& e);
  ScaledValue evaluate(std::span<const double> point) const;
  int required_dim() const { return required_dim_; }
  std::size_t size() const { return code_.size(); }

 private:
  void emit(const ScalarExpr& e);
  std::vector<Instr> code_;
  std::size_t max_stack_ = 0;
  int required_dim_ = 0;
};

}  // namespace lrj::cas
