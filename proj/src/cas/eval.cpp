#include "lrjcalc/cas/eval.hpp"

#include <cmath>
#include <stdexcept>

#include "lrjcalc/errors.hpp"

namespace lrj::cas {

double eval(const ScalarExpr& e, std::span<const double> point) {
  switch (e.kind()) {
    case Kind::Constant: return e.value().get_d();
    case Kind::Variable: {
      const auto i = static_cast<std::size_t>(e.variable_index());
      if (i >= point.size()) throw std::out_of_range("point has no coordinate " + std::to_string(i));
      return point[i];
    }
    case Kind::Add: {
      double s = 0.0;
      for (const auto& a : e.args()) s += eval(a, point);
      return s;
    }
    case Kind::Mul: {
      double p = 1.0;
      for (const auto& a : e.args()) p *= eval(a, point);
      return p;
    }
    case Kind::Pow: {
      const double b = eval(e.args()[0], point);
      if (e.exponent() < 0 && b == 0.0) {
        throw EvalError("negative power of zero", to_string(e.args()[0]));
      }
      return std::pow(b, e.exponent());
    }
    case Kind::Div: {
      const double d = eval(e.args()[1], point);
      if (d == 0.0) throw EvalError("division by zero", to_string(e.args()[1]));
      return eval(e.args()[0], point) / d;
    }
    case Kind::Sin: return std::sin(eval(e.args()[0], point));
    case Kind::Cos: return std::cos(eval(e.args()[0], point));
    case Kind::Exp: return std::exp(eval(e.args()[0], point));
  }
  return 0.0;
}

EvalTape::EvalTape(const ScalarExpr& e) {
  required_dim_ = max_variable(e) + 1;
  emit(e);
  std::size_t depth = 0;
  for (const auto& in : code_) {
    switch (in.code) {
      case Code::Const:
      case Code::Var: ++depth; break;
      case Code::Add:
      case Code::Mul: depth -= static_cast<std::size_t>(in.arg - 1); break;
      case Code::Div: --depth; break;
      default: break;
    }
    max_stack_ = std::max(max_stack_, depth);
  }
}

void EvalTape::emit(const ScalarExpr& e) {
  switch (e.kind()) {
    case Kind::Constant: code_.push_back({Code::Const, 0, e.value().get_d()}); return;
    case Kind::Variable: code_.push_back({Code::Var, e.variable_index(), 0.0}); return;
    case Kind::Add:
    case Kind::Mul:
      for (const auto& a : e.args()) emit(a);
      code_.push_back({e.kind() == Kind::Add ? Code::Add : Code::Mul, static_cast<int>(e.args().size()), 0.0});
      return;
    case Kind::Pow:
      emit(e.args()[0]);
      code_.push_back({Code::Pow, e.exponent(), 0.0});
      return;
    case Kind::Div:
      emit(e.args()[0]);
      emit(e.args()[1]);
      code_.push_back({Code::Div, 0, 0.0});
      return;
    case Kind::Sin: emit(e.args()[0]); code_.push_back({Code::Sin, 0, 0.0}); return;
    case Kind::Cos: emit(e.args()[0]); code_.push_back({Code::Cos, 0, 0.0}); return;
    case Kind::Exp: emit(e.args()[0]); code_.push_back({Code::Exp, 0, 0.0}); return;
  }
}

ScaledValue EvalTape::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) < required_dim_) throw std::out_of_range("point too short for expression");
  // Small expressions stay on the stack frame.
  constexpr std::size_t kInline = 64;
  double vbuf[kInline];
  double mbuf[kInline];
  std::vector<double> vheap;
  std::vector<double> mheap;
  double* val = vbuf;
  double* mag = mbuf;
  if (max_stack_ > kInline) {
    vheap.resize(max_stack_);
    mheap.resize(max_stack_);
    val = vheap.data();
    mag = mheap.data();
  }
  std::size_t sp = 0;
  for (const auto& in : code_) {
    switch (in.code) {
      case Code::Const:
        val[sp] = in.value;
        mag[sp] = std::abs(in.value);
        ++sp;
        break;
      case Code::Var: {
        const double x = point[static_cast<std::size_t>(in.arg)];
        val[sp] = x;
        mag[sp] = std::abs(x);
        ++sp;
        break;
      }
      case Code::Add: {
        const std::size_t n = static_cast<std::size_t>(in.arg);
        double s = 0.0;
        double m = 0.0;
        for (std::size_t i = sp - n; i < sp; ++i) {
          s += val[i];
          m += mag[i];
        }
        sp -= n;
        val[sp] = s;
        mag[sp] = m;
        ++sp;
        break;
      }
      case Code::Mul: {
        const std::size_t n = static_cast<std::size_t>(in.arg);
        double p = 1.0;
        double m = 1.0;
        for (std::size_t i = sp - n; i < sp; ++i) {
          p *= val[i];
          m *= mag[i];
        }
        sp -= n;
        val[sp] = p;
        mag[sp] = m;
        ++sp;
        break;
      }
      case Code::Div: {
        const double d = val[sp - 1];
        if (d == 0.0) return {0.0, 0.0, false};
        val[sp - 2] /= d;
        mag[sp - 2] /= std::abs(d);
        --sp;
        break;
      }
      case Code::Pow: {
        const double b = val[sp - 1];
        if (in.arg < 0 && b == 0.0) return {0.0, 0.0, false};
        val[sp - 1] = std::pow(b, in.arg);
        mag[sp - 1] = in.arg > 0 ? std::pow(mag[sp - 1], in.arg) : std::abs(val[sp - 1]);
        break;
      }
      case Code::Sin:
        val[sp - 1] = std::sin(val[sp - 1]);
        mag[sp - 1] = std::abs(val[sp - 1]);
        break;
      case Code::Cos:
        val[sp - 1] = std::cos(val[sp - 1]);
        mag[sp - 1] = std::abs(val[sp - 1]);
        break;
      case Code::Exp:
        val[sp - 1] = std::exp(val[sp - 1]);
        mag[sp - 1] = val[sp - 1];
        break;
    }
  }
  return {val[0], mag[0], true};
}

}  // namespace lrj::cas
