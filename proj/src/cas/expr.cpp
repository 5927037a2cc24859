#include "lrjcalc/cas/expr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace lrj::cas {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_rational(const Rational& q) {
  const mpz_srcptr num = q.get_num_mpz_t();
  const mpz_srcptr den = q.get_den_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(num) + 7);
  h = mix(h, mpz_size(num) ? static_cast<std::size_t>(mpz_getlimbn(num, 0)) : 0);
  h = mix(h, mpz_size(den) ? static_cast<std::size_t>(mpz_getlimbn(den, 0)) : 0);
  return h;
}

std::shared_ptr<const Node> make_node(Kind k, Rational value, int index, std::vector<ScalarExpr> args) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->value = std::move(value);
  n->index = index;
  n->args = std::move(args);
  std::size_t h = mix(static_cast<std::size_t>(k) * 1315423911ULL, static_cast<std::size_t>(n->index));
  if (k == Kind::Constant) h = mix(h, hash_rational(n->value));
  for (const auto& a : n->args) h = mix(h, a.hash());
  n->hash = h;
  return n;
}

const std::shared_ptr<const Node>& zero_node() {
  static const std::shared_ptr<const Node> z = make_node(Kind::Constant, Rational(0), 0, {});
  return z;
}

}  // namespace

ScalarExpr::ScalarExpr() : node_(zero_node()) {}
ScalarExpr::ScalarExpr(const Rational& c) : node_(make_node(Kind::Constant, c, 0, {})) {}
ScalarExpr::ScalarExpr(long c) : node_(c == 0 ? zero_node() : make_node(Kind::Constant, Rational(c), 0, {})) {}

ScalarExpr ScalarExpr::variable(int index) {
  if (index < 0) throw std::invalid_argument("variable index must be non-negative");
  return ScalarExpr(make_node(Kind::Variable, Rational(0), index, {}));
}

Kind ScalarExpr::kind() const { return node_->kind; }
const Rational& ScalarExpr::value() const { return node_->value; }
int ScalarExpr::variable_index() const { return node_->index; }
int ScalarExpr::exponent() const { return node_->index; }
std::span<const ScalarExpr> ScalarExpr::args() const { return node_->args; }
std::size_t ScalarExpr::hash() const { return node_->hash; }

bool ScalarExpr::is_zero_literal() const { return kind() == Kind::Constant && sgn(value()) == 0; }
bool ScalarExpr::is_one_literal() const { return kind() == Kind::Constant && value() == 1; }

ScalarExpr ScalarExpr::raw_nary(Kind k, std::vector<ScalarExpr> args) {
  return ScalarExpr(make_node(k, Rational(0), 0, std::move(args)));
}
ScalarExpr ScalarExpr::raw_pow(ScalarExpr base, int exponent) {
  return ScalarExpr(make_node(Kind::Pow, Rational(0), exponent, {std::move(base)}));
}
ScalarExpr ScalarExpr::raw_div(ScalarExpr num, ScalarExpr den) {
  return ScalarExpr(make_node(Kind::Div, Rational(0), 0, {std::move(num), std::move(den)}));
}
ScalarExpr ScalarExpr::raw_unary(Kind k, ScalarExpr arg) {
  return ScalarExpr(make_node(k, Rational(0), 0, {std::move(arg)}));
}

// --- construction with local simplification -------------------------------

ScalarExpr sum(std::span<const ScalarExpr> terms) {
  std::vector<ScalarExpr> out;
  Rational constant(0);
  std::function<void(const ScalarExpr&)> push = [&](const ScalarExpr& t) {
    if (t.kind() == Kind::Add) {
      for (const auto& a : t.args()) push(a);
    } else if (t.is_constant()) {
      constant += t.value();
    } else {
      out.push_back(t);
    }
  };
  for (const auto& t : terms) push(t);
  if (out.empty()) return ScalarExpr(constant);
  if (sgn(constant) != 0) out.emplace_back(constant);
  if (out.size() == 1) return out.front();
  return ScalarExpr::raw_nary(Kind::Add, std::move(out));
}

ScalarExpr product(std::span<const ScalarExpr> factors) {
  std::vector<ScalarExpr> out;
  Rational constant(1);
  std::function<void(const ScalarExpr&)> push = [&](const ScalarExpr& f) {
    if (f.kind() == Kind::Mul) {
      for (const auto& a : f.args()) push(a);
    } else if (f.is_constant()) {
      constant *= f.value();
    } else {
      out.push_back(f);
    }
  };
  for (const auto& f : factors) push(f);
  if (sgn(constant) == 0) return ScalarExpr(0);
  if (out.empty()) return ScalarExpr(constant);
  if (constant != 1) out.insert(out.begin(), ScalarExpr(constant));
  if (out.size() == 1) return out.front();
  return ScalarExpr::raw_nary(Kind::Mul, std::move(out));
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_zero_literal()) return b;
  if (b.is_zero_literal()) return a;
  const ScalarExpr t[] = {a, b};
  return sum(t);
}

ScalarExpr operator-(const ScalarExpr& a) {
  if (a.is_constant()) return ScalarExpr(Rational(-a.value()));
  const ScalarExpr t[] = {ScalarExpr(-1), a};
  return product(t);
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
  if (b.is_zero_literal()) return a;
  return a + (-b);
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_zero_literal() || b.is_zero_literal()) return ScalarExpr(0);
  if (a.is_one_literal()) return b;
  if (b.is_one_literal()) return a;
  const ScalarExpr f[] = {a, b};
  return product(f);
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
  if (b.is_constant() && sgn(b.value()) != 0) {
    if (a.is_constant()) return ScalarExpr(Rational(a.value() / b.value()));
    return a * ScalarExpr(Rational(1 / b.value()));
  }
  if (b.is_constant()) return ScalarExpr::raw_div(a, b);  // literal zero: kept for diagnostics
  if (a.is_zero_literal()) return ScalarExpr(0);
  return ScalarExpr::raw_div(a, b);
}

ScalarExpr& operator+=(ScalarExpr& a, const ScalarExpr& b) { return a = a + b; }
ScalarExpr& operator-=(ScalarExpr& a, const ScalarExpr& b) { return a = a - b; }
ScalarExpr& operator*=(ScalarExpr& a, const ScalarExpr& b) { return a = a * b; }

ScalarExpr pow(const ScalarExpr& base, int exponent) {
  if (exponent == 0) return ScalarExpr(1);
  if (exponent == 1) return base;
  if (base.is_constant()) {
    if (sgn(base.value()) == 0) {
      if (exponent > 0) return ScalarExpr(0);
      return ScalarExpr::raw_pow(base, exponent);
    }
    Rational r(1);
    const Rational b = exponent > 0 ? base.value() : Rational(1 / base.value());
    for (int i = 0; i < std::abs(exponent); ++i) r *= b;
    return ScalarExpr(r);
  }
  if (base.kind() == Kind::Pow) return pow(base.args()[0], base.exponent() * exponent);
  return ScalarExpr::raw_pow(base, exponent);
}

ScalarExpr sin(const ScalarExpr& arg) {
  if (arg.is_zero_literal()) return ScalarExpr(0);
  return ScalarExpr::raw_unary(Kind::Sin, arg);
}
ScalarExpr cos(const ScalarExpr& arg) {
  if (arg.is_zero_literal()) return ScalarExpr(1);
  return ScalarExpr::raw_unary(Kind::Cos, arg);
}
ScalarExpr exp(const ScalarExpr& arg) {
  if (arg.is_zero_literal()) return ScalarExpr(1);
  return ScalarExpr::raw_unary(Kind::Exp, arg);
}

// --- structure queries -------------------------------------------------------

int compare(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.node() == b.node()) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Constant: return cmp(a.value(), b.value()) < 0 ? -1 : (cmp(a.value(), b.value()) > 0 ? 1 : 0);
    case Kind::Variable:
      return a.variable_index() < b.variable_index() ? -1 : (a.variable_index() > b.variable_index() ? 1 : 0);
    case Kind::Pow:
      if (a.exponent() != b.exponent()) return a.exponent() < b.exponent() ? -1 : 1;
      break;
    default: break;
  }
  const auto aa = a.args();
  const auto bb = b.args();
  if (aa.size() != bb.size()) return aa.size() < bb.size() ? -1 : 1;
  for (std::size_t i = 0; i < aa.size(); ++i) {
    if (int c = compare(aa[i], bb[i]); c != 0) return c;
  }
  return 0;
}

int max_variable(const ScalarExpr& e) {
  if (e.kind() == Kind::Variable) return e.variable_index();
  int m = -1;
  for (const auto& a : e.args()) m = std::max(m, max_variable(a));
  return m;
}

bool has_transcendental(const ScalarExpr& e) {
  switch (e.kind()) {
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Exp: return true;
    default: break;
  }
  return std::any_of(e.args().begin(), e.args().end(), has_transcendental);
}

std::size_t node_count(const ScalarExpr& e) {
  std::size_t n = 1;
  for (const auto& a : e.args()) n += node_count(a);
  return n;
}

// --- differentiation ---------------------------------------------------------

ScalarExpr substitute(const ScalarExpr& e, std::span<const ScalarExpr> values) {
  switch (e.kind()) {
    case Kind::Constant: return e;
    case Kind::Variable: {
      const auto i = static_cast<std::size_t>(e.variable_index());
      return i < values.size() ? values[i] : e;
    }
    case Kind::Add:
    case Kind::Mul: {
      std::vector<ScalarExpr> parts;
      for (const auto& a : e.args()) parts.push_back(substitute(a, values));
      return e.kind() == Kind::Add ? sum(parts) : product(parts);
    }
    case Kind::Pow: return pow(substitute(e.args()[0], values), e.exponent());
    case Kind::Div: return substitute(e.args()[0], values) / substitute(e.args()[1], values);
    case Kind::Sin: return sin(substitute(e.args()[0], values));
    case Kind::Cos: return cos(substitute(e.args()[0], values));
    case Kind::Exp: return exp(substitute(e.args()[0], values));
  }
  return e;
}

ScalarExpr diff(const ScalarExpr& e, int coord) {
  switch (e.kind()) {
    case Kind::Constant: return ScalarExpr(0);
    case Kind::Variable: return ScalarExpr(e.variable_index() == coord ? 1 : 0);
    case Kind::Add: {
      std::vector<ScalarExpr> terms;
      for (const auto& a : e.args()) terms.push_back(diff(a, coord));
      return sum(terms);
    }
    case Kind::Mul: {
      const auto f = e.args();
      std::vector<ScalarExpr> terms;
      for (std::size_t i = 0; i < f.size(); ++i) {
        ScalarExpr d = diff(f[i], coord);
        if (d.is_zero_literal()) continue;
        std::vector<ScalarExpr> factors;
        for (std::size_t j = 0; j < f.size(); ++j) factors.push_back(j == i ? d : f[j]);
        terms.push_back(product(factors));
      }
      return sum(terms);
    }
    case Kind::Pow: {
      const ScalarExpr& b = e.args()[0];
      ScalarExpr db = diff(b, coord);
      if (db.is_zero_literal()) return ScalarExpr(0);
      return ScalarExpr(e.exponent()) * pow(b, e.exponent() - 1) * db;
    }
    case Kind::Div: {
      const ScalarExpr& a = e.args()[0];
      const ScalarExpr& b = e.args()[1];
      ScalarExpr da = diff(a, coord);
      ScalarExpr db = diff(b, coord);
      if (db.is_zero_literal()) return da / b;
      return (da * b - a * db) / pow(b, 2);
    }
    case Kind::Sin: return cos(e.args()[0]) * diff(e.args()[0], coord);
    case Kind::Cos: return -(sin(e.args()[0]) * diff(e.args()[0], coord));
    case Kind::Exp: return e * diff(e.args()[0], coord);
  }
  return ScalarExpr(0);
}

// --- rendering ---------------------------------------------------------------

namespace {

enum Prec { kAdd = 1, kNeg = 2, kMul = 3, kPow = 4, kAtom = 5 };

struct Rendered {
  std::string text;
  int prec;
};

std::string var_name(int i, std::span<const std::string> names) {
  if (i >= 0 && static_cast<std::size_t>(i) < names.size()) return names[static_cast<std::size_t>(i)];
  return "x" + std::to_string(i);
}

Rendered render(const ScalarExpr& e, std::span<const std::string> names);

std::string wrap(const Rendered& r, int need) {
  return r.prec >= need ? r.text : "(" + r.text + ")";
}

// Leading numeric factor of a product (or the constant itself).
Rational leading_constant(const ScalarExpr& e) {
  if (e.is_constant()) return e.value();
  if (e.kind() == Kind::Mul && e.args()[0].is_constant()) return e.args()[0].value();
  return Rational(1);
}

Rendered render_constant(const Rational& q) {
  std::string s = rational_to_string(q);
  if (sgn(q) < 0) return {s, kNeg};
  if (q.get_den() != 1) return {s, kMul};
  return {s, kAtom};
}

Rendered render_mul(const ScalarExpr& e, std::span<const std::string> names) {
  auto f = e.args();
  std::size_t start = 0;
  Rational c(1);
  if (f[0].is_constant()) {
    c = f[0].value();
    start = 1;
  }
  std::string body;
  for (std::size_t i = start; i < f.size(); ++i) {
    if (i > start) body += "*";
    body += wrap(render(f[i], names), kMul + (i > start ? 1 : 0));
  }
  if (c == 1) return {body, kMul};
  if (c == -1) return {"-" + body, kNeg};
  Rational a = abs(c);
  std::string cs = wrap(render_constant(a), kMul);
  if (sgn(c) < 0) return {"-" + cs + "*" + body, kNeg};
  return {cs + "*" + body, kMul};
}

Rendered render(const ScalarExpr& e, std::span<const std::string> names) {
  switch (e.kind()) {
    case Kind::Constant: return render_constant(e.value());
    case Kind::Variable: return {var_name(e.variable_index(), names), kAtom};
    case Kind::Add: {
      std::string s;
      bool first = true;
      for (const auto& t : e.args()) {
        const Rational lc = leading_constant(t);
        if (!first && sgn(lc) < 0) {
          s += " - " + wrap(render(-t, names), kMul);
        } else {
          Rendered r = render(t, names);
          s += first ? r.text : " + " + wrap(r, kNeg);
        }
        first = false;
      }
      return {s, kAdd};
    }
    case Kind::Mul: return render_mul(e, names);
    case Kind::Pow: {
      std::string b = wrap(render(e.args()[0], names), kAtom);
      int k = e.exponent();
      return {b + "^" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k)), kPow};
    }
    case Kind::Div: {
      std::string n = wrap(render(e.args()[0], names), kMul);
      std::string d = wrap(render(e.args()[1], names), kPow);
      return {n + "/" + d, kMul};
    }
    case Kind::Sin: return {"sin(" + render(e.args()[0], names).text + ")", kAtom};
    case Kind::Cos: return {"cos(" + render(e.args()[0], names).text + ")", kAtom};
    case Kind::Exp: return {"exp(" + render(e.args()[0], names).text + ")", kAtom};
  }
  return {"?", kAtom};
}

}  // namespace

std::string rational_to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const ScalarExpr& e, std::span<const std::string> names) {
  return render(e, names).text;
}

}  // namespace lrj::cas
