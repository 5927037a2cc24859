#include "lrjcalc/cas/normalize.hpp"

#include <algorithm>
#include <unordered_map>

#include "lrjcalc/cas/poly.hpp"
#include "lrjcalc/errors.hpp"

namespace lrj::cas {

namespace {

struct Atom {
  Kind kind;  // Variable, Sin, Cos or Exp
  int var = 0;
  ScalarExpr arg;  // normalized argument for transcendental atoms
};

int compare_atoms(const Atom& a, const Atom& b) {
  const bool av = a.kind == Kind::Variable;
  const bool bv = b.kind == Kind::Variable;
  if (av != bv) return av ? -1 : 1;
  if (av) return a.var < b.var ? -1 : (a.var > b.var ? 1 : 0);
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  return compare(a.arg, b.arg);
}

class Normalizer {
 public:
  NormalForm run(const ScalarExpr& e) {
    collect(e);
    std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) { return compare_atoms(a, b) < 0; });
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end(),
                             [](const Atom& a, const Atom& b) { return compare_atoms(a, b) == 0; }),
                 atoms_.end());
    RatFunc r = convert(e);
    NormalForm out{to_tree(r), {}};
    for (auto& c : caveats_) {
      if (std::none_of(out.caveats.begin(), out.caveats.end(),
                       [&](const ScalarExpr& k) { return structurally_equal(k, c); })) {
        out.caveats.push_back(c);
      }
    }
    return out;
  }

 private:
  void collect(const ScalarExpr& e) {
    if (!visited_.emplace(e.node(), true).second) return;
    switch (e.kind()) {
      case Kind::Constant: return;
      case Kind::Variable: atoms_.push_back({Kind::Variable, e.variable_index(), {}}); return;
      case Kind::Sin:
      case Kind::Cos:
      case Kind::Exp: {
        NormalForm inner = Normalizer().run(e.args()[0]);
        for (auto& c : inner.caveats) caveats_.push_back(c);
        args_.emplace(e.node(), inner.expr);
        if (!inner.expr.is_zero_literal()) atoms_.push_back({e.kind(), 0, inner.expr});
        return;
      }
      default:
        for (const auto& a : e.args()) collect(a);
    }
  }

  std::size_t atom_index(const Atom& key) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), key,
                               [](const Atom& a, const Atom& b) { return compare_atoms(a, b) < 0; });
    return static_cast<std::size_t>(it - atoms_.begin());
  }

  RatFunc convert(const ScalarExpr& e) {
    if (auto it = memo_.find(e.node()); it != memo_.end()) return it->second;
    const std::size_t n = atoms_.size();
    RatFunc r(n);
    switch (e.kind()) {
      case Kind::Constant: r = RatFunc::from_poly(Poly::constant(n, e.value())); break;
      case Kind::Variable:
        r = RatFunc::from_poly(Poly::variable(n, atom_index({Kind::Variable, e.variable_index(), {}})));
        break;
      case Kind::Add:
        for (const auto& a : e.args()) r = r + convert(a);
        break;
      case Kind::Mul:
        r = RatFunc::from_poly(Poly::constant(n, Rational(1)));
        for (const auto& a : e.args()) {
          r = r * convert(a);
          if (r.is_zero()) break;
        }
        break;
      case Kind::Pow: {
        RatFunc b = convert(e.args()[0]);
        if (e.exponent() < 0) {
          if (b.is_zero()) throw DomainError("negative power of zero in " + to_string(e));
          if (!(b.num().is_constant() && b.den().is_constant())) caveats_.push_back(to_tree(b));
        }
        r = b.power(e.exponent());
        break;
      }
      case Kind::Div: {
        RatFunc a = convert(e.args()[0]);
        RatFunc b = convert(e.args()[1]);
        if (b.is_zero()) throw DomainError("division by an identically zero denominator in " + to_string(e));
        if (!(b.num().is_constant() && b.den().is_constant())) caveats_.push_back(to_tree(b));
        r = a / b;
        break;
      }
      case Kind::Sin:
      case Kind::Cos:
      case Kind::Exp: {
        const ScalarExpr& arg = args_.at(e.node());
        if (arg.is_zero_literal()) {
          r = RatFunc::from_poly(Poly::constant(n, Rational(e.kind() == Kind::Sin ? 0 : 1)));
        } else {
          r = RatFunc::from_poly(Poly::variable(n, atom_index({e.kind(), 0, arg})));
        }
        break;
      }
    }
    memo_.emplace(e.node(), r);
    return r;
  }

  ScalarExpr atom_expr(const Atom& a) const {
    if (a.kind == Kind::Variable) return ScalarExpr::variable(a.var);
    return ScalarExpr::raw_unary(a.kind, a.arg);
  }

  ScalarExpr poly_tree(const Poly& p) const {
    std::vector<ScalarExpr> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
      std::vector<ScalarExpr> factors;
      if (c != 1) factors.emplace_back(c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        ScalarExpr a = atom_expr(atoms_[i]);
        factors.push_back(m[i] == 1 ? a : ScalarExpr::raw_pow(a, static_cast<int>(m[i])));
      }
      terms.push_back(product(factors));
    }
    return sum(terms);
  }

  ScalarExpr to_tree(const RatFunc& r) const {
    if (r.is_polynomial()) return poly_tree(r.num());
    return ScalarExpr::raw_div(poly_tree(r.num()), poly_tree(r.den()));
  }

  std::vector<Atom> atoms_;
  std::unordered_map<const Node*, bool> visited_;
  std::unordered_map<const Node*, ScalarExpr> args_;
  std::unordered_map<const Node*, RatFunc> memo_;
  std::vector<ScalarExpr> caveats_;
};

}  // namespace

NormalForm normalize_with_caveats(const ScalarExpr& e) {
  if (e.is_constant() && e.kind() == Kind::Constant) return {e, {}};
  if (e.kind() == Kind::Variable) return {e, {}};
  return Normalizer().run(e);
}

ScalarExpr normalize(const ScalarExpr& e) { return normalize_with_caveats(e).expr; }

namespace {
unsigned tree_degree(const ScalarExpr& e) {
  switch (e.kind()) {
    case Kind::Constant: return 0;
    case Kind::Variable:
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Exp: return 1;
    case Kind::Add: {
      unsigned d = 0;
      for (const auto& a : e.args()) d = std::max(d, tree_degree(a));
      return d;
    }
    case Kind::Mul: {
      unsigned d = 0;
      for (const auto& a : e.args()) d += tree_degree(a);
      return d;
    }
    case Kind::Pow: return tree_degree(e.args()[0]) * static_cast<unsigned>(std::abs(e.exponent()));
    case Kind::Div: return tree_degree(e.args()[0]) + tree_degree(e.args()[1]);
  }
  return 0;
}
}  // namespace

unsigned rational_degree(const ScalarExpr& normalized) { return tree_degree(normalized); }

bool is_nonzero_constant(const ScalarExpr& normalized) {
  return normalized.is_constant() && sgn(normalized.value()) != 0;
}

}  // namespace lrj::cas
