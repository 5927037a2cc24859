#include "lrjcalc/calculus/cartan.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "lrjcalc/cas/normalize.hpp"

namespace lrj::calc {

namespace {

std::atomic<bool> g_wrong_wedge_sign{false};

void require_dim(const SkewForm& a, int n) {
  if (a.dim() != n) throw std::invalid_argument("forms live on charts of different dimension");
}

// Sign of the permutation that sorts the concatenation a ++ b, where a and b
// are increasing and disjoint; 0 if they share an entry.
int merge_sign(const Index& a, const Index& b, Index& merged) {
  merged.clear();
  std::size_t i = 0;
  std::size_t j = 0;
  int inversions = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      merged.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += static_cast<int>(a.size() - i);
      merged.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// rho(e_k) f for the identity anchor.
ScalarExpr anchor(int k, const ScalarExpr& f) { return k == 0 ? f : cas::diff(f, k - 1); }

}  // namespace

namespace debug {
void set_wrong_wedge_sign(bool on) { g_wrong_wedge_sign.store(on); }
bool wrong_wedge_sign() { return g_wrong_wedge_sign.load(); }
}  // namespace debug

SkewForm wedge(const SkewForm& eta, const SkewForm& zeta) {
  require_dim(zeta, eta.dim());
  const int n = eta.dim();
  const int deg = eta.degree() + zeta.degree();
  if (deg > n + 1) return SkewForm(n, deg);
  const bool flip = debug::wrong_wedge_sign() && eta.degree() < zeta.degree();
  FormBuilder b(n, deg);
  Index merged;
  for (const auto& [ia, ca] : eta.components()) {
    for (const auto& [ib, cb] : zeta.components()) {
      const int s = merge_sign(ia, ib, merged);
      if (s == 0) continue;
      b.add(merged, (s > 0) != flip ? ca * cb : -(ca * cb));
    }
  }
  return b.build();
}

SkewForm interior(const DiffOp& phi, const SkewForm& eta) {
  if (phi.dim() != eta.dim()) throw std::invalid_argument("operator and form dimensions differ");
  const int n = eta.dim();
  if (eta.degree() == 0) return SkewForm(n, 0);
  FormBuilder b(n, eta.degree() - 1);
  for (const auto& [idx, c] : eta.components()) {
    // eta(e_k, e_rest) for k = idx[pos] equals (-1)^pos eta_idx.
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const ScalarExpr& coeff = phi.component(idx[pos]);
      if (coeff.is_zero_literal()) continue;
      Index rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (q != pos) rest.push_back(idx[q]);
      }
      b.add(rest, pos % 2 == 0 ? coeff * c : -(coeff * c));
    }
  }
  return b.build();
}

SkewForm delta(const SkewForm& eta) {
  const int n = eta.dim();
  const int p = eta.degree();
  if (p + 1 > n + 1) return SkewForm(n, p + 1);
  FormBuilder b(n, p + 1);
  for (const auto& [idx, c] : eta.components()) {
    // Insert each missing basis index k; its position gives the sign.
    for (int k = 0; k <= n; ++k) {
      if (std::binary_search(idx.begin(), idx.end(), k)) continue;
      const auto pos = static_cast<std::size_t>(std::lower_bound(idx.begin(), idx.end(), k) - idx.begin());
      Index full = idx;
      full.insert(full.begin() + static_cast<std::ptrdiff_t>(pos), k);
      const ScalarExpr term = anchor(k, c);
      b.add(full, pos % 2 == 0 ? term : -term);
    }
  }
  return b.build();
}

SkewForm delta_alpha(const SkewForm& eta, const AlphaForm& alpha) {
  return delta(eta) + wedge(alpha.form(), eta);
}

ScalarExpr rho_alpha_apply(const DiffOp& phi, const AlphaForm& alpha, const ScalarExpr& f) {
  return cas::normalize(apply(phi, f) + f * alpha(phi));
}

SkewForm theta(const DiffOp& phi, const AlphaForm& alpha, const SkewForm& eta) {
  SkewForm out = interior(phi, delta_alpha(eta, alpha));
  if (eta.degree() > 0) out = out + delta_alpha(interior(phi, eta), alpha);
  return out;
}

XForm exterior_d(const XForm& beta) {
  const int n = beta.dim();
  const SkewForm& f = beta.form();
  SkewForm out(n, f.degree() + 1);
  if (f.degree() + 1 > n) return XForm(out);
  for (int i = 0; i < n; ++i) {
    SkewForm partial(n, f.degree());
    for (const auto& [idx, c] : f.components()) partial.set(idx, cas::diff(c, i));
    if (partial.is_zero()) continue;
    out = out + wedge(SkewForm::covector(n, i + 1), partial);
  }
  return XForm(out);
}

XForm restrict_to_x(const SkewForm& eta) {
  SkewForm out(eta.dim(), eta.degree());
  for (const auto& [idx, c] : eta.components()) {
    if (idx.empty() || idx[0] != 0) out.set(idx, c);
  }
  return XForm(out);
}

SkewForm lift_xform(const XForm& beta) { return beta.form(); }

namespace {
ScalarExpr pfaffian_rec(std::span<const ScalarExpr> a, int m, std::vector<int>& rows) {
  if (rows.empty()) return ScalarExpr(1);
  const int i = rows.front();
  std::vector<ScalarExpr> terms;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const ScalarExpr& aij = a[static_cast<std::size_t>(i * m + rows[k])];
    if (aij.is_zero_literal()) continue;
    std::vector<int> rest;
    for (std::size_t q = 1; q < rows.size(); ++q) {
      if (q != k) rest.push_back(rows[q]);
    }
    ScalarExpr sub = pfaffian_rec(a, m, rest);
    if (sub.is_zero_literal()) continue;
    terms.push_back(k % 2 == 1 ? aij * sub : -(aij * sub));
  }
  return cas::normalize(cas::sum(terms));
}
}  // namespace

ScalarExpr pfaffian(std::span<const ScalarExpr> matrix, int m) {
  if (static_cast<int>(matrix.size()) != m * m) throw std::invalid_argument("matrix size mismatch");
  if (m % 2 != 0) return ScalarExpr(0);
  std::vector<int> rows(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) rows[static_cast<std::size_t>(i)] = i;
  return pfaffian_rec(matrix, m, rows);
}

ScalarExpr pfaffian(const SkewForm& omega) {
  if (omega.degree() != 2) throw std::invalid_argument("pfaffian needs a 2-form");
  const int m = omega.dim() + 1;
  std::vector<ScalarExpr> a(static_cast<std::size_t>(m * m));
  for (const auto& [idx, c] : omega.components()) {
    a[static_cast<std::size_t>(idx[0] * m + idx[1])] = c;
    a[static_cast<std::size_t>(idx[1] * m + idx[0])] = cas::normalize(-c);
  }
  return pfaffian(a, m);
}

ScalarExpr ce_coboundary(const SkewForm& eta, const AlphaForm& alpha, std::span<const DiffOp> ops) {
  const std::size_t k = ops.size();
  if (static_cast<int>(k) != eta.degree() + 1) throw std::invalid_argument("wrong number of operator arguments");
  std::vector<ScalarExpr> terms;
  std::vector<DiffOp> args;
  for (std::size_t i = 0; i < k; ++i) {
    args.clear();
    for (std::size_t q = 0; q < k; ++q) {
      if (q != i) args.push_back(ops[q]);
    }
    const ScalarExpr t = rho_alpha_apply(ops[i], alpha, eta.evaluate(args));
    terms.push_back(i % 2 == 0 ? t : -t);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      args.clear();
      args.push_back(bracket(ops[i], ops[j]));
      for (std::size_t q = 0; q < k; ++q) {
        if (q != i && q != j) args.push_back(ops[q]);
      }
      const ScalarExpr t = eta.evaluate(args);
      terms.push_back((i + j) % 2 == 0 ? t : -t);
    }
  }
  return cas::normalize(cas::sum(terms));
}

}  // namespace lrj::calc
