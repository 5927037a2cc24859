#include "lrjcalc/structures/linear.hpp"

#include <stdexcept>

#include "lrjcalc/cas/normalize.hpp"
#include "lrjcalc/errors.hpp"

namespace lrj::structures {

bool vanishes(const ScalarExpr& e, const cas::ZeroTest& zt) {
  const ScalarExpr n = cas::normalize(e);
  if (n.is_zero_literal()) return true;
  if (!cas::has_transcendental(n)) return false;
  return cas::is_zero(n, zt).passed();
}

std::vector<ScalarExpr> solve_linear(std::vector<ScalarExpr> a, std::vector<ScalarExpr> b, int rows, int cols,
                                     const cas::ZeroTest& zt) {
  if (rows < cols) throw DegenerateError("underdetermined linear system", std::to_string(rows) + " equations");
  if (static_cast<int>(a.size()) != rows * cols || static_cast<int>(b.size()) != rows) {
    throw std::invalid_argument("linear system shape mismatch");
  }
  auto at = [&](int i, int j) -> ScalarExpr& { return a[static_cast<std::size_t>(i * cols + j)]; };
  for (auto& e : a) e = cas::normalize(e);
  for (auto& e : b) e = cas::normalize(e);

  ScalarExpr prev(1);
  for (int c = 0; c < cols; ++c) {
    int best = -1;
    unsigned best_cost = 0;
    for (int i = c; i < rows; ++i) {
      const ScalarExpr& e = at(i, c);
      if (vanishes(e, zt)) continue;
      const unsigned cost = e.is_constant() ? 0 : 1 + cas::rational_degree(e);
      if (best < 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
      if (cost == 0) break;
    }
    if (best < 0) {
      throw DegenerateError("singular linear system", "column " + std::to_string(c) + " has no nonzero pivot");
    }
    if (best != c) {
      for (int j = 0; j < cols; ++j) std::swap(at(best, j), at(c, j));
      std::swap(b[static_cast<std::size_t>(best)], b[static_cast<std::size_t>(c)]);
    }
    const ScalarExpr piv = at(c, c);
    for (int i = c + 1; i < rows; ++i) {
      const ScalarExpr f = at(i, c);
      if (f.is_zero_literal()) {
        // Bareiss still rescales the row by piv / prev.
        if (!prev.is_one_literal() || !piv.is_one_literal()) {
          for (int j = c + 1; j < cols; ++j) at(i, j) = cas::normalize(piv * at(i, j) / prev);
          b[static_cast<std::size_t>(i)] = cas::normalize(piv * b[static_cast<std::size_t>(i)] / prev);
        }
        continue;
      }
      for (int j = c + 1; j < cols; ++j) at(i, j) = cas::normalize((piv * at(i, j) - f * at(c, j)) / prev);
      b[static_cast<std::size_t>(i)] =
          cas::normalize((piv * b[static_cast<std::size_t>(i)] - f * b[static_cast<std::size_t>(c)]) / prev);
      at(i, c) = ScalarExpr(0);
    }
    prev = piv;
  }
  for (int i = cols; i < rows; ++i) {
    if (!vanishes(b[static_cast<std::size_t>(i)], zt)) {
      throw DegenerateError("inconsistent linear system", cas::to_string(b[static_cast<std::size_t>(i)]));
    }
  }
  std::vector<ScalarExpr> x(static_cast<std::size_t>(cols));
  for (int c = cols - 1; c >= 0; --c) {
    std::vector<ScalarExpr> terms{b[static_cast<std::size_t>(c)]};
    for (int j = c + 1; j < cols; ++j) terms.push_back(-(at(c, j) * x[static_cast<std::size_t>(j)]));
    x[static_cast<std::size_t>(c)] = cas::normalize(cas::sum(terms) / at(c, c));
  }
  return x;
}

calc::DiffOp solve_interior(const calc::SkewForm& omega, const calc::SkewForm& eta, const cas::ZeroTest& zt) {
  if (omega.degree() != 2 || eta.degree() != 1) throw std::invalid_argument("solve_interior needs a 2-form and a 1-form");
  const int m = omega.dim() + 1;
  std::vector<ScalarExpr> a(static_cast<std::size_t>(m * m));
  std::vector<ScalarExpr> b(static_cast<std::size_t>(m));
  for (int row = 0; row < m; ++row) {
    for (int col = 0; col < m; ++col) {
      // (i_phi omega)(e_row) = sum_col phi^col omega(e_col, e_row)
      const int t[] = {col, row};
      a[static_cast<std::size_t>(row * m + col)] = omega.value_on_basis(t);
    }
    b[static_cast<std::size_t>(row)] = eta.component({row});
  }
  const auto x = solve_linear(std::move(a), std::move(b), m, m, zt);
  return calc::DiffOp(x[0], std::vector<ScalarExpr>(x.begin() + 1, x.end()));
}

}  // namespace lrj::structures
