#pragma once

#include <vector>

#include "lrjcalc/calculus/form.hpp"
#include "lrjcalc/cas/zero.hpp"

namespace lrj::structures {

using cas::ScalarExpr;

/// Solves A x = b for a rows x cols system (rows >= cols) over the field of
/// expressions by fraction-free elimination, normalizing after each pivot
/// step.  Pivots prefer nonzero constants, then entries of lowest degree.
/// Entries containing sin/cos/exp count as zero when they pass the zero
/// test.  Throws DegenerateError when the solution is not unique or the
/// system is inconsistent.
std::vector<ScalarExpr> solve_linear(std::vector<ScalarExpr> a, std::vector<ScalarExpr> b, int rows, int cols,
                                     const cas::ZeroTest& zt);

/// The operator phi with i_phi omega = eta (eta of degree 1).
calc::DiffOp solve_interior(const calc::SkewForm& omega, const calc::SkewForm& eta, const cas::ZeroTest& zt);

/// True when e vanishes: literally after normalization, or by the zero test
/// when transcendental atoms remain.
bool vanishes(const ScalarExpr& e, const cas::ZeroTest& zt);

}  // namespace lrj::structures
