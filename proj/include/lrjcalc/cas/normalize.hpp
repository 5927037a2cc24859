#pragma once

#include <vector>

#include "lrjcalc/cas/expr.hpp"

namespace lrj::cas {

/// Canonical form of an expression plus the denominators that had to be
/// assumed nonzero to reach it (e.g. x/x -> 1 records x).
struct NormalForm {
  ScalarExpr expr;
  std::vector<ScalarExpr> caveats;
};

/// Canonical form.  The expression is viewed as a rational function over Q in
/// its atoms: the coordinates, and each sin/cos/exp call with its argument
/// normalized recursively.  The result is the reduced quotient with expanded,
/// lexicographically sorted numerator and monic denominator, rendered back as
/// a tree.  Idempotent; equal rational functions over the same atoms map to
/// the same tree.  Throws DomainError on an identically zero denominator.
ScalarExpr normalize(const ScalarExpr& e);
NormalForm normalize_with_caveats(const ScalarExpr& e);

/// Total degree of the normalized numerator plus denominator (a size measure
/// used for pivot selection).
unsigned rational_degree(const ScalarExpr& normalized);

/// True when the normalized form is a nonzero rational constant.
bool is_nonzero_constant(const ScalarExpr& normalized);

}  // namespace lrj::cas
