#pragma once

#include <span>
#include <string>

#include "lrjcalc/calculus/form.hpp"
#include "lrjcalc/cas/zero.hpp"

namespace lrj::calc {

/// Zero test of a - b component by component.  The grade is the weakest
/// over all tuples; on failure `detail` names the first failing tuple and
/// the residual there.
cas::Verdict compare_forms(const SkewForm& a, const SkewForm& b, const cas::ZeroTest& opts,
                           std::span<const std::string> coords = {});

/// Zero test of a - b on every extended basis component.
cas::Verdict compare_ops(const DiffOp& a, const DiffOp& b, const cas::ZeroTest& opts,
                         std::span<const std::string> coords = {});

/// Zero test of a single scalar with an optional label for the witness.
cas::Verdict compare_scalars(const ScalarExpr& a, const ScalarExpr& b, const cas::ZeroTest& opts,
                             std::span<const std::string> coords = {}, const std::string& label = {});

/// Folds `next` into `acc`: keeps the weaker grade and the first failure.
void merge_into(cas::Verdict& acc, const cas::Verdict& next);

}  // namespace lrj::calc
