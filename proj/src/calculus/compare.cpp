#include "lrjcalc/calculus/compare.hpp"

#include <set>
#include <stdexcept>

#include "lrjcalc/cas/normalize.hpp"

namespace lrj::calc {

void merge_into(cas::Verdict& acc, const cas::Verdict& next) {
  const bool first_failure = !next.passed() && acc.passed();
  acc.grade = cas::weakest(acc.grade, next.grade);
  acc.samples = std::max(acc.samples, next.samples);
  acc.tolerance = std::max(acc.tolerance, next.tolerance);
  if (first_failure) {
    acc.point = next.point;
    acc.value = next.value;
    acc.detail = next.detail;
  }
}

cas::Verdict compare_scalars(const ScalarExpr& a, const ScalarExpr& b, const cas::ZeroTest& opts,
                             std::span<const std::string> coords, const std::string& label) {
  const ScalarExpr r = cas::normalize(a - b);
  cas::Verdict v = cas::to_verdict(cas::is_zero(r, opts));
  if (!v.passed()) {
    v.detail = (label.empty() ? std::string() : label + ": ") + "residual " + cas::to_string(r, coords);
  }
  return v;
}

cas::Verdict compare_forms(const SkewForm& a, const SkewForm& b, const cas::ZeroTest& opts,
                           std::span<const std::string> coords) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) {
    throw std::invalid_argument("compared forms differ in dimension or degree");
  }
  std::set<Index> keys;
  for (const auto& kv : a.components()) keys.insert(kv.first);
  for (const auto& kv : b.components()) keys.insert(kv.first);
  cas::Verdict acc;
  for (const auto& idx : keys) {
    merge_into(acc, compare_scalars(a.component(idx), b.component(idx), opts, coords, render_index(idx, coords)));
  }
  return acc;
}

cas::Verdict compare_ops(const DiffOp& a, const DiffOp& b, const cas::ZeroTest& opts,
                         std::span<const std::string> coords) {
  if (a.dim() != b.dim()) throw std::invalid_argument("compared operators differ in dimension");
  cas::Verdict acc;
  for (int k = 0; k <= a.dim(); ++k) {
    merge_into(acc, compare_scalars(a.component(k), b.component(k), opts, coords, render_index({k}, coords)));
  }
  return acc;
}

}  // namespace lrj::calc
