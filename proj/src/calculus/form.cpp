#include "lrjcalc/calculus/form.hpp"

#include <algorithm>
#include <stdexcept>

#include "lrjcalc/cas/normalize.hpp"

namespace lrj::calc {

namespace {

void validate_index(const Index& idx, int n, int degree) {
  if (static_cast<int>(idx.size()) != degree) throw std::invalid_argument("index length differs from form degree");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] > n) throw std::out_of_range("basis index out of range");
    if (i > 0 && idx[i - 1] >= idx[i]) throw std::invalid_argument("form index must be strictly increasing");
  }
}

void require_compatible(const SkewForm& a, const SkewForm& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) {
    throw std::invalid_argument("forms differ in dimension or degree");
  }
}

// det of the p x p matrix M[a][b] = ops[a].component(idx[b]), by expansion
// along the first row.  p is at most n + 1.
ScalarExpr minor_det(std::span<const DiffOp> ops, const Index& idx, std::size_t row, std::vector<bool>& used) {
  if (row == ops.size()) return ScalarExpr(1);
  std::vector<ScalarExpr> terms;
  int sign = 1;
  for (std::size_t c = 0; c < idx.size(); ++c) {
    if (used[c]) continue;
    const ScalarExpr& entry = ops[row].component(idx[c]);
    if (!entry.is_zero_literal()) {
      used[c] = true;
      ScalarExpr rest = minor_det(ops, idx, row + 1, used);
      used[c] = false;
      if (!rest.is_zero_literal()) terms.push_back(sign > 0 ? entry * rest : -(entry * rest));
    }
    sign = -sign;
  }
  return cas::sum(terms);
}

}  // namespace

SkewForm::SkewForm(int n, int degree) : n_(n), degree_(degree) {
  if (n < 0 || degree < 0) throw std::invalid_argument("negative form dimension or degree");
}

SkewForm SkewForm::scalar(int n, const ScalarExpr& f) {
  SkewForm s(n, 0);
  s.set({}, f);
  return s;
}

SkewForm SkewForm::covector(int n, int k) {
  SkewForm s(n, 1);
  s.set({k}, ScalarExpr(1));
  return s;
}

ScalarExpr SkewForm::component(const Index& idx) const {
  auto it = comps_.find(idx);
  return it == comps_.end() ? ScalarExpr(0) : it->second;
}

ScalarExpr SkewForm::value_on_basis(std::span<const int> tuple) const {
  Index idx(tuple.begin(), tuple.end());
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return ScalarExpr(0);
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i - 1] == idx[i]) return ScalarExpr(0);
  }
  const ScalarExpr c = component(idx);
  return sign > 0 ? c : cas::normalize(-c);
}

void SkewForm::set(Index idx, const ScalarExpr& value) {
  validate_index(idx, n_, degree_);
  ScalarExpr v = cas::normalize(value);
  if (v.is_zero_literal()) {
    comps_.erase(idx);
  } else {
    comps_[std::move(idx)] = std::move(v);
  }
}

ScalarExpr SkewForm::evaluate(std::span<const DiffOp> ops) const {
  if (static_cast<int>(ops.size()) != degree_) throw std::invalid_argument("wrong number of operator arguments");
  for (const auto& op : ops) {
    if (op.dim() != n_) throw std::invalid_argument("operator and form dimensions differ");
  }
  std::vector<ScalarExpr> terms;
  std::vector<bool> used(static_cast<std::size_t>(degree_), false);
  for (const auto& [idx, c] : comps_) {
    ScalarExpr d = minor_det(ops, idx, 0, used);
    if (!d.is_zero_literal()) terms.push_back(c * d);
  }
  return cas::normalize(cas::sum(terms));
}

bool SkewForm::annihilates_unit() const {
  return std::none_of(comps_.begin(), comps_.end(), [](const auto& kv) { return !kv.first.empty() && kv.first[0] == 0; });
}

SkewForm operator+(const SkewForm& a, const SkewForm& b) {
  require_compatible(a, b);
  SkewForm r = a;
  for (const auto& [idx, c] : b.comps_) r.set(idx, r.component(idx) + c);
  return r;
}

SkewForm SkewForm::operator-() const {
  SkewForm r(n_, degree_);
  for (const auto& [idx, c] : comps_) r.comps_.emplace(idx, cas::normalize(-c));
  return r;
}

SkewForm operator-(const SkewForm& a, const SkewForm& b) { return a + (-b); }

SkewForm operator*(const ScalarExpr& f, const SkewForm& a) {
  SkewForm r(a.n_, a.degree_);
  for (const auto& [idx, c] : a.comps_) r.set(idx, f * c);
  return r;
}

bool operator==(const SkewForm& a, const SkewForm& b) {
  if (a.n_ != b.n_ || a.degree_ != b.degree_ || a.comps_.size() != b.comps_.size()) return false;
  auto it = b.comps_.begin();
  for (const auto& [idx, c] : a.comps_) {
    if (idx != it->first || !cas::structurally_equal(c, it->second)) return false;
    ++it;
  }
  return true;
}

void FormBuilder::add(const Index& idx, ScalarExpr term) {
  if (term.is_zero_literal()) return;
  terms_[idx].push_back(std::move(term));
}

SkewForm FormBuilder::build() const {
  SkewForm f(n_, degree_);
  for (const auto& [idx, ts] : terms_) f.set(idx, cas::sum(ts));
  return f;
}

XForm::XForm(SkewForm f) : form_(std::move(f)) {
  if (!form_.annihilates_unit()) throw std::invalid_argument("form on vector fields has a unit component");
}

AlphaForm::AlphaForm(SkewForm f) : form_(std::move(f)) {
  if (form_.degree() != 1) throw std::invalid_argument("alpha must have degree 1");
  unit_ = form_.component({0});
}

ScalarExpr AlphaForm::operator()(const DiffOp& phi) const {
  const DiffOp ops[] = {phi};
  return form_.evaluate(ops);
}

std::string render_index(const Index& idx, std::span<const std::string> coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    if (idx[i] == 0) {
      out += "1";
    } else {
      const auto k = static_cast<std::size_t>(idx[i] - 1);
      out += "d/d" + (k < coords.size() ? coords[k] : "x" + std::to_string(k));
    }
  }
  return out + ")";
}

}  // namespace lrj::calc

namespace lrj::calc {

std::vector<Index> all_indices(int n, int p) {
  std::vector<Index> out;
  if (p > n + 1 || p < 0) return out;
  Index cur(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int k = p - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == n - (p - 1 - k)) --k;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < p; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

std::string coord_name(std::span<const std::string> coords, int k) {
  const auto i = static_cast<std::size_t>(k);
  return i < coords.size() ? coords[i] : "x" + std::to_string(k);
}

// Appends "coeff*basis" to out with the sign pulled into the separator.
void append_term(std::string& out, const ScalarExpr& coeff, const std::string& basis,
                 std::span<const std::string> coords) {
  std::string c = cas::to_string(coeff, coords);
  bool negative = false;
  if (coeff.kind() != cas::Kind::Add && !c.empty() && c[0] == '-') {
    negative = true;
    c.erase(0, 1);
  }
  std::string body;
  if (c == "1") {
    body = basis;
  } else if (coeff.kind() == cas::Kind::Add) {
    body = "(" + c + ")*" + basis;
  } else {
    body = c + "*" + basis;
  }
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace

std::string to_string(const SkewForm& f, std::span<const std::string> coords) {
  if (f.degree() == 0) return cas::to_string(f.as_scalar(), coords);
  std::string out;
  for (const auto& [idx, c] : f.components()) {
    std::string basis;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) basis += "^";
      basis += idx[i] == 0 ? std::string("u") : "d" + coord_name(coords, idx[i] - 1);
    }
    append_term(out, c, basis, coords);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const DiffOp& phi, std::span<const std::string> coords) {
  std::string out;
  if (!phi.scalar().is_zero_literal()) out = cas::to_string(phi.scalar(), coords);
  for (int i = 0; i < phi.dim(); ++i) {
    const ScalarExpr& c = phi.vec()[static_cast<std::size_t>(i)];
    if (!c.is_zero_literal()) append_term(out, c, "d/d" + coord_name(coords, i), coords);
  }
  return out.empty() ? "0" : out;
}

}  // namespace lrj::calc
