#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "lrjcalc/cas/normalize.hpp"
#include "lrjcalc/dsl/document.hpp"

namespace lrj::dsl {

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::Lcs: return "lcs";
    case StructureKind::Contact: return "contact";
    case StructureKind::Lrj: return "lrj";
    case StructureKind::Lift: return "lift";
  }
  return "?";
}

const Value& Structure::at(const std::string& key) const {
  for (const auto& e : entries) {
    if (e.key == key) return e.value;
  }
  throw std::out_of_range("structure " + name + " has no key " + key);
}

const Structure* Document::structure(const std::string& name) const {
  for (const auto& s : structures) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

std::string number(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string scalar_text(const ScalarExpr& e, const std::vector<std::string>& coords) {
  return cas::to_string(cas::normalize(e), coords);
}

std::string value_text(const Value& v, const std::vector<std::string>& coords) {
  if (!v.ref.empty()) return v.ref;
  switch (v.kind) {
    case Value::Kind::Scalar: return scalar_text(v.scalar, coords);
    case Value::Kind::Op: return calc::to_string(v.op, coords);
    case Value::Kind::Form: return calc::to_string(v.form, coords);
    case Value::Kind::Structure: return v.ref;
  }
  return "";
}

bool same_scalar(const ScalarExpr& a, const ScalarExpr& b) {
  return cas::structurally_equal(cas::normalize(a), cas::normalize(b));
}

bool same_value(const Value& a, const Value& b) {
  if (a.kind != b.kind || a.ref != b.ref) return false;
  switch (a.kind) {
    case Value::Kind::Scalar: return same_scalar(a.scalar, b.scalar);
    case Value::Kind::Op: return a.op == b.op;
    case Value::Kind::Form: return a.form == b.form;
    case Value::Kind::Structure: return true;
  }
  return false;
}

bool same_binding(const Binding& a, const Binding& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  switch (a.kind) {
    case Binding::Kind::Scalar: return same_scalar(a.scalar, b.scalar);
    case Binding::Kind::Field:
    case Binding::Kind::Op: return a.op == b.op;
    case Binding::Kind::Form: return a.space == b.space && a.form == b.form;
  }
  return false;
}

bool same_check(const CheckDirective& a, const CheckDirective& b) {
  if (a.target != b.target || a.samples != b.samples || a.seed != b.seed || a.tolerance != b.tolerance ||
      a.instances != b.instances || a.reeb != b.reeb || a.classify != b.classify || a.volume != b.volume ||
      a.isos != b.isos || a.exactness != b.exactness || a.hamiltonian.size() != b.hamiltonian.size() ||
      a.brackets.size() != b.brackets.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.hamiltonian.size(); ++i) {
    if (!same_scalar(a.hamiltonian[i], b.hamiltonian[i])) return false;
  }
  for (std::size_t i = 0; i < a.brackets.size(); ++i) {
    if (!same_scalar(a.brackets[i].first, b.brackets[i].first) ||
        !same_scalar(a.brackets[i].second, b.brackets[i].second)) {
      return false;
    }
  }
  return true;
}

template <class T, class Eq>
bool same_list(const std::vector<T>& a, const std::vector<T>& b, Eq eq) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

std::string print(const Document& doc) {
  const auto& coords = doc.chart.coords();
  std::string out = "chart " + doc.chart.name() + " (";
  for (std::size_t i = 0; i < coords.size(); ++i) out += (i ? ", " : "") + coords[i];
  out += ")";
  const auto& box = doc.chart.domain();
  const bool default_box =
      std::all_of(box.begin(), box.end(), [](const chart::Interval& iv) { return iv == chart::Interval{}; });
  if (!default_box) {
    out += " domain ";
    for (std::size_t i = 0; i < box.size(); ++i) {
      out += (i ? ", [" : "[") + number(box[i].lo) + ", " + number(box[i].hi) + "]";
    }
  }
  out += ";\n";

  for (const auto& b : doc.bindings) {
    switch (b.kind) {
      case Binding::Kind::Scalar: out += "scalar " + b.name + " = " + scalar_text(b.scalar, coords); break;
      case Binding::Kind::Field: out += "field " + b.name + " = " + calc::to_string(b.op, coords); break;
      case Binding::Kind::Op: out += "op " + b.name + " = " + calc::to_string(b.op, coords); break;
      case Binding::Kind::Form:
        out += "form " + b.name + " : " + std::to_string(b.form.degree()) + " on " + (b.space == Space::X ? "X" : "D") +
               " = " + calc::to_string(b.form, coords);
        break;
    }
    out += ";\n";
  }

  for (const auto& s : doc.structures) {
    out += "\n" + to_string(s.kind) + " " + s.name + " {\n";
    for (const auto& e : s.entries) out += "  " + e.key + " = " + value_text(e.value, coords) + ";\n";
    out += "}\n";
  }

  if (!doc.checks.empty()) out += "\n";
  for (const auto& c : doc.checks) {
    std::vector<std::string> opts;
    if (c.samples) opts.push_back("samples = " + std::to_string(*c.samples));
    if (c.seed) opts.push_back("seed = " + std::to_string(*c.seed));
    if (c.tolerance) opts.push_back("tolerance = " + number(*c.tolerance));
    if (c.instances) opts.push_back("instances = " + std::to_string(*c.instances));
    if (c.reeb) opts.emplace_back("reeb");
    if (c.classify) opts.emplace_back("classify");
    if (c.volume) opts.emplace_back("volume");
    if (c.isos) opts.emplace_back("isos");
    if (c.exactness) opts.emplace_back("exactness");
    for (const auto& f : c.hamiltonian) opts.push_back("hamiltonian(" + scalar_text(f, coords) + ")");
    for (const auto& [f, g] : c.brackets) {
      opts.push_back("bracket(" + scalar_text(f, coords) + ", " + scalar_text(g, coords) + ")");
    }
    out += "check " + c.target;
    for (std::size_t i = 0; i < opts.size(); ++i) out += (i ? ", " : " with ") + opts[i];
    out += ";\n";
  }
  return out;
}

bool equivalent(const Document& a, const Document& b) {
  if (!(a.chart == b.chart)) return false;
  if (!same_list(a.bindings, b.bindings, same_binding)) return false;
  auto same_structure = [](const Structure& s, const Structure& t) {
    return s.kind == t.kind && s.name == t.name &&
           same_list(s.entries, t.entries,
                     [](const Entry& e, const Entry& f) { return e.key == f.key && same_value(e.value, f.value); });
  };
  if (!same_list(a.structures, b.structures, same_structure)) return false;
  return same_list(a.checks, b.checks, same_check);
}

structures::LcsData lcs_data(const Structure& s) { return {calc::XForm{s.at("alpha").form}, calc::XForm{s.at("omega").form}}; }

structures::ContactData contact_data(const Structure& s) {
  return {calc::XForm{s.at("beta").form}, calc::XForm{s.at("Omega").form}, s.at("E").op};
}

structures::LrjData lrj_data(const Structure& s) { return {calc::AlphaForm(s.at("alpha").form), s.at("omega").form}; }

}  // namespace lrj::dsl
