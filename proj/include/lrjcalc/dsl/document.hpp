#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrjcalc/calculus/form.hpp"
#include "lrjcalc/chart/chart.hpp"
#include "lrjcalc/structures/structures.hpp"

namespace lrj::dsl {

using cas::ScalarExpr;
using calc::DiffOp;
using calc::SkewForm;

struct Location {
  int line = 0;
  int column = 0;
};

enum class Space { X, D };

/// A named value declared with scalar/field/op/form.
struct Binding {
  enum class Kind { Scalar, Field, Op, Form };
  Kind kind = Kind::Scalar;
  std::string name;
  Location loc;
  ScalarExpr scalar;  // Scalar
  DiffOp op{0};       // Field, Op
  SkewForm form{0, 0};  // Form
  Space space = Space::X;
};

/// Resolved value of a structure entry.  `ref` keeps the binding or
/// structure name when the entry was written as a bare identifier.
struct Value {
  enum class Kind { Scalar, Op, Form, Structure };
  Kind kind = Kind::Scalar;
  ScalarExpr scalar;
  DiffOp op{0};
  SkewForm form{0, 0};
  std::string ref;
};

enum class StructureKind { Lcs, Contact, Lrj, Lift };
std::string to_string(StructureKind k);

struct Entry {
  std::string key;
  Value value;
  Location loc;
};

struct Structure {
  StructureKind kind = StructureKind::Lcs;
  std::string name;
  Location loc;
  std::vector<Entry> entries;  // in the canonical key order of the kind

  const Value& at(const std::string& key) const;
};

/// `check NAME with ...;`.  Unset numeric options fall back to the run
/// configuration.
struct CheckDirective {
  std::string target;
  Location loc;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::optional<int> instances;
  bool reeb = false;
  bool classify = false;
  bool volume = false;
  bool isos = false;
  bool exactness = false;
  std::vector<ScalarExpr> hamiltonian;
  std::vector<std::pair<ScalarExpr, ScalarExpr>> brackets;
};

struct Document {
  chart::Chart chart{"", {"x"}};
  std::vector<Binding> bindings;
  std::vector<Structure> structures;
  std::vector<CheckDirective> checks;

  const Structure* structure(const std::string& name) const;
};

/// Canonical text: normalized values, fixed key order, one item per line.
std::string print(const Document& doc);

/// Semantic equality: same chart, bindings, structures and directives with
/// values compared after normalization.  Source locations are ignored.
bool equivalent(const Document& a, const Document& b);

// Structure data in the form the checkers take.
structures::LcsData lcs_data(const Structure& s);
structures::ContactData contact_data(const Structure& s);
structures::LrjData lrj_data(const Structure& s);

}  // namespace lrj::dsl
