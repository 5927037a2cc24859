#include "lrjcalc/dsl/parser.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

#include "lexer.hpp"
#include "lrjcalc/calculus/cartan.hpp"
#include "lrjcalc/cas/normalize.hpp"

namespace lrj::dsl {

using detail::Tok;
using detail::Token;

ParseError::ParseError(std::string message, int line, int column, std::string token)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(std::move(message)),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

namespace {

constexpr std::array kKeywords{"chart", "domain", "scalar", "field", "op",    "form", "on",  "lcs", "contact",
                               "lrj",   "lift",   "check",  "with",  "sin",   "cos",  "exp", "u"};

bool is_keyword(std::string_view s) { return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end(); }

// Exact value of a decimal literal such as 12, 0.25 or 1e-9.
cas::Rational decimal_value(const std::string& text) {
  const std::size_t e = text.find_first_of("eE");
  const std::string body = text.substr(0, e);
  long exponent = e == std::string::npos ? 0 : std::stol(text.substr(e + 1));
  std::string digits = body;
  if (const std::size_t dot = body.find('.'); dot != std::string::npos) {
    digits.erase(dot, 1);
    exponent -= static_cast<long>(body.size() - dot - 1);
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  const mpz_class num(digits, 10);
  cas::Rational q = exponent < 0 ? cas::Rational(num, scale) : cas::Rational(num * scale);
  q.canonicalize();
  return q;
}

// Runs f, reporting library exceptions as a ParseError at token t.
template <class F>
auto guarded(const Token& t, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), t.line, t.column, t.spelling());
  }
}

struct Typed {
  enum class Kind { Scalar, Form, Op };
  Kind kind = Kind::Scalar;
  ScalarExpr s;
  SkewForm f{0, 0};
  DiffOp o{0};
};

struct ExprContext {
  bool forms = false;
  Space space = Space::X;
  bool ops = false;
};

enum class Want { Scalar, FormX1, FormX2, FormD1, FormD2, Field, Contact, Constant };

struct KeySpec {
  const char* key;
  Want want;
  bool required;
};

std::vector<KeySpec> keys_of(StructureKind k) {
  switch (k) {
    case StructureKind::Lcs: return {{"alpha", Want::FormX1, true}, {"omega", Want::FormX2, true}};
    case StructureKind::Contact:
      return {{"beta", Want::FormX1, true}, {"Omega", Want::FormX2, true}, {"E", Want::Field, true}};
    case StructureKind::Lrj: return {{"alpha", Want::FormD1, true}, {"omega", Want::FormD2, true}};
    case StructureKind::Lift:
      return {{"contact", Want::Contact, true}, {"c", Want::Constant, true}, {"g", Want::Scalar, false}};
  }
  return {};
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}
  Parser(std::vector<Token> toks, Document doc) : toks_(std::move(toks)), doc_(std::move(doc)) {}

  ScalarExpr lone_scalar() {
    ScalarExpr e = scalar_expr();
    if (peek().kind != Tok::End) fail(peek(), "unexpected " + describe(peek()) + " after expression");
    return e;
  }

  Document run() {
    chart_decl();
    while (peek().kind != Tok::End) item();
    return std::move(doc_);
  }

 private:
  // --- token helpers -------------------------------------------------------

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.column, t.spelling());
  }
  static Location loc_of(const Token& t) { return {t.line, t.column}; }

  const Token& expect(char c) {
    if (!peek().is(c)) fail(peek(), std::string("expected '") + c + "' before " + describe(peek()));
    return next();
  }
  void expect_keyword(std::string_view kw) {
    if (!peek().is_ident(kw)) fail(peek(), "expected '" + std::string(kw) + "' before " + describe(peek()));
    next();
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(peek(), std::string("expected ") + what + " before " + describe(peek()));
    return next();
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : "'" + t.spelling() + "'";
  }

  int dim() const { return doc_.chart.dim(); }
  std::optional<int> coord(std::string_view s) const { return doc_.chart.index_of(s); }

  // --- chart ---------------------------------------------------------------

  void chart_decl() {
    expect_keyword("chart");
    const Token& name = expect_ident("a chart name");
    expect('(');
    std::vector<std::string> coords;
    std::vector<Token> coord_toks;
    do {
      const Token& c = expect_ident("a coordinate name");
      if (is_keyword(c.text)) fail(c, "coordinate name " + c.text + " is reserved");
      if (std::find(coords.begin(), coords.end(), c.text) != coords.end()) fail(c, "duplicate coordinate " + c.text);
      coords.push_back(c.text);
      coord_toks.push_back(c);
    } while (peek().is(',') && (next(), true));
    expect(')');
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const std::string& c = coords[i];
      if (c.size() > 1 && c[0] == 'd' && std::find(coords.begin(), coords.end(), c.substr(1)) != coords.end()) {
        fail(coord_toks[i], "coordinate name " + c + " collides with the covector of " + c.substr(1));
      }
    }
    std::vector<chart::Interval> box;
    if (peek().is_ident("domain")) {
      next();
      do {
        const Token& open = expect('[');
        const double lo = signed_number();
        expect(',');
        const double hi = signed_number();
        expect(']');
        if (!(lo < hi)) fail(open, "empty domain interval");
        box.push_back({lo, hi});
      } while (peek().is(',') && (next(), true));
      if (box.size() != coords.size()) {
        fail(peek(), "domain has " + std::to_string(box.size()) + " intervals for " + std::to_string(coords.size()) +
                         " coordinates");
      }
    }
    expect(';');
    doc_.chart = chart::Chart(name.text, std::move(coords), std::move(box));
  }

  double signed_number() {
    bool neg = false;
    if (peek().is('-')) {
      next();
      neg = true;
    }
    if (peek().kind != Tok::Number) fail(peek(), "expected a number before " + describe(peek()));
    const double v = std::stod(next().text);
    return neg ? -v : v;
  }

  // --- items ---------------------------------------------------------------

  void item() {
    const Token& t = peek();
    if (t.is_ident("scalar") || t.is_ident("field") || t.is_ident("op") || t.is_ident("form")) return binding();
    if (t.is_ident("lcs")) return structure(StructureKind::Lcs);
    if (t.is_ident("contact")) return structure(StructureKind::Contact);
    if (t.is_ident("lrj")) return structure(StructureKind::Lrj);
    if (t.is_ident("lift")) return structure(StructureKind::Lift);
    if (t.is_ident("check")) return check();
    if (t.is_ident("chart")) fail(t, "only one chart per document");
    fail(t, "expected a declaration before " + describe(t));
  }

  void declare_name(const Token& t) {
    const std::string& s = t.text;
    if (is_keyword(s)) fail(t, "name " + s + " is reserved");
    if (coord(s)) fail(t, "name " + s + " is a coordinate");
    if (s.size() > 1 && s[0] == 'd' && coord(s.substr(1))) {
      fail(t, "name " + s + " collides with the covector of " + s.substr(1));
    }
    if (find_binding(s) || doc_.structure(s)) fail(t, "duplicate name " + s);
  }

  const Binding* find_binding(std::string_view name) const {
    for (const auto& b : doc_.bindings) {
      if (b.name == name) return &b;
    }
    return nullptr;
  }

  void binding() {
    const std::string kw = next().text;
    const Token& name = expect_ident("a name");
    declare_name(name);
    Binding b;
    b.name = name.text;
    b.loc = loc_of(name);
    if (kw == "scalar") {
      expect('=');
      b.kind = Binding::Kind::Scalar;
      b.scalar = scalar_expr();
    } else if (kw == "field" || kw == "op") {
      expect('=');
      const Token& start = peek();
      b.kind = kw == "field" ? Binding::Kind::Field : Binding::Kind::Op;
      b.op = op_expr(start, b.kind == Binding::Kind::Field);
    } else {
      expect(':');
      const Token& deg = peek();
      if (deg.kind != Tok::Number || deg.text.find_first_not_of("0123456789") != std::string::npos) {
        fail(deg, "expected a form degree before " + describe(deg));
      }
      next();
      const int degree = std::stoi(deg.text);
      expect_keyword("on");
      const Token& sp = peek();
      if (!sp.is_ident("X") && !sp.is_ident("D")) fail(sp, "expected X or D before " + describe(sp));
      next();
      b.kind = Binding::Kind::Form;
      b.space = sp.text == "X" ? Space::X : Space::D;
      if (degree > (b.space == Space::X ? dim() : dim() + 1)) fail(deg, "degree " + deg.text + " exceeds the dimension");
      expect('=');
      b.form = form_expr(degree, b.space);
    }
    expect(';');
    doc_.bindings.push_back(std::move(b));
  }

  // --- typed expressions ---------------------------------------------------

  ScalarExpr scalar_expr() {
    const Token& start = peek();
    Typed v = sum({});
    if (v.kind != Typed::Kind::Scalar) fail(start, "expected a scalar expression");
    return guarded(start, [&] { return cas::normalize(v.s); });
  }

  DiffOp op_expr(const Token& start, bool field) {
    Typed v = sum({false, Space::X, true});
    DiffOp op = v.kind == Typed::Kind::Op ? v.o : DiffOp::multiplication(dim(), v.s);
    if (v.kind == Typed::Kind::Form) fail(start, "expected an operator expression");
    if (field && !op.is_vector_field()) fail(start, "field has a nonzero scalar part");
    return op;
  }

  SkewForm form_expr(int degree, Space space) {
    const Token& start = peek();
    Typed v = sum({true, space, false});
    if (v.kind == Typed::Kind::Scalar) {
      if (degree != 0 && !guarded(start, [&] { return cas::normalize(v.s); }).is_zero_literal()) {
        fail(start, "degree mismatch: declared " + std::to_string(degree) + ", expression has degree 0");
      }
      return degree == 0 ? SkewForm::scalar(dim(), v.s) : SkewForm(dim(), degree);
    }
    if (v.f.degree() != degree && !v.f.components().empty()) {
      fail(start, "degree mismatch: declared " + std::to_string(degree) + ", expression has degree " +
                      std::to_string(v.f.degree()));
    }
    return v.f.degree() == degree ? v.f : SkewForm(dim(), degree);
  }

  Typed as_form(const Typed& v) const {
    if (v.kind == Typed::Kind::Form) return v;
    Typed out;
    out.kind = Typed::Kind::Form;
    out.f = SkewForm::scalar(dim(), v.s);
    return out;
  }
  Typed as_op(const Typed& v) const {
    if (v.kind == Typed::Kind::Op) return v;
    Typed out;
    out.kind = Typed::Kind::Op;
    out.o = DiffOp::multiplication(dim(), v.s);
    return out;
  }

  Typed add(const Token& at, Typed a, Typed b, bool minus) {
    if (a.kind == Typed::Kind::Scalar && b.kind == Typed::Kind::Scalar) {
      a.s = minus ? a.s - b.s : a.s + b.s;
      return a;
    }
    if (a.kind == Typed::Kind::Op || b.kind == Typed::Kind::Op) {
      if (a.kind == Typed::Kind::Form || b.kind == Typed::Kind::Form) fail(at, "cannot add a form and an operator");
      Typed r = as_op(a);
      const DiffOp o = as_op(b).o;
      r.o = minus ? r.o - o : r.o + o;
      return r;
    }
    Typed r = as_form(a);
    const SkewForm f = as_form(b).f;
    if (r.f.degree() != f.degree()) {
      fail(at, "degree mismatch: cannot add forms of degree " + std::to_string(r.f.degree()) + " and " +
                   std::to_string(f.degree()));
    }
    r.f = minus ? r.f - f : r.f + f;
    return r;
  }

  Typed scale(const Typed& v, const ScalarExpr& k) {
    Typed r = v;
    if (v.kind == Typed::Kind::Scalar) r.s = k * v.s;
    if (v.kind == Typed::Kind::Form) r.f = k * v.f;
    if (v.kind == Typed::Kind::Op) r.o = k * v.o;
    return r;
  }

  Typed sum(const ExprContext& ctx) {
    Typed v = wedge(ctx);
    while (peek().is('+') || peek().is('-')) {
      const Token& op = next();
      Typed rhs = wedge(ctx);
      v = guarded(op, [&] { return add(op, v, rhs, op.is('-')); });
    }
    return v;
  }

  Typed wedge(const ExprContext& ctx) {
    Typed v = product(ctx);
    while (peek().is('^')) {
      const Token& op = next();
      if (!ctx.forms) fail(op, "'^' needs an integer exponent outside forms");
      Typed rhs = product(ctx);
      if (v.kind == Typed::Kind::Scalar) {
        v = scale(rhs, v.s);
      } else if (rhs.kind == Typed::Kind::Scalar) {
        v = scale(v, rhs.s);
      } else {
        v.f = guarded(op, [&] { return calc::wedge(v.f, rhs.f); });
      }
    }
    return v;
  }

  Typed product(const ExprContext& ctx) {
    Typed v = unary(ctx);
    while (peek().is('*') || peek().is('/')) {
      const Token& op = next();
      Typed rhs = unary(ctx);
      if (op.is('/')) {
        if (rhs.kind != Typed::Kind::Scalar) fail(op, "division by a form or operator");
        v = guarded(op, [&] {
          const ScalarExpr inv = cas::normalize(1 / rhs.s);
          if (v.kind == Typed::Kind::Scalar) {
            Typed r = v;
            r.s = v.s / rhs.s;
            return r;
          }
          return scale(v, inv);
        });
        continue;
      }
      if (v.kind == Typed::Kind::Scalar) {
        v = scale(rhs, v.s);
      } else if (rhs.kind == Typed::Kind::Scalar) {
        v = scale(v, rhs.s);
      } else if (v.kind == Typed::Kind::Form && rhs.kind == Typed::Kind::Form) {
        fail(op, "use '^' to wedge forms");
      } else {
        fail(op, "operators cannot be multiplied");
      }
    }
    return v;
  }

  Typed unary(const ExprContext& ctx) {
    if (peek().is('-')) {
      next();
      return scale(unary(ctx), ScalarExpr(-1));
    }
    if (peek().is('+')) {
      next();
      return unary(ctx);
    }
    return power(ctx);
  }

  // An integer literal, or (-INT), after '^' makes a power; otherwise '^'
  // is left for the wedge.
  std::optional<int> exponent_ahead() const {
    if (!peek().is('^')) return std::nullopt;
    if (peek(1).kind == Tok::Number) return 1;
    if (peek(1).is('(') && peek(2).is('-') && peek(3).kind == Tok::Number && peek(4).is(')')) return -1;
    return std::nullopt;
  }

  Typed power(const ExprContext& ctx) {
    const Token& base_tok = peek();
    Typed v = primary(ctx);
    while (auto sign = exponent_ahead()) {
      next();
      if (*sign < 0) {
        next();
        next();
      }
      const Token& num = next();
      if (*sign < 0) next();
      if (num.text.find_first_not_of("0123456789") != std::string::npos) fail(num, "exponent must be an integer");
      if (v.kind != Typed::Kind::Scalar) fail(base_tok, "only scalars can be raised to a power");
      const int k = *sign * std::stoi(num.text);
      v.s = guarded(num, [&] { return cas::pow(v.s, k); });
    }
    return v;
  }

  Typed primary(const ExprContext& ctx) {
    const Token& t = peek();
    Typed v;
    if (t.kind == Tok::Number) {
      next();
      v.s = ScalarExpr(decimal_value(t.text));
      return v;
    }
    if (t.is('(')) {
      next();
      v = sum(ctx);
      expect(')');
      return v;
    }
    if (t.kind == Tok::Partial) {
      next();
      const auto i = coord(t.text);
      if (!i) fail(t, "unknown coordinate " + t.text);
      if (!ctx.ops) fail(t, "d/d" + t.text + " is only allowed in operators");
      v.kind = Typed::Kind::Op;
      v.o = DiffOp::partial(dim(), *i);
      return v;
    }
    if (t.kind != Tok::Ident) fail(t, "expected an expression before " + describe(t));
    next();
    const std::string& s = t.text;
    if (s == "sin" || s == "cos" || s == "exp") {
      expect('(');
      const Token& arg_tok = peek();
      Typed a = sum(ctx);
      expect(')');
      if (a.kind != Typed::Kind::Scalar) fail(arg_tok, s + " needs a scalar argument");
      v.s = s == "sin" ? cas::sin(a.s) : (s == "cos" ? cas::cos(a.s) : cas::exp(a.s));
      return v;
    }
    if (auto i = coord(s)) {
      v.s = ScalarExpr::variable(*i);
      return v;
    }
    if (s == "u") {
      if (!ctx.forms) fail(t, "u (delta1) is only allowed in forms on D");
      if (ctx.space == Space::X) fail(t, "u (delta1) is not allowed in forms on X");
      v.kind = Typed::Kind::Form;
      v.f = SkewForm::covector(dim(), 0);
      return v;
    }
    if (const Binding* b = find_binding(s)) return from_binding(t, *b, ctx);
    if (s.size() > 1 && s[0] == 'd') {
      const auto i = coord(s.substr(1));
      if (!ctx.forms) fail(t, i ? "covector " + s + " is only allowed in forms" : "unknown identifier " + s);
      if (!i) fail(t, "unknown coordinate " + s.substr(1));
      v.kind = Typed::Kind::Form;
      v.f = SkewForm::covector(dim(), *i + 1);
      return v;
    }
    fail(t, "unknown identifier " + s);
  }

  Typed from_binding(const Token& t, const Binding& b, const ExprContext& ctx) {
    Typed v;
    switch (b.kind) {
      case Binding::Kind::Scalar: v.s = b.scalar; return v;
      case Binding::Kind::Field:
      case Binding::Kind::Op:
        if (!ctx.ops) fail(t, b.name + " is an operator");
        v.kind = Typed::Kind::Op;
        v.o = b.op;
        return v;
      case Binding::Kind::Form:
        if (!ctx.forms) fail(t, b.name + " is a form");
        if (b.space == Space::D && ctx.space == Space::X) fail(t, b.name + " is a form on D");
        v.kind = Typed::Kind::Form;
        v.f = b.form;
        return v;
    }
    return v;
  }

  // --- structures ----------------------------------------------------------

  void structure(StructureKind kind) {
    next();
    const Token& name = expect_ident("a structure name");
    declare_name(name);
    Structure s;
    s.kind = kind;
    s.name = name.text;
    s.loc = loc_of(name);
    const auto specs = keys_of(kind);
    std::vector<std::optional<Entry>> slots(specs.size());
    expect('{');
    while (!peek().is('}')) {
      const Token& key = expect_ident("a key");
      const auto it =
          std::find_if(specs.begin(), specs.end(), [&](const KeySpec& k) { return key.text == k.key; });
      if (it == specs.end()) fail(key, "unknown key " + key.text + " for " + to_string(kind));
      const auto slot = static_cast<std::size_t>(it - specs.begin());
      if (slots[slot]) fail(key, "duplicate key " + key.text);
      expect('=');
      slots[slot] = Entry{key.text, value(it->want), loc_of(key)};
      expect(';');
    }
    next();
    if (peek().is(';')) next();
    for (std::size_t i = 0; i < specs.size(); ++i) {
      if (slots[i]) {
        s.entries.push_back(std::move(*slots[i]));
      } else if (specs[i].required) {
        fail(name, "missing key " + std::string(specs[i].key) + " in " + to_string(kind) + " " + s.name);
      } else {
        s.entries.push_back(Entry{specs[i].key, Value{}, s.loc});
      }
    }
    doc_.structures.push_back(std::move(s));
  }

  Value value(Want want) {
    const Token& t = peek();
    Value v;
    const bool bare = t.kind == Tok::Ident && peek(1).is(';');
    if (want == Want::Contact) {
      if (t.kind != Tok::Ident) fail(t, "expected a contact structure name");
      next();
      const Structure* s = doc_.structure(t.text);
      if (!s) fail(t, "unknown structure " + t.text);
      if (s->kind != StructureKind::Contact) fail(t, t.text + " is not a contact structure");
      v.kind = Value::Kind::Structure;
      v.ref = t.text;
      return v;
    }
    const Binding* ref = bare ? find_binding(t.text) : nullptr;
    switch (want) {
      case Want::Scalar:
      case Want::Constant: {
        v.kind = Value::Kind::Scalar;
        v.scalar = scalar_expr();
        if (want == Want::Constant && !v.scalar.is_constant()) fail(t, "expected a rational constant");
        break;
      }
      case Want::Field: {
        v.kind = Value::Kind::Op;
        v.op = op_expr(t, true);
        break;
      }
      default: {
        const bool on_d = want == Want::FormD1 || want == Want::FormD2;
        const int degree = want == Want::FormX1 || want == Want::FormD1 ? 1 : 2;
        if (ref && ref->kind == Binding::Kind::Form) {
          if (ref->form.degree() != degree) {
            fail(t, "degree mismatch: " + ref->name + " has degree " + std::to_string(ref->form.degree()) +
                        ", expected " + std::to_string(degree));
          }
          if (!on_d && ref->space == Space::D) fail(t, ref->name + " is a form on D, expected a form on X");
        }
        v.kind = Value::Kind::Form;
        v.form = form_expr(degree, on_d ? Space::D : Space::X);
      }
    }
    if (ref) v.ref = ref->name;
    return v;
  }

  // --- check directives ----------------------------------------------------

  void check() {
    next();
    const Token& target = expect_ident("a structure name");
    const Structure* s = doc_.structure(target.text);
    if (!s) fail(target, "unknown structure " + target.text);
    CheckDirective d;
    d.target = target.text;
    d.loc = loc_of(target);
    const bool lrj_like = s->kind == StructureKind::Lrj || s->kind == StructureKind::Lift;
    std::vector<std::string> seen;
    if (peek().is_ident("with")) {
      next();
      do {
        const Token& opt = expect_ident("an option");
        if (std::find(seen.begin(), seen.end(), opt.text) != seen.end() && opt.text != "hamiltonian" &&
            opt.text != "bracket") {
          fail(opt, "duplicate option " + opt.text);
        }
        seen.push_back(opt.text);
        option(opt, d, lrj_like);
      } while (peek().is(',') && (next(), true));
    }
    expect(';');
    doc_.checks.push_back(std::move(d));
  }

  long integer_option(const Token& opt, long min) {
    expect('=');
    const Token& v = peek();
    if (v.kind != Tok::Number || v.text.find_first_not_of("0123456789") != std::string::npos) {
      fail(v, opt.text + " expects an integer");
    }
    next();
    long k = 0;
    const auto [p, ec] = std::from_chars(v.text.data(), v.text.data() + v.text.size(), k);
    if (ec != std::errc() || k < min) fail(v, opt.text + " must be at least " + std::to_string(min));
    return k;
  }

  void option(const Token& opt, CheckDirective& d, bool lrj_like) {
    const std::string& o = opt.text;
    if (o == "samples") {
      d.samples = static_cast<int>(integer_option(opt, 1));
    } else if (o == "instances") {
      d.instances = static_cast<int>(integer_option(opt, 1));
    } else if (o == "seed") {
      d.seed = static_cast<std::uint64_t>(integer_option(opt, 0));
    } else if (o == "tolerance") {
      expect('=');
      const Token& v = peek();
      if (v.kind != Tok::Number) fail(v, "tolerance expects a number");
      next();
      const double t = std::stod(v.text);
      if (!(t > 0)) fail(v, "tolerance must be positive");
      d.tolerance = t;
    } else if (o == "reeb" || o == "classify" || o == "volume" || o == "isos" || o == "exactness" ||
               o == "hamiltonian" || o == "bracket") {
      if (!lrj_like) fail(opt, "option " + o + " needs an lrj or lift structure");
      if (o == "reeb") d.reeb = true;
      if (o == "classify") d.classify = true;
      if (o == "volume") d.volume = true;
      if (o == "isos") d.isos = true;
      if (o == "exactness") d.exactness = true;
      if (o == "hamiltonian") {
        expect('(');
        d.hamiltonian.push_back(scalar_expr());
        expect(')');
      }
      if (o == "bracket") {
        expect('(');
        ScalarExpr f = scalar_expr();
        expect(',');
        ScalarExpr g = scalar_expr();
        expect(')');
        d.brackets.emplace_back(std::move(f), std::move(g));
      }
    } else {
      fail(opt, "unknown option " + o);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Document doc_;
};

}  // namespace

Document parse(std::string_view source) { return Parser(detail::tokenize(source)).run(); }

ScalarExpr parse_scalar(std::string_view text, const Document& doc) {
  return Parser(detail::tokenize(text), doc).lone_scalar();
}

}  // namespace lrj::dsl
