#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "lrjcalc/cas/normalize.hpp"
#include "lrjcalc/calculus/random.hpp"
#include "lrjcalc/dsl/parser.hpp"

using namespace lrj;
using namespace lrj::dsl;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> geo_files(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".geo") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const fs::path kCorpus = LRJCALC_CORPUS_DIR;

ParseError parse_error(const std::string& src) {
  try {
    parse(src);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << src);
  return ParseError("", 0, 0, "");
}

}  // namespace

TEST_CASE("chart and an X-form") {
  const Document d = parse("chart R3 (x,y,z); form beta : 1 on X = dz - y*dx;");
  CHECK(d.chart.name() == "R3");
  CHECK(d.chart.dim() == 3);
  REQUIRE(d.bindings.size() == 1);
  const Binding& b = d.bindings[0];
  CHECK(b.kind == Binding::Kind::Form);
  CHECK(b.space == Space::X);
  CHECK(calc::to_string(b.form, d.chart.coords()) == "-y*dx + dz");
}

TEST_CASE("u is delta1 on D") {
  const Document d = parse("chart R3 (x,y,z); form a : 1 on D = -1*u;");
  CHECK(d.bindings[0].form == -SkewForm::covector(3, 0));
  const calc::AlphaForm a(d.bindings[0].form);
  CHECK(cas::structurally_equal(a.unit_value(), ScalarExpr(-1)));
}

TEST_CASE("unknown coordinate is reported at its location") {
  const ParseError e = parse_error("chart R3 (x,y,z);\nform b : 1 on X = dw;");
  CHECK(e.message() == "unknown coordinate w");
  CHECK(e.line() == 2);
  CHECK(e.column() == 19);
  CHECK(e.token() == "dw");
}

TEST_CASE("precedence") {
  const Document d = parse(
      "chart R3 (x,y,z);\n"
      "form a : 2 on X = x*dx^dy;\n"
      "form b : 2 on X = dx^x*dy;\n"
      "scalar p = -x^2;\n"
      "scalar q = x^(-2)*x^2;\n"
      "scalar r = 2^3 - 1.5e1 + 0.25;\n"
      "form c : 2 on X = (x + y)*dx^dz;\n"
      "form e : 2 on D = u^(dx + dy);\n");
  const auto& coords = d.chart.coords();
  CHECK(calc::to_string(d.bindings[0].form, coords) == "x*dx^dy");
  CHECK(d.bindings[0].form == d.bindings[1].form);
  CHECK(cas::to_string(d.bindings[2].scalar, coords) == "-x^2");
  CHECK(cas::to_string(d.bindings[3].scalar, coords) == "1");
  CHECK(cas::to_string(d.bindings[4].scalar, coords) == "-27/4");
  CHECK(calc::to_string(d.bindings[5].form, coords) == "(x + y)*dx^dz");
  CHECK(calc::to_string(d.bindings[6].form, coords) == "u^dx + u^dy");
}

TEST_CASE("operators and fields") {
  const Document d = parse("chart R3 (x,y,z); op phi = 2 + y*d/dx - d/dz; field E = 1/2*d/dz; op m = x*y;");
  const auto& coords = d.chart.coords();
  CHECK(calc::to_string(d.bindings[0].op, coords) == "2 + y*d/dx - d/dz");
  CHECK(d.bindings[1].op == cas::Rational(1, 2) * DiffOp::partial(3, 2));
  CHECK(d.bindings[2].op == DiffOp::multiplication(3, ScalarExpr::variable(0) * ScalarExpr::variable(1)));
}

TEST_CASE("structures and directives") {
  const Document d = parse(slurp(kCorpus / "contact_r3.geo"));
  REQUIRE(d.structures.size() == 2);
  const Structure& lift = d.structures[1];
  CHECK(lift.kind == StructureKind::Lift);
  CHECK(lift.at("contact").ref == "std");
  CHECK(cas::structurally_equal(lift.at("c").scalar, ScalarExpr(0)));
  const auto cd = contact_data(d.structures[0]);
  CHECK(cd.E == DiffOp::partial(3, 2));
  REQUIRE(d.checks.size() == 2);
  CHECK(d.checks[1].reeb);
  CHECK(d.checks[1].brackets.size() == 2);
  CHECK(d.checks[1].hamiltonian.size() == 1);
}

TEST_CASE("lift defaults g to zero") {
  const Document d = parse(slurp(kCorpus / "contact_r3_nonexact.geo"));
  const Structure& lift = d.structures[1];
  CHECK(lift.at("g").scalar.is_zero_literal());
  CHECK(cas::structurally_equal(lift.at("c").scalar, ScalarExpr(-1)));
}

TEST_CASE("semantic errors") {
  const char* chart = "chart R3 (x,y,z);\n";
  auto msg = [&](const std::string& body) { return parse_error(chart + body).message(); };
  CHECK(msg("form a : 1 on X = u;") == "u (delta1) is not allowed in forms on X");
  CHECK(msg("form a : 2 on X = dx;") == "degree mismatch: declared 2, expression has degree 1");
  CHECK(msg("form a : 1 on X = dx + dx^dy;") == "degree mismatch: cannot add forms of degree 1 and 2");
  CHECK(msg("form a : 2 on X = dx*dy;") == "use '^' to wedge forms");
  CHECK(msg("scalar f = dx;") == "covector dx is only allowed in forms");
  CHECK(msg("scalar x = 1;") == "name x is a coordinate");
  CHECK(msg("scalar dx = 1;") == "name dx collides with the covector of x");
  CHECK(msg("scalar f = 1; scalar f = 2;") == "duplicate name f");
  CHECK(msg("field E = 1 + d/dz;") == "field has a nonzero scalar part");
  CHECK(msg("op p = d/dz*d/dx;") == "operators cannot be multiplied");
  CHECK(msg("scalar f = x/0;").find("zero") != std::string::npos);
  CHECK(msg("lcs a { alpha = dx; }") == "missing key omega in lcs a");
  CHECK(msg("lcs a { alpha = dx; alpha = dy; omega = dx^dy; }") == "duplicate key alpha");
  CHECK(msg("form w : 2 on D = u^dx; lcs a { alpha = 0; omega = w; }") == "w is a form on D, expected a form on X");
  CHECK(msg("lcs a { alpha = 0; omega = dx^dy; } check a with reeb;") == "option reeb needs an lrj or lift structure");
  CHECK(msg("lcs a { alpha = 0; omega = dx^dy; } check a with samples = 0;") == "samples must be at least 1");
  CHECK(msg("lcs a { alpha = 0; omega = dx^dy; } lift l { contact = a; c = 0; }") == "a is not a contact structure");
  CHECK(msg("contact k { beta = dz; Omega = dx^dy; E = d/dz; } lift l { contact = k; c = x; }") ==
        "expected a rational constant");
  CHECK(parse_error("form a : 1 on X = dx;").message() == "expected 'chart' before 'form'");
  CHECK(parse_error("chart A (x); chart B (y);").message() == "only one chart per document");
  CHECK(parse_error("chart A (x, u);").message() == "coordinate name u is reserved");
}

TEST_CASE("columns count code points") {
  const ParseError e = parse_error("# \xc3\xa9\xc3\xa9\nchart R (x); scalar f = \xc3\xa9;");
  CHECK(e.line() == 2);
  CHECK(e.column() == 25);
  CHECK(e.token() == "\xc3\xa9");
}

TEST_CASE("corpus round trip") {
  const auto files = geo_files(kCorpus);
  REQUIRE(files.size() >= 10);
  for (const auto& f : files) {
    CAPTURE(f.filename().string());
    const Document d = parse(slurp(f));
    const std::string text = print(d);
    const Document again = parse(text);
    CHECK(equivalent(d, again));
    CHECK(print(again) == text);
  }
}

TEST_CASE("injected errors report their position") {
  const auto files = geo_files(kCorpus / "errors");
  REQUIRE(files.size() >= 10);
  const std::regex header(R"(# expect: (\d+):(\d+))");
  for (const auto& f : files) {
    CAPTURE(f.filename().string());
    const std::string src = slurp(f);
    std::smatch m;
    REQUIRE(std::regex_search(src, m, header));
    const ParseError e = parse_error(src);
    CAPTURE(e.what());
    CHECK(e.line() == std::stoi(m[1]));
    CHECK(e.column() == std::stoi(m[2]));
  }
}

TEST_CASE("print is canonical") {
  const Document a = parse("chart   R3(x,y,z);form  b:1 on X=dz-y*dx ;  form c : 1 on X = -dx*y   + dz;");
  CHECK(print(a) == "chart R3 (x, y, z);\nform b : 1 on X = -y*dx + dz;\nform c : 1 on X = -y*dx + dz;\n");
  CHECK(print(parse("chart P (p);")) == "chart P (p);\n");
}

TEST_CASE("random forms and operators survive printing") {
  const std::vector<std::string> coords{"x", "y", "z"};
  calc::RandomSource src(3, 99);
  for (int i = 0; i < 40; ++i) {
    const int deg = i % 4;
    const SkewForm f = src.form(deg);
    const DiffOp o = src.diffop();
    const std::string text = "chart R3 (x, y, z);\nform f : " + std::to_string(deg) + " on D = " +
                             calc::to_string(f, coords) + ";\nop o = " + calc::to_string(o, coords) + ";\n";
    CAPTURE(text);
    const Document d = parse(text);
    CHECK(d.bindings[0].form == f);
    CHECK(d.bindings[1].op == o);
  }
}
