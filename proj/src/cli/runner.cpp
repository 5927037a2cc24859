#include "lrjcalc/cli/runner.hpp"

#include <fnmatch.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lrjcalc/calculus/cartan.hpp"
#include "lrjcalc/calculus/compare.hpp"
#include "lrjcalc/calculus/suites.hpp"
#include "lrjcalc/cas/normalize.hpp"
#include "lrjcalc/dsl/parser.hpp"
#include "lrjcalc/errors.hpp"
#include "lrjcalc/structures/structures.hpp"

#ifndef LRJCALC_VERSION
#define LRJCALC_VERSION "0.0.0"
#endif

namespace lrj::cli {

using cas::Grade;
using structures::Context;
using structures::VerificationReport;

std::string tool_version() { return LRJCALC_VERSION; }

std::uint64_t default_seed() {
  const char* env = std::getenv("LRJCALC_SEED");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  return *end == '\0' ? v : 0;
}

Grade RunResult::overall() const {
  Grade g = Grade::Exact;
  for (const auto& c : checks) g = cas::weakest(g, c.verdict.grade);
  return g;
}

bool matches_filter(const std::vector<std::string>& globs, const std::string& structure, const std::string& check) {
  if (globs.empty()) return true;
  const std::string full = structure + ":" + check;
  for (const auto& g : globs) {
    if (fnmatch(g.c_str(), check.c_str(), 0) == 0 || fnmatch(g.c_str(), full.c_str(), 0) == 0) return true;
  }
  return false;
}

int exit_code(const RunResult& r) { return r.overall() == Grade::Failed ? kExitFailed : kExitOk; }

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string grade_name(Grade g) { return lower(cas::to_string(g)); }

/// Everything needed to run the operand options of one lrj-like structure.
struct LrjTarget {
  structures::LrjData data;
  std::optional<structures::LiftedContact> lift;
};

LrjTarget lrj_target(const dsl::Document& doc, const dsl::Structure& s, const Context& ctx, int instances) {
  if (s.kind == dsl::StructureKind::Lrj) return {dsl::lrj_data(s), std::nullopt};
  const dsl::Structure* base = doc.structure(s.at("contact").ref);
  const auto cd = dsl::contact_data(*base);
  auto lc = structures::lift_contact(cd, s.at("c").scalar.value(), s.at("g").scalar, ctx, instances);
  return {lc.lrj(), std::move(lc)};
}

Context context_for(const dsl::Document& doc, const dsl::CheckDirective* d, const RunConfig& cfg) {
  chart::SamplePlan plan;
  plan.count = d && d->samples ? *d->samples : cfg.samples;
  plan.seed = d && d->seed ? *d->seed : cfg.seed;
  const double tol = d && d->tolerance ? *d->tolerance : cfg.tolerance;
  return Context::make(doc.chart, plan, tol, cfg.parallel);
}

class DirectiveRun {
 public:
  DirectiveRun(const dsl::Document& doc, const dsl::CheckDirective& d, const RunConfig& cfg, RunResult& out)
      : doc_(doc), d_(d), cfg_(cfg), out_(out), ctx_(context_for(doc, &d, cfg)) {}

  void run() {
    const dsl::Structure& s = *doc_.structure(d_.target);
    const auto& coords = doc_.chart.coords();
    switch (s.kind) {
      case dsl::StructureKind::Lcs: take(structures::check_lcs(dsl::lcs_data(s), ctx_)); return;
      case dsl::StructureKind::Contact: take(structures::contact_data_check(dsl::contact_data(s), ctx_)); return;
      case dsl::StructureKind::Lrj:
      case dsl::StructureKind::Lift: break;
    }
    const LrjTarget t = lrj_target(doc_, s, ctx_, d_.instances.value_or(20));
    if (t.lift) {
      take(t.lift->report);
      if (!t.lift->admissible) return;
    } else {
      take(structures::check_lrj(t.data, ctx_));
    }
    const bool need_h = d_.reeb || d_.isos || !d_.hamiltonian.empty() || !d_.brackets.empty();
    std::optional<calc::DiffOp> H;
    if (need_h) H = reeb_check(t.data);
    if (d_.volume) take(structures::volume_check(t.data, ctx_));
    if (d_.exactness) take(structures::check_exactness_identity(t.data, ctx_));
    if (d_.classify) classify(t.data);
    if (d_.isos) {
      if (H) {
        take(structures::check_module_isos(t.data.omega, *H, ctx_, d_.instances.value_or(5)));
      } else {
        missing_reeb("isos.scalar_free_solution");
      }
    }
    for (const auto& f : d_.hamiltonian) {
      const std::string tag = "[" + cas::to_string(f, coords) + "]";
      if (!H) {
        missing_reeb("hamiltonian" + tag);
        continue;
      }
      try {
        const auto hp = structures::hamiltonian_ops(f, t.data, *H, ctx_);
        take(hp.report, tag);
        result("phi_f", "phi" + tag, calc::to_string(hp.phi_f, coords));
        result("X_f", "X" + tag, calc::to_string(hp.X_f, coords));
      } catch (const Error& e) {
        record("hamiltonian" + tag, "i_phi omega = delta_alpha f", structures::structural_failure(e.what()));
      }
    }
    for (const auto& [f, g] : d_.brackets) {
      const std::string pair = cas::to_string(f, coords) + ", " + cas::to_string(g, coords);
      if (!H) {
        missing_reeb("bracket.alternative_form[" + pair + "]");
        continue;
      }
      try {
        const auto b = structures::jacobi_bracket(f, g, t.data, *H, ctx_);
        record("bracket.alternative_form[" + pair + "]",
               "-omega(phi_f, phi_g) = -omega(X_f, X_g) - f H_alpha(g) + g H_alpha(f)", b.alternative_form);
        result("bracket", "{" + pair + "}", cas::to_string(b.value, coords));
      } catch (const Error& e) {
        record("bracket.alternative_form[" + pair + "]", "-omega(phi_f, phi_g)", structures::structural_failure(e.what()));
      }
    }
  }

 private:
  std::optional<calc::DiffOp> reeb_check(const structures::LrjData& d) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      calc::DiffOp H = structures::reeb(d.omega, ctx_);
      cas::Verdict v = calc::compare_forms(calc::interior(H, d.omega), -SkewForm::covector(ctx_.dim(), 0), ctx_.zero,
                                           ctx_.coords());
      record("reeb.solve", "i_H omega = -delta1", v, since(t0));
      result("reeb", "H", calc::to_string(H, ctx_.coords()));
      return H;
    } catch (const DegenerateError& e) {
      record("reeb.solve", "i_H omega = -delta1",
             structures::structural_failure(std::string(e.what()) + " (witness " + e.witness() + ")"), since(t0));
    } catch (const Error& e) {
      record("reeb.solve", "i_H omega = -delta1", structures::structural_failure(e.what()), since(t0));
    }
    return std::nullopt;
  }

  void classify(const structures::LrjData& d) {
    try {
      const auto c = structures::classify(d, ctx_);
      take(c.report);
      result("classification", "kind", structures::to_string(c.kind));
    } catch (const Error& e) {
      record("classify.precondition", "alpha(1) constant", structures::structural_failure(e.what()));
    }
  }

  void missing_reeb(const std::string& name) {
    record(name, "needs the Reeb operator", structures::structural_failure("no Reeb operator: reeb.solve failed"));
  }

  static double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }

  void take(const VerificationReport& rep, const std::string& suffix = "") {
    for (const auto& c : rep.checks) record(c.name + suffix, c.reference, c.verdict, c.millis);
    for (const auto& n : rep.notes) out_.notes.push_back(d_.target + ": " + n);
  }

  void record(const std::string& name, const std::string& ref, const cas::Verdict& v, double millis = 0.0) {
    if (!matches_filter(cfg_.only, d_.target, name)) return;
    out_.checks.push_back({d_.target, name, ref, v, millis});
  }

  void result(const std::string& kind, const std::string& label, const std::string& value) {
    out_.results.push_back({d_.target, kind, label, value});
  }

  using SkewForm = calc::SkewForm;

  const dsl::Document& doc_;
  const dsl::CheckDirective& d_;
  const RunConfig& cfg_;
  RunResult& out_;
  Context ctx_;
};

nlohmann::ordered_json check_json(const CheckRecord& c, const std::vector<std::string>& coords, bool timing) {
  nlohmann::ordered_json j;
  j["structure"] = c.structure;
  j["check"] = c.check;
  j["paper_ref"] = c.reference;
  j["grade"] = grade_name(c.verdict.grade);
  j["samples"] = c.verdict.samples;
  if (!c.verdict.detail.empty()) j["detail"] = c.verdict.detail;
  if (c.verdict.grade == Grade::Failed || c.verdict.grade == Grade::Indeterminate) {
    nlohmann::ordered_json w;
    w["point"] = nullptr;
    w["value"] = nullptr;
    if (!c.verdict.point.empty()) {
      nlohmann::ordered_json p;
      for (std::size_t i = 0; i < c.verdict.point.size(); ++i) {
        p[i < coords.size() ? coords[i] : "x" + std::to_string(i)] = c.verdict.point[i];
      }
      w["point"] = p;
      w["value"] = c.verdict.value;
    }
    w["detail"] = c.verdict.detail;
    j["witness"] = w;
  }
  j["millis"] = timing ? nlohmann::ordered_json(c.millis) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json chart_json(const chart::Chart& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name();
  j["coordinates"] = c.coords();
  nlohmann::ordered_json box = nlohmann::ordered_json::array();
  for (const auto& iv : c.domain()) box.push_back({iv.lo, iv.hi});
  j["domain"] = box;
  return j;
}

bool write_report(const nlohmann::ordered_json& j, const std::optional<std::string>& path, std::ostream& err) {
  if (!path) return true;
  std::ofstream f(*path);
  if (!f) {
    err << "error: cannot write report " << *path << "\n";
    return false;
  }
  f << j.dump(2) << "\n";
  return true;
}

std::optional<dsl::Document> load(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return dsl::parse(ss.str());
  } catch (const dsl::ParseError& e) {
    err << path << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
    return std::nullopt;
  } catch (const std::exception& e) {
    err << path << ": error: " << e.what() << "\n";
    return std::nullopt;
  }
}

}  // namespace

RunResult run_document(const dsl::Document& doc, const RunConfig& cfg) {
  RunResult r;
  r.chart = doc.chart;
  r.samples = cfg.samples;
  r.seed = cfg.seed;
  r.tolerance = cfg.tolerance;
  for (const auto& d : doc.checks) DirectiveRun(doc, d, cfg, r).run();
  if (doc.checks.empty()) r.notes.emplace_back("document has no check directives");
  return r;
}

nlohmann::ordered_json to_json(const RunResult& r, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["tool"] = "lrjcalc";
  j["version"] = tool_version();
  j["input"] = cfg.input;
  j["chart"] = chart_json(r.chart);
  j["config"] = {{"samples", r.samples}, {"seed", r.seed}, {"tolerance", r.tolerance}};
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c, r.chart.coords(), cfg.timing));
  j["checks"] = checks;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& x : r.results) {
    results.push_back({{"structure", x.structure}, {"kind", x.kind}, {"label", x.label}, {"value", x.value}});
  }
  j["results"] = results;
  j["notes"] = r.notes;
  j["overall"] = grade_name(r.overall());
  return j;
}

namespace {

std::string clipped(const std::string& s) {
  constexpr std::size_t kMax = 200;
  return s.size() <= kMax ? s : s.substr(0, kMax) + " ... (full text in --report)";
}

}  // namespace

void print_text(const RunResult& r, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.structure.size() + 1 + c.check.size());
  for (const auto& c : r.checks) {
    const std::string name = c.structure + ":" + c.check;
    const std::string g = grade_name(c.verdict.grade);
    out << g << std::string(15 - g.size(), ' ') << name;
    if (!c.verdict.passed() && !c.verdict.detail.empty()) {
      out << std::string(width - name.size() + 2, ' ') << clipped(c.verdict.detail);
    }
    out << "\n";
  }
  for (const auto& x : r.results) {
    if (x.kind == "reeb") {
      out << x.structure << ": H = " << x.value << "\n";
    } else if (x.kind == "bracket") {
      out << x.structure << ": " << x.label << " = " << x.value << "\n";
    } else if (x.kind == "classification") {
      out << x.structure << ": " << x.value << "\n";
    } else {
      out << x.structure << ": " << x.label << " = " << x.value << "\n";
    }
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "overall: " << grade_name(r.overall()) << "\n";
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto doc = load(cfg.input, err);
  if (!doc) return kExitInput;
  const RunResult r = run_document(*doc, cfg);
  print_text(r, out);
  if (!write_report(to_json(r, cfg), cfg.report, err)) return kExitInput;
  return exit_code(r);
}

int cmd_selftest(const SelftestConfig& cfg, std::ostream& out, std::ostream& err) {
  calc::debug::set_wrong_wedge_sign(cfg.wrong_wedge_sign);
  calc::SuiteOptions opts;
  opts.instances = cfg.instances;
  opts.seed = cfg.seed;
  opts.parallel = cfg.parallel;
  RunResult r;
  r.chart = calc::standard_r3();
  r.seed = cfg.seed;
  r.samples = cfg.instances;
  for (const auto& chart : {calc::standard_r3(), calc::standard_r5()}) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& suite : {calc::cartan_suite(chart, opts), calc::algebra_suite(chart, opts),
                              calc::operator_suite(chart, opts), calc::ce_suite(chart, opts)}) {
      for (const auto& id : suite.identities) {
        cas::Verdict v = id.verdict;
        if (!v.passed() && !id.inputs.empty()) v.detail += "; inputs: " + id.inputs;
        r.checks.push_back({chart.name() + "/" + suite.suite, id.identity, id.formula, v, 0.0});
      }
    }
    if (cfg.timing) {
      r.notes.push_back(chart.name() + ": " +
                        std::to_string(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                                           .count()) +
                        " ms");
    }
  }
  calc::debug::set_wrong_wedge_sign(false);
  print_text(r, out);
  RunConfig rc;
  rc.input = "selftest";
  rc.samples = chart::kDefaultSamples;
  rc.seed = cfg.seed;
  r.samples = chart::kDefaultSamples;
  r.tolerance = cas::kDefaultTolerance;
  if (!write_report(to_json(r, rc), cfg.report, err)) return kExitInput;
  return exit_code(r);
}

namespace {

const dsl::Structure* pick_structure(const dsl::Document& doc, const std::string& name, std::ostream& err) {
  for (const auto& s : doc.structures) {
    const bool lrj_like = s.kind == dsl::StructureKind::Lrj || s.kind == dsl::StructureKind::Lift;
    if (name.empty() ? lrj_like : s.name == name) {
      if (!lrj_like) {
        err << "error: " << s.name << " is not an lrj or lift structure\n";
        return nullptr;
      }
      return &s;
    }
  }
  err << "error: " << (name.empty() ? "no lrj or lift structure in the file" : "unknown structure " + name) << "\n";
  return nullptr;
}

template <class Body>
int with_target(const OperandConfig& cfg, std::ostream& err, Body&& body) {
  const auto doc = load(cfg.run.input, err);
  if (!doc) return kExitInput;
  const dsl::Structure* s = pick_structure(*doc, cfg.structure, err);
  if (!s) return kExitInput;
  const Context ctx = context_for(*doc, nullptr, cfg.run);
  try {
    const LrjTarget t = lrj_target(*doc, *s, ctx, 20);
    if (t.lift && !t.lift->admissible) {
      err << "error: " << s->name << ": the lift is rejected (lift.admissible failed)\n";
      return kExitFailed;
    }
    return body(*doc, t.data, ctx);
  } catch (const DegenerateError& e) {
    err << "error: degenerate: " << e.what() << " (witness " << e.witness() << ")\n";
  } catch (const dsl::ParseError& e) {
    err << "error: " << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitFailed;
}

}  // namespace

int cmd_reeb(const OperandConfig& cfg, std::ostream& out, std::ostream& err) {
  return with_target(cfg, err, [&](const dsl::Document&, const structures::LrjData& d, const Context& ctx) {
    out << "H = " << calc::to_string(structures::reeb(d.omega, ctx), ctx.coords()) << "\n";
    return kExitOk;
  });
}

int cmd_bracket(const OperandConfig& cfg, const std::string& f, const std::string& g, std::ostream& out,
                std::ostream& err) {
  return with_target(cfg, err, [&](const dsl::Document& doc, const structures::LrjData& d, const Context& ctx) {
    const cas::ScalarExpr fe = dsl::parse_scalar(f, doc);
    const cas::ScalarExpr ge = dsl::parse_scalar(g, doc);
    const auto H = structures::reeb(d.omega, ctx);
    out << cas::to_string(structures::jacobi_bracket(fe, ge, d, H, ctx).value, ctx.coords()) << "\n";
    return kExitOk;
  });
}

int cmd_classify(const OperandConfig& cfg, std::ostream& out, std::ostream& err) {
  return with_target(cfg, err, [&](const dsl::Document&, const structures::LrjData& d, const Context& ctx) {
    out << structures::to_string(structures::classify(d, ctx).kind) << "\n";
    return kExitOk;
  });
}

}  // namespace lrj::cli
