#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lrjcalc/cas/zero.hpp"
#include "lrjcalc/chart/chart.hpp"

namespace lrj::structures {

/// Chart, zero-test options and scheduling shared by all checks of a run.
struct Context {
  chart::Chart chart;
  cas::ZeroTest zero;
  bool parallel = true;

  static Context make(const chart::Chart& c, const chart::SamplePlan& plan = {},
                      double tol = cas::kDefaultTolerance, bool parallel = true) {
    return {c, cas::ZeroTest::on(c, plan, tol), parallel};
  }
  int dim() const { return chart.dim(); }
  const std::vector<std::string>& coords() const { return chart.coords(); }
};

struct Check {
  std::string name;
  std::string reference;  // the identity being checked, as a formula
  cas::Verdict verdict;
  double millis = 0.0;
};

/// Ordered list of graded checks.  The overall grade is the weakest member.
struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  cas::Grade overall() const;
  bool passed() const { return overall() == cas::Grade::Exact || overall() == cas::Grade::Probabilistic; }
  const Check* find(std::string_view name) const;
  void append(const VerificationReport& other);
  void add(std::string name, std::string reference, cas::Verdict v, double millis = 0.0);
};

/// Failed verdict carrying an explanation and no sample point.
cas::Verdict structural_failure(std::string detail);

/// Runs independent checks, concurrently when ctx.parallel is set, and
/// appends them to the report in declaration order.
class CheckRunner {
 public:
  using Fn = std::function<cas::Verdict()>;
  void add(std::string name, std::string reference, Fn fn);
  void run_into(VerificationReport& rep, const Context& ctx);

 private:
  struct Pending {
    std::string name;
    std::string reference;
    Fn fn;
  };
  std::vector<Pending> pending_;
};

}  // namespace lrj::structures
