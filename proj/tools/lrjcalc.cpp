#include <iostream>

#include "CLI11.hpp"
#include "lrjcalc/cli/runner.hpp"

namespace {

void add_run_options(CLI::App& cmd, lrj::cli::RunConfig& cfg, bool with_report) {
  cmd.add_option("file", cfg.input, ".geo input")->required();
  cmd.add_option("--samples", cfg.samples, "sample points per zero test")->check(CLI::PositiveNumber);
  cmd.add_option("--seed", cfg.seed, "sampling seed (default: LRJCALC_SEED, else 0)");
  cmd.add_option("--tolerance", cfg.tolerance, "relative zero-test tolerance")->check(CLI::PositiveNumber);
  cmd.add_flag("--serial", [&cfg](std::int64_t) { cfg.parallel = false; }, "run checks on one thread");
  if (with_report) {
    cmd.add_option("--report", cfg.report, "write a JSON report");
    cmd.add_option("--only", cfg.only, "check-name glob (repeatable)");
    cmd.add_flag("--timing", cfg.timing, "include elapsed milliseconds in the report");
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lrj::cli;
  CLI::App app{"Symbolic checks of Jacobi and contact structures on first-order differential operators"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  RunConfig check_cfg;
  check_cfg.seed = default_seed();
  auto* check = app.add_subcommand("check", "run the check directives of a .geo file");
  add_run_options(*check, check_cfg, true);

  SelftestConfig self_cfg;
  self_cfg.seed = default_seed();
  auto* self = app.add_subcommand("selftest", "run the randomized Cartan-calculus identity suites");
  self->add_option("--seed", self_cfg.seed, "instance seed");
  self->add_option("--instances", self_cfg.instances, "instances per identity")->check(CLI::PositiveNumber);
  self->add_option("--report", self_cfg.report, "write a JSON report");
  self->add_flag("--timing", self_cfg.timing, "print per-chart elapsed time");
  self->add_flag("--serial", [&self_cfg](std::int64_t) { self_cfg.parallel = false; }, "run on one thread");
  self->add_flag("--debug-wrong-wedge-sign", self_cfg.wrong_wedge_sign, "inject a sign error into the wedge product");

  OperandConfig op_cfg;
  op_cfg.run.seed = default_seed();
  std::string f, g;
  auto* reeb = app.add_subcommand("reeb", "print the Reeb operator H with i_H omega = -delta1");
  auto* bracket = app.add_subcommand("bracket", "print the Jacobi bracket {f, g}");
  auto* classify = app.add_subcommand("classify", "print exact or nonexact");
  for (auto* cmd : {reeb, bracket, classify}) {
    add_run_options(*cmd, op_cfg.run, false);
    cmd->add_option("--structure", op_cfg.structure, "lrj or lift structure (default: the first)");
  }
  bracket->add_option("f", f, "first function")->required();
  bracket->add_option("g", g, "second function")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*check) return cmd_check(check_cfg, std::cout, std::cerr);
  if (*self) return cmd_selftest(self_cfg, std::cout, std::cerr);
  if (*reeb) return cmd_reeb(op_cfg, std::cout, std::cerr);
  if (*bracket) return cmd_bracket(op_cfg, f, g, std::cout, std::cerr);
  return cmd_classify(op_cfg, std::cout, std::cerr);
}
