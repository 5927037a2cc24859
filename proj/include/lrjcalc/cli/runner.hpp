#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lrjcalc/cas/zero.hpp"
#include "lrjcalc/dsl/document.hpp"

namespace lrj::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

std::string tool_version();

struct RunConfig {
  std::string input;
  std::optional<std::string> report;
  int samples = chart::kDefaultSamples;
  std::uint64_t seed = 0;
  double tolerance = cas::kDefaultTolerance;
  std::vector<std::string> only;  // glob patterns over "structure:check" or "check"
  bool timing = false;  // report elapsed milliseconds (otherwise null, for reproducible reports)
  bool parallel = true;
};

/// Seed from LRJCALC_SEED when set and numeric, else 0.
std::uint64_t default_seed();

struct CheckRecord {
  std::string structure;
  std::string check;
  std::string reference;
  cas::Verdict verdict;
  double millis = 0.0;
};

/// A computed quantity such as a Reeb operator or bracket value.
struct ResultRecord {
  std::string structure;
  std::string kind;  // reeb, classification, bracket, phi_f, X_f
  std::string label;
  std::string value;
};

struct RunResult {
  chart::Chart chart{"", {"x"}};
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<CheckRecord> checks;
  std::vector<ResultRecord> results;
  std::vector<std::string> notes;

  cas::Grade overall() const;
};

/// Runs every check directive of the document.
RunResult run_document(const dsl::Document& doc, const RunConfig& cfg);

bool matches_filter(const std::vector<std::string>& globs, const std::string& structure, const std::string& check);

nlohmann::ordered_json to_json(const RunResult& r, const RunConfig& cfg);
void print_text(const RunResult& r, std::ostream& out);

/// 0 iff no check Failed.
int exit_code(const RunResult& r);

// Subcommands.  Each returns a process exit status.
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct SelftestConfig {
  std::uint64_t seed = 0;
  int instances = 100;
  bool wrong_wedge_sign = false;
  std::optional<std::string> report;
  bool timing = false;
  bool parallel = true;
};
int cmd_selftest(const SelftestConfig& cfg, std::ostream& out, std::ostream& err);

/// Operand commands work on a named lrj or lift structure, or the first one
/// in the file when `structure` is empty.
struct OperandConfig {
  RunConfig run;
  std::string structure;
};
int cmd_reeb(const OperandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bracket(const OperandConfig& cfg, const std::string& f, const std::string& g, std::ostream& out,
                std::ostream& err);
int cmd_classify(const OperandConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace lrj::cli
