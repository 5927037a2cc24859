#include "lrjcalc/structures/report.hpp"

#include <chrono>

#include "lrjcalc/errors.hpp"
#include "lrjcalc/kernels/batch_eval.hpp"

namespace lrj::structures {

cas::Grade VerificationReport::overall() const {
  cas::Grade g = cas::Grade::Exact;
  for (const auto& c : checks) g = cas::weakest(g, c.verdict.grade);
  return g;
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

void VerificationReport::add(std::string name, std::string reference, cas::Verdict v, double millis) {
  checks.push_back({std::move(name), std::move(reference), std::move(v), millis});
}

cas::Verdict structural_failure(std::string detail) {
  cas::Verdict v;
  v.grade = cas::Grade::Failed;
  v.detail = std::move(detail);
  return v;
}

void CheckRunner::add(std::string name, std::string reference, Fn fn) {
  pending_.push_back({std::move(name), std::move(reference), std::move(fn)});
}

void CheckRunner::run_into(VerificationReport& rep, const Context& ctx) {
  std::vector<Check> done(pending_.size());
  kernels::for_each_index(
      pending_.size(),
      [&](std::size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        cas::Verdict v;
        try {
          v = pending_[i].fn();
        } catch (const DegenerateError& e) {
          v = structural_failure(std::string(e.what()) + " (witness " + e.witness() + ")");
        } catch (const Error& e) {
          v = structural_failure(e.what());
        }
        const auto t1 = std::chrono::steady_clock::now();
        done[i] = {pending_[i].name, pending_[i].reference, std::move(v),
                   std::chrono::duration<double, std::milli>(t1 - t0).count()};
      },
      ctx.parallel);
  for (auto& c : done) rep.checks.push_back(std::move(c));
  pending_.clear();
}

}  // namespace lrj::structures
