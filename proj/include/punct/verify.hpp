#pragma once

#include <functional>
#include <string>
#include <vector>

namespace punct {

enum class Verdict { pass, fail, skipped };

struct CriterionResult {
  int id = 0;
  std::string name;
  Verdict verdict = Verdict::fail;
  std::string detail;
  double seconds = 0;
};

// Runs the twelve acceptance criteria in order. quick skips the three that
// need long transfer-matrix sweeps (2, 6, 7). on_result is called as each
// criterion finishes.
std::vector<CriterionResult> run_acceptance(bool quick,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace punct
