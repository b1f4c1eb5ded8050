// One line per acceptance criterion. Exit status is nonzero if any criterion
// fails; pass --quick to skip the long transfer-matrix sweeps.
#include <cstring>
#include <iostream>

#include "punct/verify.hpp"

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  int failed = 0;
  punct::run_acceptance(quick, [&](const punct::CriterionResult& r) {
    std::cout << punct::format_result(r) << std::endl;
    failed += r.verdict == punct::Verdict::fail;
  });
  std::cout << failed << " criteria failed" << std::endl;
  return failed ? 1 : 0;
}
