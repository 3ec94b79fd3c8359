#pragma once

#include <string>
#include <vector>

namespace steinhaus {

// Reproducibility suite: every published value the library is expected to
// reproduce, run end to end.  The fast suite runs in seconds to a few
// minutes; the full suite adds the large prime kernels and the size-6
// mod-21 exhaustive search.

enum class Suite { kFast, kFull };

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool informational = false;
  std::string detail;
  double seconds = 0;
};

std::vector<CheckResult> run_checks(Suite suite);
CheckResult run_check(int id, Suite suite);

}  // namespace steinhaus
