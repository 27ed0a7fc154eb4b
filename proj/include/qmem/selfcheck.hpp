#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmem {

struct SelfcheckOptions {
  /// Include the Lamb-shift term in the master-equation oracle.
  bool lamb_shift = true;
  /// Test hook: multiplies G(t) before the CPTP suite builds Kraus pairs.
  /// Anything above 1 must make that suite fail.
  double envelope_gain = 1.0;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every invariant suite; deterministic (fixed seeds).
std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& opts = {});

/// One "PASS name: detail" / "FAIL name: detail" line per suite. Returns true
/// iff all passed.
bool print_selfcheck(std::ostream& os, const std::vector<SuiteResult>& results);

}  // namespace qmem
