#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grasspi {

enum class SelftestLevel { kQuick, kFull };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::size_t checks = 0;
  /// Findings worth keeping in the test log (pool sizes, formula flags, ...).
  std::vector<std::string> log;
  /// First failed check, empty on success.
  std::string failure;
};

/// Acceptance criterion 1..9. The quick level runs reduced counts and does
/// not enforce the check-count minimums; both levels enforce the time limit.
CriterionResult run_criterion(int id, SelftestLevel level, std::uint64_t seed);
std::vector<CriterionResult> run_selftest(SelftestLevel level, std::uint64_t seed);

/// "criterion 3 PASS  one-variable identity ... (0.02 s / 60.00 s, 1005 checks)"
std::string summary_line(const CriterionResult& r);

}  // namespace grasspi
