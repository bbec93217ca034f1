// Acceptance suites at the full level. One summary line per criterion goes to
// stdout; findings from the runs (flags, pool sizes, tallies) follow each line.

#include <gtest/gtest.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "grasspi/selftest.hpp"

using grasspi::CriterionResult;
using grasspi::SelftestLevel;

namespace {

std::vector<CriterionResult>& results() {
  static std::vector<CriterionResult> r;
  return r;
}

SelftestLevel level() {
  const char* s = std::getenv("GRASSPI_ACCEPTANCE_LEVEL");
  return s != nullptr && std::string(s) == "quick" ? SelftestLevel::kQuick : SelftestLevel::kFull;
}

std::uint64_t seed() {
  const char* s = std::getenv("GRASSPI_SEED");
  return s != nullptr && *s != '\0' ? std::stoull(s) : 0;
}

class Criterion : public ::testing::TestWithParam<int> {};

TEST_P(Criterion, Passes) {
  const CriterionResult r = grasspi::run_criterion(GetParam(), level(), seed());
  std::cout << grasspi::summary_line(r) << '\n';
  for (const auto& line : r.log) std::cout << "    " << line << '\n';
  std::cout.flush();
  results().push_back(r);
  EXPECT_TRUE(r.passed) << r.failure;
  EXPECT_LE(r.seconds, r.limit_seconds);
}

INSTANTIATE_TEST_SUITE_P(All, Criterion, ::testing::Range(1, 10),
                         [](const ::testing::TestParamInfo<int>& info) { return "C" + std::to_string(info.param); });

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  const int rc = RUN_ALL_TESTS();
  std::cout << "\nsummary\n";
  for (const auto& r : results()) std::cout << grasspi::summary_line(r) << '\n';
  return rc;
}
