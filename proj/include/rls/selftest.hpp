#ifndef RLS_SELFTEST_HPP
#define RLS_SELFTEST_HPP

#include <string>
#include <vector>

// The acceptance suite: one check per criterion, shared by the CLI
// `selftest` subcommand and the standalone acceptance runner.

namespace rls::selftest {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail; // worst residuals / counterexample summary
};

// Criteria 1..11 are self-contained. Criterion 12 additionally runs the CLI
// binary at `cli_path` (skipped with a failure note when empty or missing).
std::vector<CriterionResult> run_all(const std::string& cli_path);

CriterionResult run_criterion(int index, const std::string& cli_path = "");

} // namespace rls::selftest

#endif
