#pragma once

// Named invariant suites binding every module to its counting identities.
// Each check reports pass/fail with timing; suite order is canonical and
// independent of any internal parallelism.

#include <optional>
#include <string>
#include <vector>

namespace catsort {

struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;  // mismatch description on failure, summary on pass
};

struct VerifyOptions {
    /// Principal size bound: max n for permutation scans, max k for class
    /// and poset scans. Negative selects each suite's default.
    int max_k = -1;
    /// Raises resource guards (mirrors the CLI --limit flag).
    std::optional<int> limit;
    /// Directory of reference CSVs for the sequences suite.
    std::string data_dir;
};

/// suite is one of: lemmas, posets, bijections, sequences, all.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace catsort
