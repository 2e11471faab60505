#pragma once

// Named verification suites.  Each suite replays one cluster of claims at
// small hard-coded dimension bounds and reports a per-check outcome; a suite
// passes iff no check fails (skips carry their reason and do not fail the
// suite).  Reports are deterministic for fixed parameters: checks are sorted
// by their stable names and randomized checks draw from a seeded generator.

#include <string>
#include <vector>

namespace comical {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail; // counterexample payload on failure, reason on skip
};

struct SuiteParams {
    int max_dim = 0;       // 0 keeps the per-suite default bound
    unsigned seed = 2026;  // seed for randomized property sampling
    long long budget = 0;  // >0 caps search nodes; 0 reads COMICAL_SUITE_BUDGET
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks; // sorted by name
    double wall_seconds = 0.0;

    bool passed() const;
    int count(CheckStatus s) const;
};

// The ten recognized suite names, in canonical order.
const std::vector<std::string>& suite_names();

// Runs one suite; throws ParameterError on an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteParams& params = {});

} // namespace comical
