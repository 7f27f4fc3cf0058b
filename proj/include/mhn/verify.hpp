#pragma once

#include <string>
#include <vector>

namespace mhn {

/// Outcome of one named verification, with a human-readable detail line
/// (counts, witnesses, or the first disagreement) and wall-clock time.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// The ten exact release-gate checks, run in order. Never throws: any
/// internal failure is reported as a failed CheckResult.
std::vector<CheckResult> run_acceptance();

/// Named property suites over one or more modules:
///   all | oracle-cutjoin | tr | polynomiality | string-dilaton |
///   quantum | airy
/// Unknown names throw Error.
std::vector<CheckResult> run_suite(const std::string& suite);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mhn
