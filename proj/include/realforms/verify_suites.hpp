#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace realforms {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_counterexample;

    bool passed() const { return failures == 0; }
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int max_n = 8;
    int samples = 50;
};

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

/// All invariant suites by name, in canonical (sorted) order.
const std::map<std::string, SuiteFn>& suite_registry();

/// Runs the named suites (all when names is empty); throws invalid_argument
/// for an unknown name.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opts);

}  // namespace realforms
