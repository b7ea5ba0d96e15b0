#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hilfer::cli {

struct CheckResult {
    std::string label;
    double value = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
};

/// power_rule, semigroup, inverse, expansion, ml (in that order).
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws ConfigError for
/// an unknown name.
std::vector<SuiteResult> run_suites(std::string_view name);

SuiteResult power_rule_suite();
SuiteResult semigroup_suite();
SuiteResult inverse_suite();
SuiteResult expansion_suite();
SuiteResult ml_suite();

}  // namespace hilfer::cli
