#pragma once

#include <string>
#include <vector>

namespace specdyn {

struct CheckResult {
    std::string name;
    std::string criterion; // "C1".."C12"
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Names of the acceptance checks, in criterion order.
std::vector<std::string> verify_suite_names();

/// Run one named check.
CheckResult run_check(const std::string& name);

/// Run a selection (empty = all), in suite order.
std::vector<CheckResult> run_checks(const std::vector<std::string>& names = {});

} // namespace specdyn
