// The acceptance checks behind `npo selftest` and the ctest acceptance
// binary. Every check pins its expected value and tolerance in code.

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace npo::selftest {

enum class Status { PASS, FAIL, EXPECTED_DIVERGENT };

struct CheckResult {
    std::string name;
    double measured;
    double expected;
    double tolerance;
    Status status;
    std::string note;
};

struct Options {
    bool naive_composition = false;
    std::uint64_t seed = 20260823;
    // impossible tolerance override for regression-detection demos; NaN = off
    double tol_override = std::numeric_limits<double>::quiet_NaN();
};

std::vector<CheckResult> run_all(const Options& options = {});

// One line per check: [PASS|FAIL|EXPECTED-DIVERGENT] name measured expected tol.
std::string format_report(const std::vector<CheckResult>& results);

// true iff no check has Status::FAIL
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace npo::selftest
