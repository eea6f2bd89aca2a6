#pragma once

// The identity suite behind `nbs verify` and the acceptance binary.  Each
// check recomputes a family of identities at fixed tolerances and reports
// the worst deviation it saw.

#include <cstddef>
#include <string>
#include <vector>

namespace nbs {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kCheckCount = 9;

// Runs check `id` (1..kCheckCount).  Library exceptions are caught and
// reported as a failing result.
CheckResult run_check(int id);

// Runs the listed checks in order; an empty list means all of them.
std::vector<CheckResult> run_checks(const std::vector<int>& ids = {});

// "PASS"/"FAIL" line for a result.
std::string format_check(const CheckResult& r);

}  // namespace nbs
