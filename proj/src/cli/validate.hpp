#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringdecay::cli {

struct CheckResult {
    std::string name;
    std::string criterion; ///< e.g. "max |Δ| < 1e-8"
    double measured = 0.0;
    bool passed = false;
    std::string worst_case; ///< tuple where the measured value was attained
};

/// Oracle equivalence, sum rules, symmetry, Dicke limit, plateaus and the
/// subradiant slope over the standard grid.
std::vector<CheckResult> run_validation();

/// One line per check; returns true iff every check passed.
bool write_validation_report(const std::vector<CheckResult>& checks, std::ostream& out);

} // namespace ringdecay::cli
