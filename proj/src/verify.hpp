#pragma once

// Self-contained invariant suite behind `chemoflow verify`: one named check
// per module invariant, each reporting pass/fail plus the measured quantity.

#include <string>
#include <vector>

namespace chemoflow {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;  // the measured quantity the check gates on
    std::string detail;
};

// quick shrinks the Monte Carlo sample counts; the gates are unchanged.
std::vector<CheckResult> run_verify_suite(bool quick);

}  // namespace chemoflow
