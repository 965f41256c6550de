#pragma once

#include <string>
#include <vector>

namespace dehnfill::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // measured values vs thresholds
    double seconds = 0.0;
};

struct Options {
    // Negative control: scales every packing radius by 1.01 inside the
    // packing criterion, which must then fail.
    bool inject_kappa_fault = false;
};

// Runs every acceptance criterion and returns one result per criterion,
// including the overall runtime-budget criterion.
std::vector<CriterionResult> run_all(const Options& opts = {});

// The packing-validity criterion alone (cheap; used for fault-injection tests).
CriterionResult run_packing_criterion(const Options& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace dehnfill::selftest
