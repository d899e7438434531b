#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbs::regression {

struct Check {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double runtime_seconds = 0.0;
    std::vector<Check> checks;
};

// Runs one numbered criterion (1..8) of the built-in regression table at
// the pinned reference parameters. tol_scale multiplies every tolerance
// (used by the harness self-test: a x0.01 scale must produce detectable
// failures).
CriterionResult run_criterion(int id, double tol_scale = 1.0);

// All eight criteria in order.
std::vector<CriterionResult> regression_suite(double tol_scale = 1.0);

// One line per criterion plus a per-check breakdown; returns the number of
// failed criteria. Output is deterministic, so repeated runs are
// byte-identical.
int print_report(std::ostream& os, const std::vector<CriterionResult>& results);

} // namespace qbs::regression
