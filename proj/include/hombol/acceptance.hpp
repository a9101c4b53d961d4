#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hombol {

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass;
    std::string detail;  // empty when there is nothing to add
};

/// The full regression over the published tables and closure
/// properties. Every check is exact; there are no tolerances.
std::vector<CriterionResult> run_paper_regression();

/// Render one line per criterion plus a summary; returns the process
/// exit code (0 iff everything passed).
int print_regression(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace hombol
