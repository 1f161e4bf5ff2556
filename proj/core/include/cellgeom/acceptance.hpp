#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace cellgeom::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    /// Criteria to run; empty runs 1..11.
    std::set<int> only;
    std::uint64_t seed = 1;
    /// Monte Carlo trials on the 60 x 60 torus (3600 users each).
    int trials = 3;
};

int criterion_count();

std::vector<CriterionResult> run(const Options& options = {});

/// One `PASS|FAIL <id> <title>: <detail>` line per result; returns the failure count.
int report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace cellgeom::acceptance
