#pragma once

// The built-in verification suite: every check is exact (no tolerances).
// Shared by `gysin selftest` and the acceptance test binary.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gysin/graded.hpp"

namespace gysin {

struct AcceptanceCheck {
    std::string name;
    std::string summary;
    std::function<CheckReport()> run;
};

std::vector<AcceptanceCheck> acceptance_suite();

struct AcceptanceOutcome {
    std::string name;
    std::string summary;
    bool pass = false;
    long long ms = 0;
    std::vector<std::string> violations;
};

// Runs every check; prints one PASS/FAIL line per check to `live` when given.
std::vector<AcceptanceOutcome> run_acceptance(std::ostream* live);

}  // namespace gysin
