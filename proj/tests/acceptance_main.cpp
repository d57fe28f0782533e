// Acceptance gate: one pass/fail line per criterion check, all exact.

#include <iostream>

#include "gysin/acceptance.hpp"

int main() {
    auto outcomes = gysin::run_acceptance(&std::cout);
    int failed = 0;
    for (const auto& o : outcomes)
        if (!o.pass) ++failed;
    std::cout << (failed ? "ACCEPTANCE: FAILED" : "ACCEPTANCE: all criteria satisfied") << "\n";
    return failed ? 1 : 0;
}
