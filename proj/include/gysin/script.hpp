#pragma once

// Batch interface: a construction script is a JSON list of named constructor
// invocations followed by queries. References must point at already-defined
// names, so scripts are DAGs by construction.

#include "gysin/blowup.hpp"
#include "gysin/json_io.hpp"

namespace gysin {

struct ScriptOutcome {
    Json report;
    int exit_code = 0;  // 0 all-pass, 1 verification failure, 2 input error
};

ScriptOutcome run_script(const Json& script);
ScriptOutcome run_script_file(const std::string& path);

Json poly_check_report(int max_r, bool& all_pass);
Json bc_aeppli_report(const DoubleComplex& k);

// Runs the built-in acceptance suite; one PASS/FAIL line per check on `live`.
ScriptOutcome selftest(std::ostream* live);

}  // namespace gysin
