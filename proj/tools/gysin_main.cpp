#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gysin/script.hpp"

namespace {

int finish(const gysin::ScriptOutcome& out, const std::string& json_path, bool echo) {
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) {
            std::cerr << "cannot write '" << json_path << "'\n";
            return 2;
        }
        f << out.report.dump(2) << "\n";
    }
    if (echo) std::cout << out.report.dump(2) << "\n";
    if (out.report.contains("error"))
        std::cerr << "error: " << out.report["error"].get<std::string>() << "\n";
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gysin - exact cohomology of blow-ups, projective bundles and double complexes"};
    app.require_subcommand(1);

    std::string script_path, json_path, complex_path;
    int max_r = 8;

    auto* run = app.add_subcommand("run", "execute a construction script");
    run->add_option("file", script_path, "script JSON file")->required();
    run->add_option("--json", json_path, "write the full report to this file");

    auto* self = app.add_subcommand("selftest", "run the built-in verification suite");
    self->add_option("--json", json_path, "write the full report to this file");

    auto* poly = app.add_subcommand("poly-check", "verify the Gysin polynomial identities");
    poly->add_option("--max-r", max_r, "largest codimension to check")->check(CLI::PositiveNumber);

    auto* bca = app.add_subcommand("bc-aeppli", "cohomology tables of a double complex");
    bca->add_option("file", complex_path, "double complex JSON file")->required();
    bca->add_option("--json", json_path, "write the full report to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            gysin::ScriptOutcome out = gysin::run_script_file(script_path);
            return finish(out, json_path, json_path.empty());
        }
        if (self->parsed()) {
            gysin::ScriptOutcome out = gysin::selftest(&std::cout);
            if (!json_path.empty()) return finish(out, json_path, false);
            std::cout << (out.exit_code == 0 ? "all checks passed" : "FAILURES above") << "\n";
            return out.exit_code;
        }
        if (poly->parsed()) {
            bool ok = true;
            gysin::Json rep = gysin::poly_check_report(max_r, ok);
            for (const auto& row : rep["rows"]) {
                std::cout << "r = " << row["r"].get<std::string>()
                          << "  kronecker: " << (row["kronecker"].get<bool>() ? "pass" : "FAIL")
                          << "  weighted-degree: "
                          << (row["weighted_degree"].get<bool>() ? "pass" : "FAIL")
                          << "  P_0 = " << row["P_0"].get<std::string>() << "\n";
            }
            return ok ? 0 : 1;
        }
        if (bca->parsed()) {
            std::ifstream in(complex_path);
            if (!in) {
                std::cerr << "cannot open '" << complex_path << "'\n";
                return 2;
            }
            gysin::Json j = gysin::Json::parse(in, nullptr, false);
            if (j.is_discarded()) {
                std::cerr << "JSON parse error in '" << complex_path << "'\n";
                return 2;
            }
            gysin::DoubleComplex k = gysin::dcomplex_from_json(j);
            gysin::ScriptOutcome out;
            out.report = gysin::bc_aeppli_report(k);
            return finish(out, json_path, json_path.empty());
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
