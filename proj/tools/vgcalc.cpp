// vgcalc command line: runs a scenario file, optionally comparing emitted
// artifacts against a golden directory.
//
// Exit codes: 0 all assertions and goldens pass; 1 assertion or golden
// failure; 2 parse or validation error.

#include "vgcalc/scenario.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"exact Hodge-Grothendieck polynomial and spectral sequence calculator"};
    app.require_subcommand(1);

    std::string file;
    std::string golden_dir;
    std::string emit = "none";
    bool quiet = false;

    CLI::App* run_cmd = app.add_subcommand("run", "run a .vgl scenario file");
    run_cmd->add_option("file", file, "scenario file")->required();
    run_cmd->add_option("--golden", golden_dir, "directory of golden .txt artifacts");
    run_cmd->add_option("--emit", emit, "print emitted artifacts: poly|table|all")
        ->check(CLI::IsMember({"poly", "table", "all"}));
    run_cmd->add_flag("--quiet", quiet, "only print failures, warnings and the summary");

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string source = vgcalc::read_file(file);
        vgcalc::Scenario sc;
        try {
            sc = vgcalc::parse_scenario(source, file);
        } catch (const vgcalc::ParseError& e) {
            std::cerr << file << ":" << e.what() << "\n";
            return 2;
        }
        const vgcalc::Report report = vgcalc::run(sc);
        std::cout << report.render(quiet);

        if (emit != "none") {
            for (const auto& em : report.emissions) {
                if (emit != "all" && (em.table ? emit != "table" : emit != "poly"))
                    continue;
                std::cout << "== " << (em.table ? "table " : "poly ") << em.name << " ==\n"
                          << em.text;
                if (!em.text.empty() && em.text.back() != '\n') std::cout << "\n";
            }
        }

        if (report.runtime_error) {
            std::cerr << report.error_message << "\n";
            return 2;
        }

        bool golden_fail = false;
        if (!golden_dir.empty()) {
            const vgcalc::GoldenResult g = vgcalc::compare_golden(report, golden_dir);
            for (const auto& l : g.lines) std::cout << l << "\n";
            std::cout << "goldens: " << g.matched << "/" << g.compared << " matched\n";
            if (g.missing_file) return 2;
            golden_fail = g.matched != g.compared;
        }

        if (report.failed_assertion() || golden_fail) return 1;
        return 0;
    } catch (const vgcalc::CalcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
