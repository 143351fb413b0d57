// divtop: build common/prime divisor complexes from an integer set and
// machine-check the relationships between them.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "divtop/commands.hpp"
#include "divtop/errors.hpp"
#include "divtop/fuzz.hpp"
#include "divtop/io.hpp"

namespace {

int emit(const divtop::CommandResult& result, const std::string& out_path = "") {
    if (result.exit_code == 2) {
        std::cerr << "error: " << result.output;
        return 2;
    }
    if (out_path.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write output file: " << out_path << "\n";
            return 2;
        }
        out << result.output;
        if (!out) {
            std::cerr << "error: write failed: " << out_path << "\n";
            return 2;
        }
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"common and prime divisor simplicial complexes"};
    app.require_subcommand(1);

    std::string input;
    bool json = false;
    bool per_component = false;
    bool timing = false;

    auto* analyze = app.add_subcommand(
        "analyze", "full report: complexes, H1, eta checks, P_k");
    analyze->add_option("input", input, "integer list (\"22,33,65\") or file path")
        ->required();
    analyze->add_flag("--json", json, "machine-readable JSON report");
    analyze->add_flag("--per-component", per_component,
                      "analyze each connected component separately");
    analyze->add_flag("--timing", timing, "print wall time to stderr");

    std::string loop_text;
    bool inverse = false;
    auto* map_loop = app.add_subcommand("map-loop", "map a loop through eta_* or its inverse");
    map_loop->add_option("input", input, "integer list or file path")->required();
    map_loop->add_option("--loop", loop_text, "vertex sequence, e.g. \"22,210,33,22\"")
        ->required();
    map_loop->add_flag("--inverse", inverse,
                       "map a D(X) loop back to G(X) (default maps G(X) forward)");
    map_loop->add_flag("--json", json, "machine-readable JSON output");

    divtop::FuzzConfig fuzz_config;
    auto* fuzz = app.add_subcommand("fuzz", "seeded random verification of every property");
    fuzz->add_option("--trials", fuzz_config.trials, "number of random sets")
        ->check(CLI::PositiveNumber);
    fuzz->add_option("--max-elems", fuzz_config.max_elems, "largest set size")
        ->check(CLI::PositiveNumber);
    fuzz->add_option("--max-value", fuzz_config.max_value, "largest element value")
        ->check(CLI::PositiveNumber);
    fuzz->add_option("--seed", fuzz_config.seed, "master seed");
    fuzz->add_option("--jobs", fuzz_config.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    fuzz->add_option("--loops-per-instance", fuzz_config.loops_per_instance,
                     "round-trip loops checked per connected instance per direction");

    std::string which = "g";
    std::string format = "dot";
    std::string out_path;
    auto* export_cmd = app.add_subcommand("export", "emit a complex as DOT or JSON");
    export_cmd->add_option("input", input, "integer list or file path")->required();
    export_cmd->add_option("--complex", which, "g (common) or d (prime)")
        ->check(CLI::IsMember({"g", "d"}));
    export_cmd->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    export_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* pk = app.add_subcommand("pk", "property P_k and the rank bound");
    pk->add_option("input", input, "integer list or file path")->required();
    pk->add_flag("--json", json, "machine-readable JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto started = std::chrono::steady_clock::now();
        int code = 0;
        if (analyze->parsed()) {
            divtop::IntegerSet x = divtop::parse_input(input);
            code = emit(divtop::cmd_analyze(x, {json, per_component}));
        } else if (map_loop->parsed()) {
            divtop::IntegerSet x = divtop::parse_input(input);
            divtop::MapLoopOptions options;
            options.loop = divtop::parse_values(loop_text);
            options.inverse = inverse;
            options.json = json;
            code = emit(divtop::cmd_map_loop(x, options));
        } else if (fuzz->parsed()) {
            divtop::FuzzSummary summary = divtop::run_fuzz(fuzz_config);
            std::cout << summary.render();
            code = summary.all_passed() ? 0 : 1;
        } else if (export_cmd->parsed()) {
            divtop::IntegerSet x = divtop::parse_input(input);
            code = emit(divtop::cmd_export(x,
                                           which == "g" ? divtop::ExportComplex::Common
                                                        : divtop::ExportComplex::Prime,
                                           format == "dot" ? divtop::ExportFormat::Dot
                                                           : divtop::ExportFormat::Json),
                        out_path);
        } else if (pk->parsed()) {
            divtop::IntegerSet x = divtop::parse_input(input);
            code = emit(divtop::cmd_pk(x, json));
        }
        if (timing) {
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started);
            std::cerr << "wall time: " << elapsed.count() << " ms\n";
        }
        return code;
    } catch (const divtop::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // anything else is a bug in a theorem check, not an input problem
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
