// arrival: command-line front end for switch-graph simulation, the
// augmentation, switching-flow checks, local search walks and the end-to-end
// certificate solver.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "arrival/commands.hpp"

namespace {

using namespace arrival;
using namespace arrival::cli;

struct Io {
    std::string input = "-";
    std::string output = "-";
    bool json = false;
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Output goes through a buffer so a failed command leaves no partial file.
int emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << std::flush;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitUsage;
    }
    out << text;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Switch graph ARRIVAL toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Io io;
    app.add_option("-i,--input", io.input, "Input graph JSON (default stdin)");
    app.add_option("-o,--output", io.output, "Output path (default stdout)");
    app.add_flag("--json", io.json, "Machine-readable report");

    GeneratorSpec gen_spec;
    std::string gen_model = "uniform";
    auto* gen = app.add_subcommand("gen", "Generate a random switch graph");
    gen->add_option("--n", gen_spec.n, "Vertex count (>= 2)")->required();
    gen->add_option("--seed", gen_spec.seed, "PRNG seed");
    gen->add_option("--model", gen_model, "uniform|layered")
        ->check(CLI::IsMember({"uniform", "layered"}));

    SimulateOptions sim_opts;
    auto* simulate = app.add_subcommand("simulate", "Run the train from the origin");
    simulate->add_option("--budget", sim_opts.budget, "Step cap (default 2n*2^n)");
    simulate->add_flag("--trace", sim_opts.trace, "Print one line per step");

    auto* decide = app.add_subcommand("decide", "Decide whether the run terminates");

    std::string sidecar_path;
    auto* reduce = app.add_subcommand("reduce", "Build the augmented graph H");
    reduce->add_option("--sidecar", sidecar_path,
                       "Write {o_bar, d_bar, x_d} here (default: after H on the output)");

    std::string flow_path;
    auto* verify_flow = app.add_subcommand("verify-flow", "Check a switching flow");
    verify_flow->add_option("--flow", flow_path, "Flow JSON")->required();

    std::string complete_flow_path;
    auto* complete = app.add_subcommand(
        "complete", "Complete a switching flow of (H, o_bar, u) to one ending at d or d_bar");
    complete->add_option("--flow", complete_flow_path, "Flow JSON over H's slots")->required();

    WalkCommandOptions walk_opts;
    std::string walk_mode = "localopt";
    auto* walk = app.add_subcommand("walk", "Local search walk on the reduction instance");
    walk->add_option("--start", walk_opts.start, "\"reset\" or a hex-encoded state");
    walk->add_option("--budget", walk_opts.budget, "Step cap (default 2m*2^m+2)");
    walk->add_flag("--trace", walk_opts.trace, "Print every state");
    walk->add_option("--mode", walk_mode, "localopt|sink-of-path")
        ->check(CLI::IsMember({"localopt", "sink-of-path"}));

    auto* solve = app.add_subcommand("solve", "Produce a termination or non-termination certificate");

    SuiteOptions suite;
    auto* check = app.add_subcommand("check", "Run the seeded property suite");
    check->add_option("--n-max", suite.n_max, "Largest vertex count");
    check->add_option("--count", suite.count, "Number of random instances");
    check->add_option("--seed", suite.seed, "Base seed");
    check->add_option("--jobs", suite.jobs, "Worker threads");
    check->add_option("--cutoffs", suite.completion_cutoffs,
                      "Random completion cutoffs per instance");
    check->add_flag("--mutate", suite.mutate_verify,
                    "Swap parities inside the flow checker (the suite must fail)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ostringstream out, side;
    int code = kExitOk;
    try {
        if (gen->parsed()) {
            gen_spec.model = parse_generator_model(gen_model);
            code = cmd_gen(gen_spec, out, std::cerr);
        } else if (simulate->parsed()) {
            sim_opts.json = io.json;
            code = cmd_simulate(read_all(io.input), sim_opts, out, std::cerr);
        } else if (decide->parsed()) {
            code = cmd_decide(read_all(io.input), io.json, out, std::cerr);
        } else if (reduce->parsed()) {
            code = cmd_reduce(read_all(io.input), out, sidecar_path.empty() ? out : side,
                              std::cerr);
        } else if (verify_flow->parsed()) {
            code = cmd_verify_flow(read_all(io.input), read_all(flow_path), io.json, out,
                                   std::cerr);
        } else if (complete->parsed()) {
            code = cmd_complete(read_all(io.input), read_all(complete_flow_path), io.json, out,
                                std::cerr);
        } else if (walk->parsed()) {
            walk_opts.mode = walk_mode == "localopt" ? WalkMode::LocalOpt : WalkMode::SinkOfPath;
            code = cmd_walk(read_all(io.input), walk_opts, out, std::cerr);
        } else if (solve->parsed()) {
            code = cmd_solve(read_all(io.input), out, std::cerr);
        } else if (check->parsed()) {
            code = cmd_check(suite, io.json, out, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (code == kExitUsage) return code;
    if (const int w = emit(io.output, out.str()); w != kExitOk) return w;
    if (!sidecar_path.empty()) {
        if (const int w = emit(sidecar_path, side.str()); w != kExitOk) return w;
    }
    return code;
}
