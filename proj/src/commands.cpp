#include "arrival/commands.hpp"

#include <json.hpp>
#include <ostream>

#include "arrival/errors.hpp"
#include "arrival/flows.hpp"
#include "arrival/graph_io.hpp"
#include "arrival/json_io.hpp"
#include "arrival/local_search.hpp"
#include "arrival/reduction.hpp"
#include "arrival/simulator.hpp"

namespace arrival::cli {

namespace {

// Runs body, mapping input errors to the usage exit code.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const CounterOverflow& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

void print_counts(std::ostream& out, const FlowVector& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        out << (i ? " " : "") << x.counts()[i];
    }
}

}  // namespace

int cmd_gen(const GeneratorSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        out << serialize_graph(generate(spec)) << "\n";
        return kExitOk;
    });
}

int cmd_simulate(std::string_view graph, const SimulateOptions& opts, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&] {
        const SwitchGraph g = parse_graph(graph);
        RunOptions run_opts;
        run_opts.budget = opts.budget;
        if (opts.trace) {
            run_opts.on_step = [&out](std::uint64_t step, EdgeSlot slot, Vertex head) {
                out << format_trace_line(step, slot, head) << "\n";
            };
        }
        const RunOutcome outcome = run(g, run_opts);
        if (opts.json) {
            out << serialize_run_outcome(outcome) << "\n";
        } else {
            out << "verdict: " << to_string(outcome.verdict) << "\n"
                << "steps: " << outcome.steps << "\n"
                << "final vertex: " << outcome.final_vertex << "\n"
                << "profile: ";
            print_counts(out, outcome.profile);
            out << "\n";
            if (outcome.cycle) {
                out << "repeated state: vertex " << outcome.cycle->vertex << ", switches "
                    << outcome.cycle->config.to_string() << ", steps "
                    << outcome.cycle->first_step << " and " << outcome.cycle->second_step
                    << "\n";
            }
        }
        return kExitOk;
    });
}

int cmd_decide(std::string_view graph, bool json, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Arrival verdict = decide_arrival(parse_graph(graph));
        if (json) {
            nlohmann::ordered_json doc;
            doc["verdict"] = to_string(verdict);
            out << doc.dump() << "\n";
        } else {
            out << to_string(verdict) << "\n";
        }
        return kExitOk;
    });
}

int cmd_reduce(std::string_view graph, std::ostream& out, std::ostream& sidecar,
               std::ostream& err) {
    return guarded(err, [&] {
        const AugmentedInstance aug = augment(parse_graph(graph));
        out << serialize_graph(aug.h) << "\n";
        sidecar << serialize_sidecar(aug) << "\n";
        return kExitOk;
    });
}

int cmd_verify_flow(std::string_view graph, std::string_view flow, bool json,
                    std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const SwitchGraph g = parse_graph(graph);
        const FlowDocument doc = parse_flow(flow);
        const FlowCheckReport report = verify(g, doc.origin, doc.dest, doc.flow);
        if (json) {
            out << serialize_flow_report(report) << "\n";
        } else {
            out << (report.valid ? "valid" : "invalid") << "\n";
            for (const auto& v : report.conservation_violations) {
                out << "  conservation at vertex " << v.vertex << ": net " << v.found
                    << ", required " << v.required << "\n";
            }
            for (const auto& v : report.parity_violations) {
                out << "  parity at vertex " << v.vertex << ": even " << v.x_even << ", odd "
                    << v.x_odd << "\n";
            }
        }
        return report.valid ? kExitOk : kExitInvalid;
    });
}

int cmd_complete(std::string_view graph, std::string_view flow, bool json, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&] {
        const AugmentedInstance aug = augment(parse_graph(graph));
        const FlowDocument doc = parse_flow(flow);
        if (doc.origin != aug.o_bar) {
            throw InvalidInput("complete: flow origin must be o_bar (" +
                               std::to_string(aug.o_bar) + ")");
        }
        const Completion c = complete(aug, doc.dest, doc.flow);
        const BoundsReport bounds = check_bounds(aug, c.z, c.reached);
        if (json) {
            nlohmann::ordered_json j;
            j["reached"] = c.reached;
            j["flow"] = nlohmann::ordered_json::parse(serialize_flow({aug.o_bar, c.reached, c.z}));
            j["bounds"] = nlohmann::ordered_json::parse(serialize_bounds_report(bounds));
            out << j.dump() << "\n";
        } else {
            out << serialize_flow({aug.o_bar, c.reached, c.z}) << "\n";
            out << "bounds: " << (bounds.ok ? "ok" : "violated") << " ("
                << bounds.violations.size() << " violations, " << bounds.flags.size()
                << " flags)\n";
        }
        return bounds.ok ? kExitOk : kExitInvalid;
    });
}

int cmd_walk(std::string_view graph, const WalkCommandOptions& opts, std::ostream& out,
             std::ostream& err) {
    return guarded(err, [&] {
        const LocalOptInstance inst(augment(parse_graph(graph)));
        const SearchState start = opts.start == "reset"
                                      ? inst.reset_state()
                                      : inst.decode(from_hex(opts.start, inst.bit_length()));
        WalkOptions walk_opts;
        walk_opts.budget = opts.budget;
        if (opts.trace) {
            walk_opts.on_state = [&](const SearchState& s) {
                nlohmann::ordered_json j = nlohmann::ordered_json::parse(serialize_state(s));
                j["potential"] = inst.potential(s);
                out << j.dump() << "\n";
            };
        }

        SearchState solution;
        std::uint64_t steps = 0;
        if (opts.mode == WalkMode::LocalOpt) {
            WalkResult w = walk_localopt(inst, start, walk_opts);
            solution = std::move(w.solution);
            steps = w.steps;
        } else {
            SinkResult s = walk_sink_of_path({inst, start}, walk_opts);
            solution = std::move(s.solution);
            steps = s.r;
        }
        const Certificate cert = extract_certificate(inst, solution);

        nlohmann::ordered_json doc;
        doc["mode"] = opts.mode == WalkMode::LocalOpt ? "localopt" : "sink-of-path";
        doc[opts.mode == WalkMode::LocalOpt ? "steps" : "r"] = steps;
        doc["solution"] = nlohmann::ordered_json::parse(serialize_state(solution));
        doc["solution_hex"] = to_hex(inst.encode(solution));
        doc["potential"] = inst.potential(solution);
        doc["certificate"] = nlohmann::ordered_json::parse(serialize_certificate(cert));
        out << doc.dump() << "\n";
        return kExitOk;
    });
}

int cmd_solve(std::string_view graph, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        out << serialize_certificate(solve_s_arrival(parse_graph(graph))) << "\n";
        return kExitOk;
    });
}

int cmd_check(const SuiteOptions& opts, bool json, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const SuiteReport report = run_property_suite(opts);
        out << (json ? serialize_suite_report(report) + "\n" : format_suite_report(report));
        return report.pass ? kExitOk : kExitInvalid;
    });
}

}  // namespace arrival::cli
