#include "arrival/property_suite.hpp"

#include <array>
#include <atomic>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "arrival/commands.hpp"
#include "arrival/flows.hpp"
#include "arrival/generator.hpp"
#include "arrival/graph_io.hpp"
#include "arrival/json_io.hpp"
#include "arrival/local_search.hpp"
#include "arrival/reduction.hpp"
#include "arrival/simulator.hpp"

namespace arrival {

namespace {

constexpr std::array kProperties = {
    property::kDuality,          property::kRunBudget,      property::kRunProfile,
    property::kPrefixFlow,       property::kPrefixAgreement, property::kRunBounds,
    property::kCompletion,       property::kCompletionBounds, property::kTraceEquivalence,
    property::kStrictAscent,     property::kEndToEnd,       property::kCertificateReverify,
    property::kSinkOfPath,
};

std::size_t property_index(const char* name) {
    for (std::size_t i = 0; i < kProperties.size(); ++i) {
        if (std::string_view(kProperties[i]) == name) return i;
    }
    throw std::logic_error("unknown property");
}

struct InstanceResult {
    std::array<std::uint64_t, kProperties.size()> checks{};
    std::array<std::uint64_t, kProperties.size()> failures{};
    bool terminating = false;
    std::optional<SuiteFailure> failure;
};

class Recorder {
public:
    Recorder(InstanceResult& result, std::size_t index, std::uint64_t seed, std::string graph)
        : result_(result), index_(index), seed_(seed), graph_(std::move(graph)) {}

    template <typename Detail>
    bool check(const char* name, bool ok, Detail&& detail) {
        const std::size_t p = property_index(name);
        ++result_.checks[p];
        if (!ok) {
            ++result_.failures[p];
            if (!result_.failure) {
                result_.failure = SuiteFailure{index_, seed_, name, detail(), graph_};
            }
        }
        return ok;
    }
    bool check(const char* name, bool ok) {
        return check(name, ok, [] { return std::string(); });
    }

private:
    InstanceResult& result_;
    std::size_t index_;
    std::uint64_t seed_;
    std::string graph_;
};

FlowVerifier make_verifier(bool mutate) {
    if (!mutate) {
        return [](const SwitchGraph& g, Vertex o, Vertex d, const FlowVector& x) {
            return is_switching_flow(g, o, d, x);
        };
    }
    return [](const SwitchGraph& g, Vertex o, Vertex d, const FlowVector& x) {
        std::vector<std::uint64_t> swapped(x.size());
        for (Vertex v = 0; v < x.vertex_count(); ++v) {
            swapped[2 * v] = x.odd(v);
            swapped[2 * v + 1] = x.even(v);
        }
        return is_switching_flow(g, o, d, FlowVector(std::move(swapped)));
    };
}

std::string describe(const SearchState& s) { return serialize_state(s); }

SwitchGraph draw_instance(std::size_t index, const SuiteOptions& opts, std::uint64_t seed,
                          std::mt19937_64& rng) {
    GeneratorSpec spec;
    spec.n = 2 + uniform_below(rng, opts.n_max - 1);
    spec.seed = mix_seed(seed);
    spec.model = index % 2 == 0 ? GeneratorModel::Layered : GeneratorModel::Uniform;
    return generate(spec);
}

void evaluate(std::size_t index, const SuiteOptions& opts, const FlowVerifier& verifier,
              InstanceResult& result) {
    const std::uint64_t seed = mix_seed(opts.seed + index);
    std::mt19937_64 rng(seed);
    const SwitchGraph g = draw_instance(index, opts, seed, rng);
    Recorder rec(result, index, seed, serialize_graph(g));

    const char* current = property::kDuality;
    try {
        const DualityReport duality = check_duality(g);
        rec.check(property::kDuality, duality.pass, [&] {
            return std::string("G ") + to_string(duality.original) + ", (H,o_bar,d) " +
                   to_string(duality.toward_d) + ", (H,o_bar,d_bar) " +
                   to_string(duality.toward_d_bar);
        });
        result.terminating = duality.original == Arrival::Terminates;

        // Run on G: every prefix, then the profile and budget when it terminates.
        current = property::kPrefixFlow;
        const RunOutcome outcome = run(g);
        {
            Train train(g);
            while (true) {
                rec.check(property::kPrefixFlow,
                          verifier(g, g.origin(), train.current(), train.profile()), [&] {
                              return "G prefix at step " + std::to_string(train.steps());
                          });
                if (train.steps() >= outcome.steps) break;
                train.advance();
            }
        }
        if (outcome.verdict == Verdict::Terminated) {
            current = property::kRunProfile;
            rec.check(property::kRunBudget, outcome.steps < default_run_budget(g.size()));
            rec.check(property::kRunProfile,
                      verifier(g, g.origin(), g.dest(), outcome.profile),
                      [] { return std::string("terminating run profile of G"); });
        }

        // The walk from the reset state against a simulator stepping on H.
        current = property::kTraceEquivalence;
        const AugmentedInstance aug = augment(g);
        const LocalOptInstance inst(aug);
        Train sim(aug.h, aug.o_bar);
        std::vector<SearchState> trace;
        bool in_step = true;
        std::int64_t previous_potential = -2;
        const WalkResult walk = walk_localopt(inst, inst.reset_state(), {
            std::nullopt,
            [&](const SearchState& s) {
                in_step = rec.check(property::kTraceEquivalence,
                                    in_step && s.vertex == sim.current() &&
                                        s.flow == sim.profile(),
                                    [&] {
                                        return "walk state " + describe(s) + " vs run prefix " +
                                               std::to_string(sim.steps());
                                    });
                const std::int64_t p = inst.potential(s);
                if (!trace.empty()) {
                    rec.check(property::kStrictAscent, p == previous_potential + 1, [&] {
                        return "potential " + std::to_string(p) + " after " +
                               std::to_string(previous_potential);
                    });
                }
                previous_potential = p;
                rec.check(property::kPrefixFlow,
                          verifier(aug.h, aug.o_bar, sim.current(), sim.profile()), [&] {
                              return "H prefix at step " + std::to_string(sim.steps());
                          });
                trace.push_back(s);
                if (!aug.is_terminal(sim.current())) sim.advance();
            },
        });
        const Vertex reached = sim.current();
        rec.check(property::kTraceEquivalence,
                  aug.is_terminal(reached) && walk.solution.vertex == reached &&
                      walk.steps == sim.steps() && walk.solution.flow == sim.profile(),
                  [&] { return "walk ended at " + describe(walk.solution); });

        current = property::kRunProfile;
        rec.check(property::kRunProfile, verifier(aug.h, aug.o_bar, reached, sim.profile()),
                  [] { return std::string("run profile of H"); });
        current = property::kRunBounds;
        const BoundsReport run_bounds = check_bounds(aug, sim.profile(), reached);
        rec.check(property::kRunBounds, run_bounds.ok,
                  [&] { return serialize_bounds_report(run_bounds); });

        current = property::kPrefixAgreement;
        const std::uint64_t t_probe = uniform_below(rng, trace.size());
        const PrefixState probe = run_prefix(aug.toward(reached), t_probe);
        rec.check(property::kPrefixAgreement,
                  probe.vertex == trace[t_probe].vertex && probe.profile == trace[t_probe].flow,
                  [&] { return "run_prefix at t = " + std::to_string(t_probe); });

        // Completion from prefixes of the H run reproduces the full run.
        current = property::kCompletion;
        const std::uint64_t run_length = trace.size() - 1;
        std::vector<std::uint64_t> cutoffs;
        for (std::size_t k = 0; k < opts.completion_cutoffs; ++k) {
            cutoffs.push_back(1 + uniform_below(rng, run_length - 1));
        }
        cutoffs.push_back(run_length);
        for (const std::uint64_t t : cutoffs) {
            const SearchState& prefix = trace[t];
            const Completion c = complete(aug, prefix.vertex, prefix.flow);
            bool monotone = true;
            for (const EdgeSlot& s : aug.h.slots()) {
                if (aug.is_terminal(s.tail)) continue;
                monotone = monotone && c.z[s] >= prefix.flow[s];
            }
            rec.check(property::kCompletion,
                      verifier(aug.h, aug.o_bar, c.reached, c.z) && monotone &&
                          c.reached == reached && c.z == sim.profile(),
                      [&] { return "complete from cutoff " + std::to_string(t); });
            const BoundsReport b = check_bounds(aug, c.z, c.reached);
            rec.check(property::kCompletionBounds, b.ok,
                      [&] { return serialize_bounds_report(b); });
        }

        current = property::kEndToEnd;
        const Certificate cert = solve_s_arrival(g);
        const bool says_terminates = cert.kind == CertificateKind::Termination;
        rec.check(property::kEndToEnd,
                  says_terminates == result.terminating && cert.flow == walk.solution.flow,
                  [&] { return std::string("certificate kind ") + to_string(cert.kind); });

        current = property::kCertificateReverify;
        std::ostringstream sink;
        const int code = cli::cmd_verify_flow(serialize_graph(aug.h), serialize_certificate(cert),
                                              true, sink, sink);
        rec.check(property::kCertificateReverify, code == cli::kExitOk,
                  [&] { return sink.str(); });

        current = property::kSinkOfPath;
        const SinkResult sop = walk_sink_of_path({inst, inst.reset_state()});
        rec.check(property::kSinkOfPath,
                  sop.solution == walk.solution && sop.r == walk.steps,
                  [&] { return "r = " + std::to_string(sop.r); });
    } catch (const std::exception& e) {
        rec.check(current, false, [&] { return std::string("exception: ") + e.what(); });
    }
}

}  // namespace

SwitchGraph suite_instance(const SuiteOptions& opts, std::size_t index) {
    const std::uint64_t seed = mix_seed(opts.seed + index);
    std::mt19937_64 rng(seed);
    return draw_instance(index, opts, seed, rng);
}

const PropertyTally& SuiteReport::tally(const std::string& name) const {
    for (const auto& p : properties) {
        if (p.name == name) return p;
    }
    throw std::out_of_range("no property named " + name);
}

SuiteReport run_property_suite(const SuiteOptions& opts) {
    if (opts.n_max < 2) {
        throw InvalidInput("property suite: n_max must be at least 2");
    }
    if (opts.n_max + 2 > kMaxCycleDetectionVertices) {
        throw InvalidInput("property suite: n_max too large for exact cycle detection");
    }
    const FlowVerifier verifier = make_verifier(opts.mutate_verify);
    std::vector<InstanceResult> results(opts.count);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < opts.count; i = next++) {
            evaluate(i, opts, verifier, results[i]);
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, opts.count));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SuiteReport report;
    report.instances = opts.count;
    for (const char* name : kProperties) {
        report.properties.push_back({name, 0, 0});
    }
    for (const auto& r : results) {
        for (std::size_t p = 0; p < kProperties.size(); ++p) {
            report.properties[p].checks += r.checks[p];
            report.properties[p].failures += r.failures[p];
        }
        report.terminating += r.terminating ? 1 : 0;
        if (r.failure && !report.first_failure) {
            report.first_failure = r.failure;
        }
    }
    report.pass = !report.first_failure.has_value();
    return report;
}

std::string format_suite_report(const SuiteReport& report) {
    std::ostringstream os;
    os << "instances: " << report.instances << " (" << report.terminating << " terminating)\n";
    for (const auto& p : report.properties) {
        os << "  " << p.name << ": " << p.checks << " checks, " << p.failures << " failures\n";
    }
    os << "result: " << (report.pass ? "PASS" : "FAIL") << "\n";
    if (report.first_failure) {
        const auto& f = *report.first_failure;
        os << "first failure: instance " << f.instance << " (seed " << f.instance_seed
           << "), property " << f.property << "\n";
        if (!f.detail.empty()) os << "  detail: " << f.detail << "\n";
        os << "  graph: " << f.graph_json << "\n";
    }
    return os.str();
}

std::string serialize_suite_report(const SuiteReport& report) {
    nlohmann::ordered_json doc;
    doc["instances"] = report.instances;
    doc["terminating"] = report.terminating;
    doc["properties"] = nlohmann::ordered_json::array();
    for (const auto& p : report.properties) {
        nlohmann::ordered_json j;
        j["name"] = p.name;
        j["checks"] = p.checks;
        j["failures"] = p.failures;
        doc["properties"].push_back(j);
    }
    doc["pass"] = report.pass;
    if (report.first_failure) {
        const auto& f = *report.first_failure;
        nlohmann::ordered_json j;
        j["instance"] = f.instance;
        j["seed"] = f.instance_seed;
        j["property"] = f.property;
        j["detail"] = f.detail;
        j["graph"] = nlohmann::ordered_json::parse(f.graph_json);
        doc["first_failure"] = j;
    } else {
        doc["first_failure"] = nullptr;
    }
    return doc.dump();
}

}  // namespace arrival
