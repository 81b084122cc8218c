#include <gtest/gtest.h>

#include <sstream>

#include "arrival/commands.hpp"
#include "arrival/errors.hpp"
#include "arrival/generator.hpp"
#include "arrival/graph_io.hpp"
#include "arrival/json_io.hpp"
#include "arrival/property_suite.hpp"

using namespace arrival;
using namespace arrival::cli;

namespace {

const std::string kT1 = R"({"n":2,"origin":0,"dest":1,"even":[1,1],"odd":[1,1]})";
const std::string kT2 = R"({"n":2,"origin":0,"dest":1,"even":[0,1],"odd":[1,1]})";
const std::string kT3 = R"({"n":3,"origin":0,"dest":2,"even":[1,0,2],"odd":[1,0,2]})";

struct Captured {
    int code = -1;
    std::string out;
    std::string err;
};

template <typename F>
Captured capture(F&& f) {
    std::ostringstream out, err;
    Captured c;
    c.code = f(out, err);
    c.out = out.str();
    c.err = err.str();
    return c;
}

}  // namespace

TEST(Commands, SolveDirectEdge) {
    auto c = capture([](auto& o, auto& e) { return cmd_solve(kT1, o, e); });
    EXPECT_EQ(c.code, kExitOk);
    EXPECT_EQ(c.out,
              "{\"origin\":2,\"dest\":1,\"counts\":[1,0,0,0,1,0,0,0],\"kind\":\"termination\"}\n");
}

TEST(Commands, SolveClosedPair) {
    auto c = capture([](auto& o, auto& e) { return cmd_solve(kT3, o, e); });
    EXPECT_EQ(c.code, kExitOk);
    EXPECT_EQ(c.out,
              "{\"origin\":3,\"dest\":4,\"counts\":[1,0,0,0,0,0,1,0,0,0],"
              "\"kind\":\"non-termination\"}\n");
}

TEST(Commands, DecideText) {
    auto c = capture([](auto& o, auto& e) { return cmd_decide(kT3, false, o, e); });
    EXPECT_EQ(c.code, kExitOk);
    EXPECT_EQ(c.out, "does-not-terminate\n");
    c = capture([](auto& o, auto& e) { return cmd_decide(kT2, true, o, e); });
    EXPECT_EQ(c.out, "{\"verdict\":\"terminates\"}\n");
}

TEST(Commands, MalformedGraphIsUsageError) {
    auto c = capture([](auto& o, auto& e) { return cmd_decide("{\"n\":2", false, o, e); });
    EXPECT_EQ(c.code, kExitUsage);
    EXPECT_NE(c.err.find("error"), std::string::npos);
    EXPECT_TRUE(c.out.empty());
}

TEST(Commands, SimulateTrace) {
    SimulateOptions opts;
    opts.trace = true;
    auto c = capture([&](auto& o, auto& e) { return cmd_simulate(kT2, opts, o, e); });
    EXPECT_EQ(c.code, kExitOk);
    EXPECT_EQ(c.out,
              "step 1: 0 -even-> 0\n"
              "step 2: 0 -odd-> 1\n"
              "verdict: terminated\n"
              "steps: 2\n"
              "final vertex: 1\n"
              "profile: 1 1 0 0\n");
}

TEST(Commands, VerifyFlow) {
    auto zero = capture([](auto& o, auto& e) {
        return cmd_verify_flow(kT2, R"({"origin":0,"dest":1,"counts":[0,0,0,0]})", false, o, e);
    });
    EXPECT_EQ(zero.code, kExitInvalid);
    EXPECT_EQ(zero.out.substr(0, 8), "invalid\n");

    auto good = capture([](auto& o, auto& e) {
        return cmd_verify_flow(kT2, R"({"origin":0,"dest":1,"counts":[1,1,0,0]})", true, o, e);
    });
    EXPECT_EQ(good.code, kExitOk);

    auto bad_dim = capture([](auto& o, auto& e) {
        return cmd_verify_flow(kT2, R"({"origin":0,"dest":1,"counts":[1,1]})", false, o, e);
    });
    EXPECT_EQ(bad_dim.code, kExitUsage);
}

TEST(Commands, ReduceWithSidecar) {
    std::ostringstream out, side, err;
    EXPECT_EQ(cmd_reduce(kT3, out, side, err), kExitOk);
    EXPECT_EQ(out.str(), "{\"n\":5,\"origin\":3,\"dest\":2,\"even\":[4,4,2,0,4],\"odd\":[4,4,2,0,4]}\n");
    EXPECT_EQ(side.str(), "{\"o_bar\":3,\"d_bar\":4,\"x_d\":[0,1]}\n");
}

TEST(Commands, CompleteFromPrefix) {
    auto c = capture([](auto& o, auto& e) {
        return cmd_complete(kT3, R"({"origin":3,"dest":0,"counts":[0,0,0,0,0,0,1,0,0,0]})", true,
                            o, e);
    });
    EXPECT_EQ(c.code, kExitOk) << c.err;
    EXPECT_NE(c.out.find("\"reached\":4"), std::string::npos);
    EXPECT_NE(c.out.find("\"counts\":[1,0,0,0,0,0,1,0,0,0]"), std::string::npos);

    auto wrong_origin = capture([](auto& o, auto& e) {
        return cmd_complete(kT3, R"({"origin":0,"dest":0,"counts":[0,0,0,0,0,0,0,0,0,0]})",
                            false, o, e);
    });
    EXPECT_EQ(wrong_origin.code, kExitUsage);
}

TEST(Commands, WalkModes) {
    WalkCommandOptions opts;
    auto local = capture([&](auto& o, auto& e) { return cmd_walk(kT2, opts, o, e); });
    EXPECT_EQ(local.code, kExitOk);
    EXPECT_NE(local.out.find("\"mode\":\"localopt\",\"steps\":3"), std::string::npos) << local.out;
    EXPECT_NE(local.out.find("\"solution_hex\":\"42100020000\""), std::string::npos);

    opts.mode = WalkMode::SinkOfPath;
    opts.start = "42100020000";
    auto sink = capture([&](auto& o, auto& e) { return cmd_walk(kT2, opts, o, e); });
    EXPECT_EQ(sink.code, kExitOk);
    EXPECT_NE(sink.out.find("\"r\":0"), std::string::npos) << sink.out;

    opts.start = "zz";
    auto bad = capture([&](auto& o, auto& e) { return cmd_walk(kT2, opts, o, e); });
    EXPECT_EQ(bad.code, kExitUsage);

    opts = {};
    opts.budget = 1;
    auto short_budget = capture([&](auto& o, auto& e) { return cmd_walk(kT2, opts, o, e); });
    EXPECT_EQ(short_budget.code, kExitInvalid);
}

TEST(Commands, GenIsDeterministic) {
    GeneratorSpec spec{7, 42, GeneratorModel::Layered};
    auto a = capture([&](auto& o, auto& e) { return cmd_gen(spec, o, e); });
    auto b = capture([&](auto& o, auto& e) { return cmd_gen(spec, o, e); });
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    const SwitchGraph g = parse_graph(a.out);
    EXPECT_EQ(g.size(), 7u);
    EXPECT_EQ(g.origin(), 0u);
    EXPECT_EQ(g.dest(), 6u);

    spec.seed = 43;
    auto c = capture([&](auto& o, auto& e) { return cmd_gen(spec, o, e); });
    EXPECT_NE(a.out, c.out);

    spec.n = 1;
    auto d = capture([&](auto& o, auto& e) { return cmd_gen(spec, o, e); });
    EXPECT_EQ(d.code, kExitUsage);
}

TEST(Commands, CheckIsDeterministicAndPasses) {
    SuiteOptions opts;
    opts.count = 60;
    opts.seed = 3;
    auto a = capture([&](auto& o, auto& e) { return cmd_check(opts, true, o, e); });
    opts.jobs = 3;
    auto b = capture([&](auto& o, auto& e) { return cmd_check(opts, true, o, e); });
    EXPECT_EQ(a.code, kExitOk) << a.out;
    EXPECT_EQ(a.out, b.out);
}

TEST(Commands, CheckDetectsMutatedVerifier) {
    SuiteOptions opts;
    opts.count = 40;
    opts.mutate_verify = true;
    auto c = capture([&](auto& o, auto& e) { return cmd_check(opts, false, o, e); });
    EXPECT_EQ(c.code, kExitInvalid);
    const SuiteReport r = run_property_suite(opts);
    EXPECT_FALSE(r.pass);
    ASSERT_TRUE(r.first_failure.has_value());
    EXPECT_FALSE(r.first_failure->graph_json.empty());
}

TEST(Generator, ModelsAndBounds) {
    EXPECT_EQ(parse_generator_model("layered"), GeneratorModel::Layered);
    EXPECT_EQ(parse_generator_model("uniform"), GeneratorModel::Uniform);
    EXPECT_THROW(parse_generator_model("other"), InvalidInput);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_below(rng, 7), 7u);
}
