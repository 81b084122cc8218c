#include <gtest/gtest.h>

#include <random>

#include "arrival/errors.hpp"
#include "arrival/flows.hpp"
#include "arrival/graph_io.hpp"
#include "arrival/reduction.hpp"
#include "arrival/simulator.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace arrival;

namespace {

FlowVector flow(std::vector<std::uint64_t> counts) { return FlowVector(std::move(counts)); }

// Profile of H's run from o_bar up to the first terminal, via the literal loop.
std::vector<std::uint64_t> h_run_profile(const AugmentedInstance& aug) {
    const auto a = oracle::literal_run(aug.h, aug.o_bar, aug.d, 1 << 18);
    if (a.reached) return a.profile;
    const auto b = oracle::literal_run(aug.h, aug.o_bar, aug.d_bar, 1 << 18);
    EXPECT_TRUE(b.reached);
    return b.profile;
}

}  // namespace

TEST(Verify, RunProfileIsValid) {
    const FlowCheckReport r = verify(fixtures::t1(), 0, 1, flow({1, 0, 0, 0}));
    EXPECT_TRUE(r.valid);
    EXPECT_TRUE(r.conservation_violations.empty());
    EXPECT_TRUE(r.parity_violations.empty());
}

TEST(Verify, ZeroFlowFailsConservation) {
    const FlowCheckReport r = verify(fixtures::t1(), 0, 1, FlowVector(2));
    EXPECT_FALSE(r.valid);
    ASSERT_EQ(r.conservation_violations.size(), 2u);
    EXPECT_EQ(r.conservation_violations[0].vertex, 0u);
    EXPECT_EQ(r.conservation_violations[0].found, 0);
    EXPECT_EQ(r.conservation_violations[0].required, 1);
    EXPECT_EQ(r.conservation_violations[1].vertex, 1u);
    EXPECT_EQ(r.conservation_violations[1].required, -1);
}

TEST(Verify, OddBeforeEvenFailsParity) {
    const FlowCheckReport r = verify(fixtures::t1(), 0, 1, flow({0, 1, 0, 0}));
    EXPECT_FALSE(r.valid);
    EXPECT_TRUE(r.conservation_violations.empty());
    ASSERT_EQ(r.parity_violations.size(), 1u);
    EXPECT_EQ(r.parity_violations[0].vertex, 0u);
    EXPECT_EQ(r.parity_violations[0].x_even, 0u);
    EXPECT_EQ(r.parity_violations[0].x_odd, 1u);
}

TEST(Verify, SelfLoopCountsOnBothSides) {
    EXPECT_TRUE(is_switching_flow(fixtures::t2(), 0, 1, flow({1, 1, 0, 0})));
    EXPECT_TRUE(is_switching_flow(fixtures::t2(), 0, 1, flow({1, 1, 1, 0})));
    EXPECT_FALSE(is_switching_flow(fixtures::t2(), 0, 1, flow({2, 2, 0, 0})));
}

TEST(Verify, DegenerateEndpointsAcceptZero) {
    EXPECT_TRUE(is_switching_flow(fixtures::t1(), 1, 1, FlowVector(2)));
    EXPECT_FALSE(is_switching_flow(fixtures::t1(), 0, 0, flow({1, 0, 0, 0})));
}

TEST(Verify, HugeCountsDoNotWrap) {
    const std::uint64_t big = std::numeric_limits<std::uint64_t>::max();
    const FlowCheckReport r = verify(fixtures::t3(), 0, 2, flow({big, big, big, big, 0, 0}));
    EXPECT_FALSE(r.valid);
    EXPECT_EQ(r.conservation_violations.size(), 2u);
}

TEST(Verify, RejectsBadDimensions) {
    EXPECT_THROW(verify(fixtures::t1(), 0, 1, FlowVector(3)), InvalidInput);
    EXPECT_THROW(verify(fixtures::t1(), 0, 2, FlowVector(2)), InvalidInput);
}

TEST(Verify, AgreesWithEdgeListOracle) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::uint64_t> entry(0, 2);
    int valid = 0;
    for (int i = 0; i < 20000; ++i) {
        const std::size_t n = 2 + i % 3;
        const SwitchGraph g = fixtures::random_graph(rng, n);
        std::vector<std::uint64_t> counts(2 * n);
        for (auto& c : counts) c = entry(rng);
        const FlowVector x(counts);
        const Vertex u = static_cast<Vertex>(i % n);
        const bool got = is_switching_flow(g, g.origin(), u, x);
        ASSERT_EQ(got, oracle::is_switching_flow(g, g.origin(), u, x)) << serialize_graph(g);
        valid += got;
    }
    EXPECT_GT(valid, 50);
}

TEST(Desperation, Examples) {
    const Desperation t1 = desperation(fixtures::t1(), 1);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(t1[EdgeSlot::from_index(i)], 0u);

    const Desperation t2 = desperation(fixtures::t2(), 1);
    EXPECT_EQ(t2[(EdgeSlot{0, Parity::Even})], 1u);
    EXPECT_EQ(t2[(EdgeSlot{0, Parity::Odd})], 0u);

    const Desperation t3 = desperation(fixtures::t3(), 2);
    EXPECT_FALSE(t3[(EdgeSlot{0, Parity::Even})].has_value());
    EXPECT_FALSE(t3[(EdgeSlot{1, Parity::Odd})].has_value());
    EXPECT_EQ(t3[(EdgeSlot{2, Parity::Even})], 0u);
}

TEST(Desperation, MatchesShortestWalkOracle) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 500; ++i) {
        const SwitchGraph g = fixtures::random_graph(rng, 2 + i % 9);
        const Desperation desp = desperation(g, g.dest());
        for (const EdgeSlot& s : g.slots()) {
            ASSERT_EQ(desp[s], oracle::shortest_walk(g, g.head(s), g.dest()));
        }
    }
}

TEST(FlippedBoard, SwapsWhereEvenLeads) {
    const AugmentedInstance aug = augment(fixtures::t2());
    // H of t2: 0 -even-> 0, 0 -odd-> 1, o_bar = 2 -> 0, d_bar = 3.
    const FlowVector x = flow({1, 0, 0, 0, 1, 0, 0, 0});
    const SwitchGraph board = flipped_board(aug, x);
    EXPECT_EQ(board.even_succ(0), 1u);
    EXPECT_EQ(board.odd_succ(0), 0u);
    EXPECT_EQ(board.even_succ(1), 1u);
    EXPECT_THROW(flipped_board(aug, flow({0, 1, 0, 0, 1, 0, 0, 0})), InvalidInput);
}

TEST(Complete, FromFirstVertexOfDirectEdge) {
    const AugmentedInstance aug = augment(fixtures::t1());
    const Completion c = complete(aug, 0, flow({0, 0, 0, 0, 1, 0, 0, 0}));
    EXPECT_EQ(c.reached, aug.d);
    EXPECT_EQ(c.z, flow({1, 0, 0, 0, 1, 0, 0, 0}));
    EXPECT_EQ(c.y, flow({1, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(Complete, AtTerminalReturnsInput) {
    const AugmentedInstance aug = augment(fixtures::t1());
    const FlowVector x = flow({1, 0, 0, 0, 1, 0, 0, 0});
    const Completion c = complete(aug, aug.d, x);
    EXPECT_EQ(c.reached, aug.d);
    EXPECT_EQ(c.z, x);
    EXPECT_TRUE(c.y.is_zero());
}

TEST(Complete, ZeroesTerminalSelfLoops) {
    const AugmentedInstance aug = augment(fixtures::t1());
    const Completion c = complete(aug, aug.d, flow({1, 0, 1, 0, 1, 0, 0, 0}));
    EXPECT_EQ(c.z, flow({1, 0, 0, 0, 1, 0, 0, 0}));
}

TEST(Complete, ClosedPairReachesDBar) {
    const AugmentedInstance aug = augment(fixtures::t3());
    // x = one step of H's run: o_bar -> 0.
    const Completion c = complete(aug, 0, flow({0, 0, 0, 0, 0, 0, 1, 0, 0, 0}));
    EXPECT_EQ(c.reached, aug.d_bar);
    EXPECT_EQ(c.z, flow({1, 0, 0, 0, 0, 0, 1, 0, 0, 0}));
}

TEST(Complete, ContinuesAlternationAtSelfLoop) {
    const AugmentedInstance aug = augment(fixtures::t2());
    // After o_bar -> 0 -even-> 0 the next exit from 0 must be odd.
    const Completion c = complete(aug, 0, flow({1, 0, 0, 0, 1, 0, 0, 0}));
    EXPECT_EQ(c.reached, aug.d);
    EXPECT_EQ(c.z, flow({1, 1, 0, 0, 1, 0, 0, 0}));
}

TEST(Complete, RejectsBadPreconditions) {
    const AugmentedInstance aug = augment(fixtures::t1());
    EXPECT_THROW(complete(aug, aug.o_bar, FlowVector(4)), InvalidInput);
    EXPECT_THROW(complete(aug, 0, FlowVector(4)), InvalidInput);
    EXPECT_THROW(complete(aug, 7, FlowVector(4)), InvalidInput);
    EXPECT_THROW(complete(aug, 0, FlowVector(3)), InvalidInput);
}

TEST(CheckBounds, RunProfilePasses) {
    const AugmentedInstance aug = augment(fixtures::t1());
    const BoundsReport r = check_bounds(aug, flow({1, 0, 0, 0, 1, 0, 0, 0}), aug.d);
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_TRUE(r.flags.empty());
    EXPECT_EQ(r.slots_checked, 8u);
}

TEST(CheckBounds, FlowIntoDWhenReachingDBar) {
    const AugmentedInstance aug = augment(fixtures::t3());
    // A valid flow to d_bar that also circulates once on d's self-loop.
    const BoundsReport r =
        check_bounds(aug, flow({1, 0, 0, 0, 1, 0, 1, 0, 0, 0}), aug.d_bar);
    EXPECT_FALSE(r.ok);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].kind, BoundKind::DeadRegion);
    EXPECT_EQ(r.violations[0].slot.tail, aug.d);
    EXPECT_EQ(r.violations[0].slot.parity, Parity::Even);
    EXPECT_EQ(r.violations[0].value, 1u);
    EXPECT_EQ(r.violations[0].limit, 0u);
    EXPECT_STREQ(to_string(r.violations[0].kind), "dead-region");
}

TEST(CheckBounds, RejectsBadPreconditions) {
    const AugmentedInstance aug = augment(fixtures::t1());
    EXPECT_THROW(check_bounds(aug, flow({1, 0, 0, 0, 1, 0, 0, 0}), 0), InvalidInput);
    EXPECT_THROW(check_bounds(aug, FlowVector(4), aug.d), InvalidInput);
}

TEST(CompletionProperties, PrefixCompletesToTheFullRun) {
    std::mt19937_64 rng(23);
    std::size_t pairs = 0;
    for (int i = 0; i < 400; ++i) {
        const SwitchGraph g = fixtures::random_graph(rng, 2 + i % 9);
        const AugmentedInstance aug = augment(g);
        const std::vector<std::uint64_t> full = h_run_profile(aug);
        const FlowVector full_flow(full);
        const SwitchGraph& h = aug.h;

        // Replay the run; each prefix ending outside o_bar is a completion input.
        Train train(h, aug.o_bar);
        while (!aug.is_terminal(train.current())) {
            train.advance();
            const FlowVector x = train.profile();
            const Completion c = complete(aug, train.current(), x);
            ++pairs;
            ASSERT_EQ(c.z, full_flow) << serialize_graph(g);
            ASSERT_TRUE(oracle::is_switching_flow(h, aug.o_bar, c.reached, c.z));
            for (const EdgeSlot& s : h.slots()) {
                ASSERT_LE(x[s], c.z[s]);
            }
            const BoundsReport b = check_bounds(aug, c.z, c.reached);
            ASSERT_TRUE(b.ok) << serialize_graph(g);
            ASSERT_TRUE(b.flags.empty());
        }
    }
    EXPECT_GT(pairs, 1000u);
}

TEST(CompletionProperties, ParityOfZIsBinaryAndFlippedBoardFollowsIt) {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 300; ++i) {
        const AugmentedInstance aug = augment(fixtures::random_graph(rng, 2 + i % 9));
        Train train(aug.h, aug.o_bar);
        train.advance();
        const Completion c = complete(aug, train.current(), train.profile());
        const SwitchGraph board = flipped_board(aug, c.z);
        for (Vertex v = 0; v < aug.size(); ++v) {
            const std::uint64_t diff = c.z.even(v) - c.z.odd(v);
            ASSERT_LE(diff, 1u);
            const Vertex expected = diff == 1 ? aug.h.odd_succ(v) : aug.h.even_succ(v);
            ASSERT_EQ(board.even_succ(v), expected);
        }
    }
}
