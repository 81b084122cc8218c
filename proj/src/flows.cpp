#include "arrival/flows.hpp"

#include <deque>
#include <limits>

#include "arrival/errors.hpp"
#include "arrival/simulator.hpp"

namespace arrival {

namespace {

__extension__ typedef __int128 Wide;

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::int64_t saturate(Wide v) {
    constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
    constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
    return static_cast<std::int64_t>(v < lo ? lo : (v > hi ? hi : v));
}

// 2^k - 1, saturating.
std::uint64_t pow2_minus_one(std::size_t k) { return k >= 64 ? kMax : (std::uint64_t{1} << k) - 1; }

}  // namespace

FlowCheckReport verify(const SwitchGraph& g, Vertex origin, Vertex dest, const FlowVector& x) {
    const std::size_t n = g.size();
    if (x.size() != g.slot_count()) {
        throw InvalidInput("flow has " + std::to_string(x.size()) + " entries, graph has " +
                           std::to_string(g.slot_count()) + " slots");
    }
    if (origin >= n || dest >= n) {
        throw InvalidInput("flow endpoints out of range");
    }

    std::vector<Wide> net(n, 0);
    for (const EdgeSlot& s : g.slots()) {
        net[s.tail] += x[s];
        net[g.head(s)] -= x[s];
    }

    FlowCheckReport report;
    for (Vertex v = 0; v < n; ++v) {
        Wide required = 0;
        if (origin != dest) {
            if (v == origin) required = 1;
            if (v == dest) required = -1;
        }
        if (net[v] != required) {
            report.conservation_violations.push_back(
                {v, saturate(net[v]), static_cast<std::int64_t>(required)});
        }
        const std::uint64_t e = x.even(v), o = x.odd(v);
        if (o > e || e - o > 1) {
            report.parity_violations.push_back({v, e, o});
        }
    }
    report.valid = report.conservation_violations.empty() && report.parity_violations.empty();
    return report;
}

Desperation desperation(const SwitchGraph& g, Vertex dest) {
    const std::size_t n = g.size();
    if (dest >= n) {
        throw InvalidInput("desperation: dest out of range");
    }
    std::vector<std::vector<Vertex>> preds(n);
    for (const EdgeSlot& s : g.slots()) {
        preds[g.head(s)].push_back(s.tail);
    }
    std::vector<std::optional<std::uint32_t>> dist(n);
    dist[dest] = 0;
    std::deque<Vertex> queue{dest};
    while (!queue.empty()) {
        const Vertex w = queue.front();
        queue.pop_front();
        for (Vertex v : preds[w]) {
            if (!dist[v]) {
                dist[v] = *dist[w] + 1;
                queue.push_back(v);
            }
        }
    }
    std::vector<std::optional<std::uint32_t>> per_slot(g.slot_count());
    for (const EdgeSlot& s : g.slots()) {
        per_slot[s.index()] = dist[g.head(s)];
    }
    return Desperation(std::move(per_slot));
}

SwitchGraph flipped_board(const AugmentedInstance& aug, const FlowVector& x) {
    const SwitchGraph& h = aug.h;
    if (x.size() != h.slot_count()) {
        throw InvalidInput("flipped_board: flow dimension mismatch");
    }
    std::vector<Vertex> even(h.size()), odd(h.size());
    for (Vertex v = 0; v < h.size(); ++v) {
        const std::uint64_t e = x.even(v), o = x.odd(v);
        if (o > e || e - o > 1) {
            throw InvalidInput("flipped_board: parity condition fails at vertex " +
                               std::to_string(v));
        }
        const bool swap = e - o == 1;
        even[v] = swap ? h.odd_succ(v) : h.even_succ(v);
        odd[v] = swap ? h.even_succ(v) : h.odd_succ(v);
    }
    return SwitchGraph(std::move(even), std::move(odd), h.origin(), h.dest());
}

Completion complete(const AugmentedInstance& aug, Vertex u, const FlowVector& x) {
    const SwitchGraph& h = aug.h;
    const std::size_t m = h.size();
    if (u >= m || u == aug.o_bar) {
        throw InvalidInput("complete: u must be a vertex of H other than o_bar");
    }
    if (!is_switching_flow(h, aug.o_bar, u, x)) {
        throw InvalidInput("complete: x is not a switching flow of (H, o_bar, u)");
    }

    FlowVector base = x;
    for (Vertex t : {aug.d, aug.d_bar}) {
        base.set({t, Parity::Even}, 0);
        base.set({t, Parity::Odd}, 0);
    }

    Completion out;
    out.y = FlowVector(m);
    if (aug.is_terminal(u)) {
        out.reached = u;
        out.z = std::move(base);
        return out;
    }

    const SwitchGraph board = flipped_board(aug, base);
    const std::uint64_t budget = default_run_budget(m) / 2;  // m * 2^m
    Train train(board, u);
    while (!aug.is_terminal(train.current())) {
        if (train.steps() >= budget) {
            throw InternalError("completion run did not terminate");
        }
        train.advance();
    }
    out.reached = train.current();

    // Slots of I map back to H: at a swapped vertex I's even slot is H's odd one.
    const FlowVector& run_on_board = train.profile();
    for (Vertex v = 0; v < m; ++v) {
        const bool swapped = base.even(v) != base.odd(v);
        out.y.set({v, swapped ? Parity::Odd : Parity::Even}, run_on_board.even(v));
        out.y.set({v, swapped ? Parity::Even : Parity::Odd}, run_on_board.odd(v));
    }

    std::size_t entering = 0;
    for (const EdgeSlot& s : h.slots()) {
        if (h.head(s) != out.reached || out.y[s] == 0) continue;
        if (out.y[s] != 1) {
            throw InternalError("complete: terminal entered more than once through one slot");
        }
        ++entering;
    }
    if (entering != 1) {
        throw InternalError("complete: terminal not entered through exactly one slot");
    }

    out.z = base + out.y;
    if (!is_switching_flow(h, aug.o_bar, out.reached, out.z)) {
        throw InternalError("complete: z is not a switching flow of (H, o_bar, reached)");
    }
    return out;
}

const char* to_string(BoundKind k) {
    switch (k) {
        case BoundKind::Global: return "global";
        case BoundKind::OriginBar: return "o_bar";
        case BoundKind::DeadRegion: return "dead-region";
        case BoundKind::Desperation: return "desperation";
    }
    return "?";
}

BoundsReport check_bounds(const AugmentedInstance& aug, const FlowVector& z, Vertex reached) {
    const SwitchGraph& h = aug.h;
    if (!aug.is_terminal(reached)) {
        throw InvalidInput("check_bounds: reached must be d or d_bar");
    }
    if (!is_switching_flow(h, aug.o_bar, reached, z)) {
        throw InvalidInput("check_bounds: z is not a switching flow of (H, o_bar, reached)");
    }

    const std::uint64_t global_limit = pow2_minus_one(h.size());
    const Desperation desp = desperation(h, reached);

    BoundsReport report;
    for (const EdgeSlot& s : h.slots()) {
        const std::uint64_t value = z[s];
        const Vertex head = h.head(s);
        auto require = [&](BoundKind kind, std::uint64_t limit) {
            if (value <= limit) return;
            auto& sink = s.tail == reached ? report.flags : report.violations;
            sink.push_back({kind, s, value, limit});
        };

        require(BoundKind::Global, global_limit);
        if (s.tail == aug.o_bar) {
            require(BoundKind::OriginBar, 1);
        }
        const bool dead = reached == aug.d ? (aug.in_x_d[head] || head == aug.d_bar)
                                           : head == aug.d;
        if (dead) {
            require(BoundKind::DeadRegion, 0);
        }
        if (auto k = desp[s]) {
            require(BoundKind::Desperation, pow2_minus_one(*k + 1));
        }
        ++report.slots_checked;
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace arrival
