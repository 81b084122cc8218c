#include "arrival/simulator.hpp"

#include <limits>
#include <unordered_map>

#include "arrival/errors.hpp"

namespace arrival {

std::string SwitchConfig::to_string() const {
    std::string out(n_, '0');
    for (std::size_t v = 0; v < n_; ++v) {
        if (position(static_cast<Vertex>(v)) == Parity::Odd) out[v] = '1';
    }
    return out;
}

Train::Train(const SwitchGraph& g, Vertex start)
    : graph_(&g), current_(start), profile_(g.size()), config_(g.size()) {
    if (start >= g.size()) {
        throw InvalidInput("train start vertex out of range");
    }
}

EdgeSlot Train::advance() {
    const EdgeSlot slot = next_slot();
    config_.flip(current_);
    profile_.increment(slot);
    steps_ = checked_add(steps_, 1);
    current_ = graph_->head(slot);
    return slot;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Terminated: return "terminated";
        case Verdict::NonTerminating: return "non-terminating";
        case Verdict::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

const char* to_string(Arrival a) {
    return a == Arrival::Terminates ? "terminates" : "does-not-terminate";
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// k * 2^n, saturating at 2^64 - 1.
std::uint64_t times_pow2(std::uint64_t k, std::size_t n) {
    if (k == 0) return 0;
    if (n >= 64 || k > (kSaturated >> n)) return kSaturated;
    return k << n;
}

std::uint64_t pack_state(const Train& t) {
    const auto& words = t.config().words();
    const std::uint64_t bits = words.empty() ? 0 : words[0];
    return (std::uint64_t{t.current()} << 32) | bits;
}

}  // namespace

std::uint64_t default_run_budget(std::size_t n) { return times_pow2(2 * n, n); }

RunOutcome run(const SwitchGraph& g, const RunOptions& opts) {
    require_valid(g);
    const std::size_t n = g.size();
    const std::uint64_t budget = opts.budget.value_or(default_run_budget(n));
    const bool detect = n <= opts.cycle_detection_limit && n <= kMaxCycleDetectionVertices;

    std::unordered_map<std::uint64_t, std::uint64_t> first_seen;
    Train train(g);
    RunOutcome out;
    while (true) {
        if (train.current() == g.dest()) {
            out.verdict = Verdict::Terminated;
            break;
        }
        if (detect) {
            auto [it, fresh] = first_seen.try_emplace(pack_state(train), train.steps());
            if (!fresh) {
                out.verdict = Verdict::NonTerminating;
                out.cycle = CycleWitness{train.current(), train.config(), it->second,
                                         train.steps()};
                break;
            }
        }
        if (train.steps() >= budget) {
            out.verdict = Verdict::BudgetExhausted;
            break;
        }
        const EdgeSlot slot = train.advance();
        if (opts.on_step) opts.on_step(train.steps(), slot, train.current());
    }
    out.profile = train.profile();
    out.steps = train.steps();
    out.final_vertex = train.current();
    return out;
}

PrefixState run_prefix(const SwitchGraph& g, std::uint64_t t) {
    require_valid(g);
    Train train(g);
    while (train.steps() < t) {
        if (train.current() == g.dest()) {
            throw InvalidInput("prefix beyond termination: run ends after " +
                               std::to_string(train.steps()) + " steps, asked for " +
                               std::to_string(t));
        }
        train.advance();
    }
    return {train.current(), train.profile(), train.config()};
}

Arrival decide_arrival(const SwitchGraph& g) {
    require_valid(g);
    const std::size_t n = g.size();
    if (n > kMaxCycleDetectionVertices) {
        throw InvalidInput("decide_arrival: " + std::to_string(n) +
                           " vertices exceeds the exact-decision limit of " +
                           std::to_string(kMaxCycleDetectionVertices));
    }
    RunOptions opts;
    opts.budget = checked_add(times_pow2(n, n), 1);
    opts.cycle_detection_limit = kMaxCycleDetectionVertices;
    const RunOutcome outcome = run(g, opts);
    switch (outcome.verdict) {
        case Verdict::Terminated: return Arrival::Terminates;
        case Verdict::NonTerminating: return Arrival::DoesNotTerminate;
        case Verdict::BudgetExhausted: break;
    }
    throw InternalError("decide_arrival: no repeated state within n * 2^n + 1 transitions");
}

std::string format_trace_line(std::uint64_t step, EdgeSlot slot, Vertex head) {
    return "step " + std::to_string(step) + ": " + std::to_string(slot.tail) + " -" +
           to_string(slot.parity) + "-> " + std::to_string(head);
}

}  // namespace arrival
