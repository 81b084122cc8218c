#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arrival/flow_vector.hpp"
#include "arrival/graph.hpp"

namespace arrival {

// Current switch position of every vertex. Bit v clear means the next exit
// from v takes the even successor. A traversal flips exactly one bit.
class SwitchConfig {
public:
    SwitchConfig() = default;
    explicit SwitchConfig(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    Parity position(Vertex v) const {
        return (words_[v / 64] >> (v % 64)) & 1U ? Parity::Odd : Parity::Even;
    }
    void flip(Vertex v) { words_[v / 64] ^= std::uint64_t{1} << (v % 64); }

    const std::vector<std::uint64_t>& words() const { return words_; }

    // "0110..." with vertex 0 first.
    std::string to_string() const;

    friend bool operator==(const SwitchConfig&, const SwitchConfig&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// The token of the RUN loop: where it is, what it has traversed, and the
// switch positions. Holds a pointer to the graph, which must outlive it.
class Train {
public:
    Train(const SwitchGraph& g, Vertex start);
    explicit Train(const SwitchGraph& g) : Train(g, g.origin()) {}

    Vertex current() const { return current_; }
    const FlowVector& profile() const { return profile_; }
    const SwitchConfig& config() const { return config_; }
    std::uint64_t steps() const { return steps_; }

    EdgeSlot next_slot() const { return {current_, config_.position(current_)}; }

    // One iteration of the loop body: read the switch, flip it, move.
    // Returns the slot traversed.
    EdgeSlot advance();

private:
    const SwitchGraph* graph_;
    Vertex current_;
    FlowVector profile_;
    SwitchConfig config_;
    std::uint64_t steps_ = 0;
};

enum class Verdict { Terminated, NonTerminating, BudgetExhausted };
const char* to_string(Verdict v);

// A (vertex, switch configuration) pair observed twice.
struct CycleWitness {
    Vertex vertex = 0;
    SwitchConfig config;
    std::uint64_t first_step = 0;
    std::uint64_t second_step = 0;
};

struct RunOutcome {
    Verdict verdict = Verdict::BudgetExhausted;
    FlowVector profile;
    std::uint64_t steps = 0;
    Vertex final_vertex = 0;
    std::optional<CycleWitness> cycle;
};

// Default cap on exact cycle detection; above it run() only counts steps.
inline constexpr std::size_t kDefaultCycleDetectionLimit = 20;
// Hard ceiling: states are packed as (vertex << 32 | config) in 64 bits.
inline constexpr std::size_t kMaxCycleDetectionVertices = 32;

struct RunOptions {
    // Step cap; defaults to 2n * 2^n (saturating).
    std::optional<std::uint64_t> budget;
    std::size_t cycle_detection_limit = kDefaultCycleDetectionLimit;
    // Called after every traversal with the 1-based step index.
    std::function<void(std::uint64_t step, EdgeSlot slot, Vertex head)> on_step;
};

std::uint64_t default_run_budget(std::size_t n);

RunOutcome run(const SwitchGraph& g, const RunOptions& opts = {});

struct PrefixState {
    Vertex vertex = 0;
    FlowVector profile;
    SwitchConfig config;
};

// State after exactly t loop iterations. Throws InvalidInput with
// "prefix beyond termination" if dest is reached in fewer than t steps.
PrefixState run_prefix(const SwitchGraph& g, std::uint64_t t);

enum class Arrival { Terminates, DoesNotTerminate };
const char* to_string(Arrival a);

// Exact decision by cycle detection over (vertex, config) states, with a
// budget of n * 2^n + 1 transitions. Requires n <= kMaxCycleDetectionVertices.
Arrival decide_arrival(const SwitchGraph& g);

// "step <i>: <v> -<parity>-> <w>"
std::string format_trace_line(std::uint64_t step, EdgeSlot slot, Vertex head);

}  // namespace arrival
