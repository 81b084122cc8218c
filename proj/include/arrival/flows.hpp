#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrival/flow_vector.hpp"
#include "arrival/graph.hpp"
#include "arrival/reduction.hpp"

namespace arrival {

struct ConservationViolation {
    Vertex vertex = 0;
    std::int64_t found = 0;     // outflow - inflow, saturated to the int64 range
    std::int64_t required = 0;  // +1 at origin, -1 at dest, 0 elsewhere
};

struct ParityViolation {
    Vertex vertex = 0;
    std::uint64_t x_even = 0;
    std::uint64_t x_odd = 0;
};

struct FlowCheckReport {
    bool valid = true;
    std::vector<ConservationViolation> conservation_violations;
    std::vector<ParityViolation> parity_violations;
};

// Checks the two switching-flow conditions of x on g's slots:
//   outflow(v) - inflow(v) = [v == origin] - [v == dest]   (self-loops count on both sides)
//   x_odd(v) <= x_even(v) <= x_odd(v) + 1
// origin == dest is accepted and then requires net zero everywhere, which makes
// the all-zero flow valid. g's own endpoints are ignored.
// Throws InvalidInput on a dimension mismatch or out-of-range endpoint.
FlowCheckReport verify(const SwitchGraph& g, Vertex origin, Vertex dest, const FlowVector& x);

inline bool is_switching_flow(const SwitchGraph& g, Vertex origin, Vertex dest,
                              const FlowVector& x) {
    return verify(g, origin, dest, x).valid;
}

// Per-slot shortest path length from the slot's head to dest, or nullopt if
// the head cannot reach dest.
class Desperation {
public:
    explicit Desperation(std::vector<std::optional<std::uint32_t>> per_slot)
        : per_slot_(std::move(per_slot)) {}

    std::optional<std::uint32_t> operator[](EdgeSlot s) const { return per_slot_[s.index()]; }
    std::size_t size() const { return per_slot_.size(); }

private:
    std::vector<std::optional<std::uint32_t>> per_slot_;
};

Desperation desperation(const SwitchGraph& g, Vertex dest);

struct Completion {
    Vertex reached = 0;  // aug.d or aug.d_bar
    FlowVector z;        // the completed switching flow of (H, o_bar, reached)
    FlowVector y;        // run profile of the flipped board from u
};

// Extends a switching flow x of (H, o_bar, u) to a switching flow of
// (H, o_bar, d) or (H, o_bar, d_bar):
//   1. zero the self-loop counts of d and d_bar in x;
//   2. build the flipped board I: at every v with x_even(v) - x_odd(v) = 1 the
//      successors swap, so the first exit from v continues x's alternation;
//   3. run I from u until d or d_bar (no run if u is already terminal);
//   4. return z = x + y, with y mapped back onto H's slots.
// Throws InvalidInput if u == o_bar or x is not a switching flow of
// (H, o_bar, u); throws InternalError if the run on I does not reach a
// terminal within |H| * 2^|H| steps, if y does not enter the terminal through
// exactly one unit, or if z fails to verify.
Completion complete(const AugmentedInstance& aug, Vertex u, const FlowVector& x);

// The flipped board I for a given x (step 2 above). Exposed for testing.
SwitchGraph flipped_board(const AugmentedInstance& aug, const FlowVector& x);

enum class BoundKind {
    Global,          // z < 2^m on every slot
    OriginBar,       // z <= 1 on the slots of o_bar
    DeadRegion,      // z == 0 on slots into X_d and d_bar (reached d), or into d (reached d_bar)
    Desperation,     // z <= 2^(k+1) - 1 on slots of finite desperation k
};
const char* to_string(BoundKind k);

struct BoundViolation {
    BoundKind kind = BoundKind::Global;
    EdgeSlot slot;
    std::uint64_t value = 0;
    std::uint64_t limit = 0;
};

struct BoundsReport {
    bool ok = true;
    std::vector<BoundViolation> violations;
    // Bounds exceeded on the reached terminal's own slots. The magnitude
    // bound does not cover them, so these are reported but do not fail.
    std::vector<BoundViolation> flags;
    std::size_t slots_checked = 0;
};

// Audits a switching flow of (H, o_bar, reached), reached in {d, d_bar},
// against the magnitude bounds. Throws InvalidInput if z does not verify.
BoundsReport check_bounds(const AugmentedInstance& aug, const FlowVector& z, Vertex reached);

}  // namespace arrival
