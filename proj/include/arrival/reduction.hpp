#pragma once

#include <vector>

#include "arrival/graph.hpp"
#include "arrival/simulator.hpp"

namespace arrival {

// The augmented board H built from (G, o, d): G's vertices keep their ids,
// a fresh origin o_bar = n feeds o through both slots, and a fresh sink
// d_bar = n + 1 absorbs every vertex that cannot reach d. Both d and d_bar
// become self-loops.
//
// h.origin() is o_bar and h.dest() is d; use toward() for the d_bar instance.
struct AugmentedInstance {
    SwitchGraph h;
    Vertex o_bar = 0;
    Vertex d_bar = 0;
    Vertex d = 0;                // the original destination, carried over
    Vertex source_origin = 0;    // the original origin
    std::vector<Vertex> x_d;     // sorted; original vertices with no path to d
    std::vector<bool> in_x_d;    // membership mask over H's vertices

    std::size_t size() const { return h.size(); }
    bool is_terminal(Vertex v) const { return v == d || v == d_bar; }

    // (H, o_bar, dest) as a decision instance.
    SwitchGraph toward(Vertex dest) const { return h.with_endpoints(o_bar, dest); }
};

AugmentedInstance augment(const SwitchGraph& g, ValidationOptions opts = {});

struct DualityReport {
    Arrival original = Arrival::DoesNotTerminate;
    Arrival toward_d = Arrival::DoesNotTerminate;
    Arrival toward_d_bar = Arrival::DoesNotTerminate;
    bool pass = false;
};

// Decides (G, o, d), (H, o_bar, d) and (H, o_bar, d_bar). Passes iff the two
// H verdicts are opposite and (H, o_bar, d) agrees with G.
DualityReport check_duality(const SwitchGraph& g);

}  // namespace arrival
