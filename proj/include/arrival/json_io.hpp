#pragma once

// Machine-readable forms of the library's values. All writers emit compact
// JSON with keys in a fixed order, so output bytes depend only on the value.

#include <string>
#include <string_view>

#include "arrival/flow_vector.hpp"
#include "arrival/flows.hpp"
#include "arrival/local_search.hpp"
#include "arrival/reduction.hpp"
#include "arrival/simulator.hpp"

namespace arrival {

// {"origin": int, "dest": int, "counts": [int x 2n]}
struct FlowDocument {
    Vertex origin = 0;
    Vertex dest = 0;
    FlowVector flow;
};

// Accepts an optional "kind" field so certificates read back as flows.
FlowDocument parse_flow(std::string_view text);
std::string serialize_flow(const FlowDocument& doc);

// The flow document plus {"kind": "termination"|"non-termination"}.
std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

// {"o_bar": int, "d_bar": int, "x_d": [int...]}
std::string serialize_sidecar(const AugmentedInstance& aug);

std::string serialize_run_outcome(const RunOutcome& outcome);
std::string serialize_flow_report(const FlowCheckReport& report);
std::string serialize_bounds_report(const BoundsReport& report);
std::string serialize_state(const SearchState& state);

}  // namespace arrival
