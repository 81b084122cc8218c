#include "arrival/graph.hpp"

#include <deque>
#include <sstream>

#include "arrival/errors.hpp"

namespace arrival {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

SwitchGraph::SwitchGraph(std::vector<Vertex> even, std::vector<Vertex> odd, Vertex origin,
                         Vertex dest, std::vector<std::string> labels)
    : even_(std::move(even)),
      odd_(std::move(odd)),
      origin_(origin),
      dest_(dest),
      labels_(std::move(labels)) {}

std::vector<EdgeSlot> SwitchGraph::slots() const {
    std::vector<EdgeSlot> out;
    out.reserve(slot_count());
    for (std::size_t i = 0; i < slot_count(); ++i) {
        out.push_back(EdgeSlot::from_index(i));
    }
    return out;
}

SwitchGraph SwitchGraph::with_endpoints(Vertex origin, Vertex dest) const {
    return SwitchGraph(even_, odd_, origin, dest, labels_);
}

std::vector<std::string> validate(const SwitchGraph& g, ValidationOptions opts) {
    std::vector<std::string> violations;
    const std::size_t n = g.size();
    auto say = [&violations](auto&&... parts) {
        std::ostringstream os;
        (os << ... << parts);
        violations.push_back(os.str());
    };

    if (n == 0) {
        say("vertex count must be positive");
    }
    if (g.odd().size() != n) {
        say("odd has ", g.odd().size(), " entries, expected ", n);
    }
    if (!g.labels().empty() && g.labels().size() != n) {
        say("labels has ", g.labels().size(), " entries, expected ", n);
    }
    auto check_succ = [&](const std::vector<Vertex>& succ, const char* name) {
        for (std::size_t v = 0; v < succ.size(); ++v) {
            if (succ[v] >= n) {
                say(name, "[", v, "]: successor out of range (", succ[v], " >= ", n, ")");
            }
        }
    };
    check_succ(g.even(), "even");
    check_succ(g.odd(), "odd");
    if (g.origin() >= n) {
        say("origin out of range (", g.origin(), " >= ", n, ")");
    }
    if (g.dest() >= n) {
        say("dest out of range (", g.dest(), " >= ", n, ")");
    }
    if (g.origin() == g.dest() && !opts.allow_origin_equals_dest) {
        say("origin equals dest (", g.origin(), ")");
    }
    return violations;
}

void require_valid(const SwitchGraph& g, ValidationOptions opts) {
    auto violations = validate(g, opts);
    if (violations.empty()) {
        return;
    }
    std::string msg = "invalid switch graph:";
    for (const auto& v : violations) {
        msg += "\n  " + v;
    }
    throw InvalidInput(msg);
}

std::vector<bool> reverse_reachable(const SwitchGraph& g, Vertex target) {
    const std::size_t n = g.size();
    if (target >= n) {
        throw InvalidInput("reverse_reachable: target out of range");
    }
    std::vector<std::vector<Vertex>> preds(n);
    for (Vertex v = 0; v < n; ++v) {
        preds[g.even_succ(v)].push_back(v);
        if (g.odd_succ(v) != g.even_succ(v)) {
            preds[g.odd_succ(v)].push_back(v);
        }
    }
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{target};
    seen[target] = true;
    while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop_front();
        for (Vertex v : preds[w]) {
            if (!seen[v]) {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    return seen;
}

}  // namespace arrival
