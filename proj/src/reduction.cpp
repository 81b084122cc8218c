#include "arrival/reduction.hpp"

namespace arrival {

AugmentedInstance augment(const SwitchGraph& g, ValidationOptions opts) {
    require_valid(g, opts);
    const auto n = static_cast<Vertex>(g.size());
    const Vertex o_bar = n;
    const Vertex d_bar = n + 1;
    const Vertex d = g.dest();

    const std::vector<bool> reaches_d = reverse_reachable(g, d);

    std::vector<Vertex> even(n + 2), odd(n + 2);
    even[o_bar] = odd[o_bar] = g.origin();
    even[d_bar] = odd[d_bar] = d_bar;

    AugmentedInstance aug;
    aug.in_x_d.assign(n + 2, false);
    for (Vertex v = 0; v < n; ++v) {
        if (v == d) {
            even[v] = odd[v] = v;
        } else if (!reaches_d[v]) {
            even[v] = odd[v] = d_bar;
            aug.x_d.push_back(v);
            aug.in_x_d[v] = true;
        } else {
            even[v] = g.even_succ(v);
            odd[v] = g.odd_succ(v);
        }
    }

    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        labels = g.labels();
        labels.push_back("o_bar");
        labels.push_back("d_bar");
    }
    aug.h = SwitchGraph(std::move(even), std::move(odd), o_bar, d, std::move(labels));
    aug.o_bar = o_bar;
    aug.d_bar = d_bar;
    aug.d = d;
    aug.source_origin = g.origin();
    return aug;
}

DualityReport check_duality(const SwitchGraph& g) {
    const AugmentedInstance aug = augment(g);
    DualityReport r;
    r.original = decide_arrival(g);
    r.toward_d = decide_arrival(aug.toward(aug.d));
    r.toward_d_bar = decide_arrival(aug.toward(aug.d_bar));
    const bool exactly_one = (r.toward_d == Arrival::Terminates) !=
                             (r.toward_d_bar == Arrival::Terminates);
    r.pass = exactly_one && r.toward_d == r.original;
    return r;
}

}  // namespace arrival
