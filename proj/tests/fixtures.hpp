#pragma once

#include <random>

#include "arrival/graph.hpp"

namespace fixtures {

using arrival::SwitchGraph;
using arrival::Vertex;

// Both slots of 0 go straight to dest.
inline SwitchGraph t1() { return SwitchGraph({1, 1}, {1, 1}, 0, 1); }

// 0's even slot is a self-loop, its odd slot reaches dest.
inline SwitchGraph t2() { return SwitchGraph({0, 1}, {1, 1}, 0, 1); }

// 0 and 1 bounce between each other and never reach 2.
inline SwitchGraph t3() { return SwitchGraph({1, 0, 2}, {1, 0, 2}, 0, 2); }

// Any successor maps, origin != dest.
inline SwitchGraph random_graph(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<Vertex> even(n), odd(n);
    for (std::size_t v = 0; v < n; ++v) {
        even[v] = pick(rng);
        odd[v] = pick(rng);
    }
    Vertex o = pick(rng), d = pick(rng);
    while (d == o) d = pick(rng);
    return SwitchGraph(std::move(even), std::move(odd), o, d);
}

}  // namespace fixtures
