#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace arrival {

using Vertex = std::uint32_t;

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
constexpr std::size_t index_of(Parity p) { return static_cast<std::size_t>(p); }
const char* to_string(Parity p);

// One of the two outgoing edge slots of a vertex. Parallel slots (both
// successors equal) stay distinct: flow vectors are indexed by slot.
struct EdgeSlot {
    Vertex tail = 0;
    Parity parity = Parity::Even;

    // Dense index: vertex 0 even, vertex 0 odd, vertex 1 even, ...
    std::size_t index() const { return 2 * static_cast<std::size_t>(tail) + index_of(parity); }
    static EdgeSlot from_index(std::size_t i) {
        return {static_cast<Vertex>(i / 2), (i % 2) ? Parity::Odd : Parity::Even};
    }

    friend bool operator==(const EdgeSlot&, const EdgeSlot&) = default;
};

// A switch graph together with its origin and destination.
//
// Construction does not validate; call validate() or require_valid() before
// handing a graph to any algorithm. Once built, a graph is never mutated.
class SwitchGraph {
public:
    SwitchGraph() = default;
    SwitchGraph(std::vector<Vertex> even, std::vector<Vertex> odd, Vertex origin, Vertex dest,
                std::vector<std::string> labels = {});

    std::size_t size() const { return even_.size(); }
    Vertex origin() const { return origin_; }
    Vertex dest() const { return dest_; }

    Vertex even_succ(Vertex v) const { return even_[v]; }
    Vertex odd_succ(Vertex v) const { return odd_[v]; }
    Vertex succ(Vertex v, Parity p) const { return p == Parity::Even ? even_[v] : odd_[v]; }
    Vertex head(EdgeSlot s) const { return succ(s.tail, s.parity); }

    const std::vector<Vertex>& even() const { return even_; }
    const std::vector<Vertex>& odd() const { return odd_; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::size_t slot_count() const { return 2 * size(); }
    std::vector<EdgeSlot> slots() const;

    // Same board, different endpoints.
    SwitchGraph with_endpoints(Vertex origin, Vertex dest) const;

    friend bool operator==(const SwitchGraph&, const SwitchGraph&) = default;

private:
    std::vector<Vertex> even_;
    std::vector<Vertex> odd_;
    Vertex origin_ = 0;
    Vertex dest_ = 0;
    std::vector<std::string> labels_;
};

struct ValidationOptions {
    // The reduction's exhaustive checks augment a single-vertex graph whose
    // origin is its destination; everything else requires origin != dest.
    bool allow_origin_equals_dest = false;
};

// Every invariant violation, empty when the graph is valid.
std::vector<std::string> validate(const SwitchGraph& g, ValidationOptions opts = {});

// Throws InvalidInput listing the violations.
void require_valid(const SwitchGraph& g, ValidationOptions opts = {});

// Vertices with a directed path (possibly empty) to target, as a membership mask.
std::vector<bool> reverse_reachable(const SwitchGraph& g, Vertex target);

}  // namespace arrival
