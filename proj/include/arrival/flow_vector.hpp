#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arrival/errors.hpp"
#include "arrival/graph.hpp"

namespace arrival {

// Adds with a CounterOverflow instead of wrapping.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw CounterOverflow("counter overflow: 64-bit range exceeded");
    }
    return out;
}

// A nonnegative count per edge slot of a graph with vertex_count() vertices,
// stored in slot order (vertex 0 even, vertex 0 odd, vertex 1 even, ...).
// Run profiles, switching flows and candidate flows all use this shape.
class FlowVector {
public:
    FlowVector() = default;
    explicit FlowVector(std::size_t vertex_count) : counts_(2 * vertex_count, 0) {}
    explicit FlowVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
        if (counts_.size() % 2 != 0) {
            throw InvalidInput("flow vector needs an even number of entries (two per vertex)");
        }
    }

    std::size_t vertex_count() const { return counts_.size() / 2; }
    std::size_t size() const { return counts_.size(); }

    std::uint64_t operator[](EdgeSlot s) const { return counts_[s.index()]; }
    std::uint64_t at(Vertex v, Parity p) const { return counts_[EdgeSlot{v, p}.index()]; }
    std::uint64_t even(Vertex v) const { return at(v, Parity::Even); }
    std::uint64_t odd(Vertex v) const { return at(v, Parity::Odd); }

    void set(EdgeSlot s, std::uint64_t value) { counts_[s.index()] = value; }
    void increment(EdgeSlot s) { counts_[s.index()] = checked_add(counts_[s.index()], 1); }

    // Sum of all entries (the 1-norm).
    std::uint64_t total() const {
        std::uint64_t sum = 0;
        for (auto c : counts_) sum = checked_add(sum, c);
        return sum;
    }

    bool is_zero() const {
        for (auto c : counts_)
            if (c != 0) return false;
        return true;
    }

    const std::vector<std::uint64_t>& counts() const { return counts_; }

    FlowVector& operator+=(const FlowVector& other) {
        if (other.size() != size()) {
            throw InvalidInput("flow vector dimension mismatch");
        }
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            counts_[i] = checked_add(counts_[i], other.counts_[i]);
        }
        return *this;
    }
    friend FlowVector operator+(FlowVector a, const FlowVector& b) { return a += b; }

    friend bool operator==(const FlowVector&, const FlowVector&) = default;

private:
    std::vector<std::uint64_t> counts_;
};

}  // namespace arrival
