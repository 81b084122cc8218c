#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arrival/flow_vector.hpp"
#include "arrival/graph.hpp"
#include "arrival/reduction.hpp"

namespace arrival {

// A vertex of H paired with a candidate flow over H's 2m slots, each entry in
// [0, 2^m]. The candidate claims to be a switching flow of (H, o_bar, vertex).
struct SearchState {
    Vertex vertex = 0;
    FlowVector flow;

    friend bool operator==(const SearchState&, const SearchState&) = default;
};

using BitString = std::vector<bool>;

// Hex with the first bit as the most significant bit of the first digit;
// the tail is zero-padded to a whole digit.
std::string to_hex(const BitString& bits);
// Inverse of to_hex for a known bit length. Throws InvalidInput on a bad digit,
// a digit count that does not match, or nonzero padding.
BitString from_hex(const std::string& hex, std::size_t bit_length);

// The local-search instance built from an augmented board H with m vertices.
//
// neighbor():
//   flow not a switching flow of (H, o_bar, v)   -> reset state (o_bar, 0)
//   v in {d, d_bar}                               -> reset state
//   otherwise, with i = x_even(v) - x_odd(v)      -> (succ_i(v), x + unit(v, i))
// potential(): -1 for an invalid flow, the 1-norm of the flow otherwise.
//
// States outside the domain (vertex >= m, an entry above 2^m, wrong dimension)
// behave like invalid flows, so both functions are total.
//
// Bit layout of encode(): ceil(log2 m) bits of vertex index, then 2m fields
// of m + 1 bits each in slot order; every field is big-endian.
class LocalOptInstance {
public:
    explicit LocalOptInstance(AugmentedInstance aug);

    const AugmentedInstance& augmented() const { return aug_; }
    std::size_t vertex_count() const { return aug_.size(); }
    std::uint64_t max_entry() const { return max_entry_; }

    SearchState reset_state() const;
    // What decode() returns for malformed input: (o_bar, every entry 2^m).
    // o_bar has no incoming slots, so this is never a switching flow.
    SearchState invalid_state() const;

    bool in_domain(const SearchState& s) const;
    bool is_valid(const SearchState& s) const;

    SearchState neighbor(const SearchState& s) const;
    std::int64_t potential(const SearchState& s) const;
    bool is_local_optimum(const SearchState& s) const;

    std::size_t vertex_bits() const { return vertex_bits_; }
    std::size_t field_bits() const { return vertex_count() + 1; }
    std::size_t bit_length() const;

    // Throws InvalidInput for a state outside the domain.
    BitString encode(const SearchState& s) const;
    SearchState decode(const BitString& bits) const;

    // Bit-level view with the potential shifted up by one (invalid -> 0,
    // p -> p + 1) so it is nonnegative. Order is preserved, so local optima
    // are the same as for the function-level pair.
    BitString neighbor_bits(const BitString& bits) const;
    std::uint64_t potential_bits(const BitString& bits) const;

private:
    AugmentedInstance aug_;
    std::uint64_t max_entry_;
    std::size_t vertex_bits_;
};

struct SinkOfPathInstance {
    LocalOptInstance problem;
    SearchState start;
};

struct WalkOptions {
    // Defaults to 2m * 2^m + 2 neighbor applications.
    std::optional<std::uint64_t> budget;
    // Sees every state on the walk, the start and the solution included.
    std::function<void(const SearchState&)> on_state;
};

std::uint64_t default_walk_budget(std::size_t m);

struct WalkResult {
    SearchState solution;
    std::uint64_t steps = 0;  // neighbor applications before the solution
};

// Follows neighbor() from start until potential(s) >= potential(neighbor(s)).
// Throws InvalidInput if start is outside the domain, BudgetExhausted if the
// budget runs out.
WalkResult walk_localopt(const LocalOptInstance& inst, const SearchState& start,
                         const WalkOptions& opts = {});

struct SinkResult {
    SearchState solution;
    std::uint64_t r = 0;  // solution == neighbor^r(start)
};

SinkResult walk_sink_of_path(const SinkOfPathInstance& inst, const WalkOptions& opts = {});

enum class CertificateKind { Termination, NonTermination };
const char* to_string(CertificateKind k);

// A switching flow of (H, o_bar, d) (termination) or (H, o_bar, d_bar)
// (non-termination).
struct Certificate {
    CertificateKind kind = CertificateKind::Termination;
    Vertex origin = 0;
    Vertex dest = 0;
    FlowVector flow;
};

// Throws InvalidInput if solution is not a local optimum, and InternalError
// if it is one but its vertex is not terminal or its flow does not verify.
Certificate extract_certificate(const LocalOptInstance& inst, const SearchState& solution);

// augment -> build instance -> walk from the reset state -> extract.
Certificate solve_s_arrival(const SwitchGraph& g);

}  // namespace arrival
