#include "arrival/local_search.hpp"

#include <bit>

#include "arrival/errors.hpp"
#include "arrival/flows.hpp"

namespace arrival {

namespace {

// Keeps 2m * 2^m, the largest potential, inside int64.
constexpr std::size_t kMaxEncodableVertices = 56;

std::size_t ceil_log2(std::size_t m) { return m <= 1 ? 0 : std::bit_width(m - 1); }

void put_bits(BitString& out, std::uint64_t value, std::size_t width) {
    for (std::size_t i = width; i-- > 0;) {
        out.push_back((value >> i) & 1U);
    }
}

std::uint64_t take_bits(const BitString& in, std::size_t& pos, std::size_t width) {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < width; ++i) {
        value = (value << 1) | (in[pos++] ? 1U : 0U);
    }
    return value;
}

}  // namespace

std::string to_hex(const BitString& bits) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve((bits.size() + 3) / 4);
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        unsigned nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble = (nibble << 1) | (i + j < bits.size() && bits[i + j] ? 1U : 0U);
        }
        out.push_back(kDigits[nibble]);
    }
    return out;
}

BitString from_hex(const std::string& hex, std::size_t bit_length) {
    if (hex.size() != (bit_length + 3) / 4) {
        throw InvalidInput("hex state has " + std::to_string(hex.size()) + " digits, expected " +
                           std::to_string((bit_length + 3) / 4));
    }
    BitString bits;
    bits.reserve(hex.size() * 4);
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const char c = hex[i];
        unsigned nibble;
        if (c >= '0' && c <= '9') {
            nibble = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            nibble = static_cast<unsigned>(c - 'a' + 10);
        } else if (c >= 'A' && c <= 'F') {
            nibble = static_cast<unsigned>(c - 'A' + 10);
        } else {
            throw InvalidInput("hex state: bad digit at position " + std::to_string(i));
        }
        put_bits(bits, nibble, 4);
    }
    for (std::size_t i = bit_length; i < bits.size(); ++i) {
        if (bits[i]) throw InvalidInput("hex state: nonzero padding bits");
    }
    bits.resize(bit_length);
    return bits;
}

LocalOptInstance::LocalOptInstance(AugmentedInstance aug)
    : aug_(std::move(aug)), max_entry_(0), vertex_bits_(ceil_log2(aug_.size())) {
    if (aug_.size() > kMaxEncodableVertices) {
        throw InvalidInput("local search instance: " + std::to_string(aug_.size()) +
                           " vertices exceeds the 64-bit entry limit of " +
                           std::to_string(kMaxEncodableVertices));
    }
    max_entry_ = std::uint64_t{1} << aug_.size();
}

SearchState LocalOptInstance::reset_state() const {
    return {aug_.o_bar, FlowVector(vertex_count())};
}

SearchState LocalOptInstance::invalid_state() const {
    return {aug_.o_bar,
            FlowVector(std::vector<std::uint64_t>(2 * vertex_count(), max_entry_))};
}

bool LocalOptInstance::in_domain(const SearchState& s) const {
    if (s.vertex >= vertex_count() || s.flow.vertex_count() != vertex_count()) return false;
    for (auto c : s.flow.counts()) {
        if (c > max_entry_) return false;
    }
    return true;
}

bool LocalOptInstance::is_valid(const SearchState& s) const {
    return in_domain(s) && is_switching_flow(aug_.h, aug_.o_bar, s.vertex, s.flow);
}

SearchState LocalOptInstance::neighbor(const SearchState& s) const {
    if (!is_valid(s) || aug_.is_terminal(s.vertex)) {
        return reset_state();
    }
    const Vertex v = s.vertex;
    const EdgeSlot slot{v, s.flow.even(v) == s.flow.odd(v) ? Parity::Even : Parity::Odd};
    if (s.flow[slot] >= max_entry_) {
        throw InternalError("neighbor: slot count would exceed 2^m");
    }
    SearchState next{aug_.h.head(slot), s.flow};
    next.flow.increment(slot);
    return next;
}

std::int64_t LocalOptInstance::potential(const SearchState& s) const {
    if (!is_valid(s)) return -1;
    return static_cast<std::int64_t>(s.flow.total());
}

bool LocalOptInstance::is_local_optimum(const SearchState& s) const {
    return potential(s) >= potential(neighbor(s));
}

std::size_t LocalOptInstance::bit_length() const {
    return vertex_bits_ + 2 * vertex_count() * field_bits();
}

BitString LocalOptInstance::encode(const SearchState& s) const {
    if (!in_domain(s)) {
        throw InvalidInput("encode: state outside the domain");
    }
    BitString out;
    out.reserve(bit_length());
    put_bits(out, s.vertex, vertex_bits_);
    for (auto c : s.flow.counts()) {
        put_bits(out, c, field_bits());
    }
    return out;
}

SearchState LocalOptInstance::decode(const BitString& bits) const {
    if (bits.size() != bit_length()) return invalid_state();
    std::size_t pos = 0;
    const std::uint64_t vertex = take_bits(bits, pos, vertex_bits_);
    if (vertex >= vertex_count()) return invalid_state();
    std::vector<std::uint64_t> counts(2 * vertex_count());
    for (auto& c : counts) {
        c = take_bits(bits, pos, field_bits());
        if (c > max_entry_) return invalid_state();
    }
    return {static_cast<Vertex>(vertex), FlowVector(std::move(counts))};
}

BitString LocalOptInstance::neighbor_bits(const BitString& bits) const {
    return encode(neighbor(decode(bits)));
}

std::uint64_t LocalOptInstance::potential_bits(const BitString& bits) const {
    return static_cast<std::uint64_t>(potential(decode(bits)) + 1);
}

std::uint64_t default_walk_budget(std::size_t m) {
    // 2m * 2^m + 2; m is capped well below the point where this overflows.
    return checked_add((2 * std::uint64_t{m}) << m, 2);
}

namespace {

WalkResult iterate_to_optimum(const LocalOptInstance& inst, const SearchState& start,
                              const WalkOptions& opts) {
    if (!inst.in_domain(start)) {
        throw InvalidInput("walk: start state outside the domain");
    }
    const std::uint64_t budget = opts.budget.value_or(default_walk_budget(inst.vertex_count()));
    WalkResult result{start, 0};
    std::int64_t here = inst.potential(result.solution);
    while (true) {
        if (opts.on_state) opts.on_state(result.solution);
        SearchState next = inst.neighbor(result.solution);
        const std::int64_t there = inst.potential(next);
        if (here >= there) {
            return result;
        }
        if (result.steps >= budget) {
            throw BudgetExhausted("walk: no local optimum within " + std::to_string(budget) +
                                  " steps");
        }
        result.solution = std::move(next);
        here = there;
        ++result.steps;
    }
}

}  // namespace

WalkResult walk_localopt(const LocalOptInstance& inst, const SearchState& start,
                         const WalkOptions& opts) {
    return iterate_to_optimum(inst, start, opts);
}

SinkResult walk_sink_of_path(const SinkOfPathInstance& inst, const WalkOptions& opts) {
    WalkResult w = iterate_to_optimum(inst.problem, inst.start, opts);
    return {std::move(w.solution), w.steps};
}

const char* to_string(CertificateKind k) {
    return k == CertificateKind::Termination ? "termination" : "non-termination";
}

Certificate extract_certificate(const LocalOptInstance& inst, const SearchState& solution) {
    if (!inst.in_domain(solution) || !inst.is_local_optimum(solution)) {
        throw InvalidInput("extract_certificate: state is not a local optimum");
    }
    const AugmentedInstance& aug = inst.augmented();
    if (!aug.is_terminal(solution.vertex) || !inst.is_valid(solution)) {
        throw InternalError("non-conforming local optimum at vertex " +
                            std::to_string(solution.vertex));
    }
    Certificate cert;
    cert.kind = solution.vertex == aug.d ? CertificateKind::Termination
                                         : CertificateKind::NonTermination;
    cert.origin = aug.o_bar;
    cert.dest = solution.vertex;
    cert.flow = solution.flow;
    return cert;
}

Certificate solve_s_arrival(const SwitchGraph& g) {
    LocalOptInstance inst(augment(g));
    const WalkResult walk = walk_localopt(inst, inst.reset_state());
    return extract_certificate(inst, walk.solution);
}

}  // namespace arrival
