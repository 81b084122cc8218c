#include "arrival/generator.hpp"

#include "arrival/errors.hpp"

namespace arrival {

const char* to_string(GeneratorModel m) {
    return m == GeneratorModel::Uniform ? "uniform" : "layered";
}

GeneratorModel parse_generator_model(const std::string& name) {
    if (name == "uniform") return GeneratorModel::Uniform;
    if (name == "layered") return GeneratorModel::Layered;
    throw InvalidInput("unknown generator model \"" + name + "\" (expected uniform|layered)");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw InvalidInput("uniform_below: empty range");
    }
    // Largest multiple of bound that fits; draws at or above it are rejected.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

SwitchGraph generate(const GeneratorSpec& spec) {
    const std::size_t n = spec.n;
    if (n < 2) {
        throw InvalidInput("generate: n must be at least 2 so that origin != dest");
    }
    std::mt19937_64 rng(spec.seed);
    auto any_vertex = [&] { return static_cast<Vertex>(uniform_below(rng, n)); };
    auto forward_biased = [&](Vertex v) {
        // 3 in 4: strictly higher id; otherwise anywhere.
        if (v + 1 < n && uniform_below(rng, 4) != 0) {
            return static_cast<Vertex>(v + 1 + uniform_below(rng, n - v - 1));
        }
        return any_vertex();
    };

    std::vector<Vertex> even(n), odd(n);
    for (Vertex v = 0; v < n; ++v) {
        if (spec.model == GeneratorModel::Uniform) {
            even[v] = any_vertex();
            odd[v] = any_vertex();
        } else {
            even[v] = forward_biased(v);
            odd[v] = forward_biased(v);
        }
    }
    return SwitchGraph(std::move(even), std::move(odd), 0, static_cast<Vertex>(n - 1));
}

}  // namespace arrival
