#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "arrival/graph.hpp"

namespace arrival {

enum class GeneratorModel {
    // Every successor independently uniform over all vertices.
    Uniform,
    // Successors lean toward higher ids and dest is the last vertex, so most
    // instances terminate.
    Layered,
};

const char* to_string(GeneratorModel m);
GeneratorModel parse_generator_model(const std::string& name);

struct GeneratorSpec {
    std::size_t n = 2;
    std::uint64_t seed = 0;
    GeneratorModel model = GeneratorModel::Uniform;
};

// Deterministic across platforms: mt19937_64 plus our own bounded draw (the
// standard distributions are implementation-defined). origin = 0, dest = n - 1.
// Throws InvalidInput for n < 2.
SwitchGraph generate(const GeneratorSpec& spec);

// Uniform integer in [0, bound) by rejection sampling.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// splitmix64 finalizer; derives independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace arrival
