#pragma once

#include <cstdint>

#include "softuni/instance.hpp"

namespace softuni {

struct GeneratorProfile {
    int max_universe = 6;
    int max_params = 3;
    int max_base = 4;
    bool allow_invalid = false; // emit a square-root-free base instead
};

/// Deterministic pseudo-random instance: random carrier sections and random
/// reflexive relations (partitions with optional symmetric noise), closed by
/// saturation. Valid mode redraws until the base validates; --allow-invalid
/// redraws until it does not. Identical seeds give byte-identical documents.
InstanceDocument generate_instance(std::uint64_t seed, const GeneratorProfile& profile = {});

/// Same, with the parameter list pinned (for building mapping pairs).
InstanceDocument generate_instance_with_params(std::uint64_t seed,
                                               const std::vector<std::string>& parameters,
                                               const GeneratorProfile& profile = {});

/// A random total mapping between two instances sharing a parameter set,
/// with both endpoints inlined.
MappingDocument generate_mapping(std::uint64_t seed, const InstanceDocument& domain,
                                 const InstanceDocument& codomain);

} // namespace softuni
