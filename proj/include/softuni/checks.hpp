#pragma once

#include <random>

#include "softuni/classical.hpp"
#include "softuni/completeness.hpp"
#include "softuni/instance.hpp"
#include "softuni/report.hpp"

namespace softuni {

struct CheckOptions {
    Limits limits;
    bool allow_invalid = false; // run topology/mapping checks on semi-uniformities
    std::uint64_t seed = 0;     // drives sampled covers and oracle mappings
    int cover_count = 20;       // random covers for the Lebesgue command
    int oracle_maps = 8;        // sampled self-maps for the oracle command
};

CheckReport cmd_validate(const BuiltInstance& inst, const CheckOptions& opts = {});
CheckReport cmd_topology(const BuiltInstance& inst, const CheckOptions& opts = {});
CheckReport cmd_separation(const BuiltInstance& inst, const CheckOptions& opts = {});
CheckReport cmd_map_check(const BuiltMapping& m, const CheckOptions& opts = {});
CheckReport cmd_lebesgue(const BuiltInstance& inst, const std::vector<SoftSet>* covers,
                         const CheckOptions& opts = {});
CheckReport cmd_cover(const BuiltInstance& inst, const CheckOptions& opts = {});
CheckReport cmd_complete(const BuiltInstance& inst, const CheckOptions& opts = {});
CheckReport cmd_oracle(const BuiltInstance& inst, const CheckOptions& opts = {});

/// Random open cover with every soft element inside some single member
/// (topped up with the host when the shuffle misses something).
std::vector<SoftSet> random_open_cover(const SoftTopology& tau, std::mt19937_64& rng);

} // namespace softuni
