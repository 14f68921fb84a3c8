#pragma once

#include <cstdint>
#include <stdexcept>

namespace softuni {

// Enumeration caps. Everything above a cap is refused, never approximated.
struct Limits {
    std::uint64_t max_soft_elements = 1'000'000;        // choice-function enumeration
    std::uint64_t max_subsets = std::uint64_t{1} << 20; // soft-subset enumeration
    int max_filter_elements = 16;                       // completeness: 2^n - 1 generators
    int max_exact_cover = 12;                           // exact minimum-cover search
    int max_base_members = 512;                         // saturation blow-up guard
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace softuni
