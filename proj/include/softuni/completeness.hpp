#pragma once

#include <optional>
#include <vector>

#include "softuni/topology.hpp"

namespace softuni {

/// A filter on the finite set of soft elements, represented by its smallest
/// member. Every filter on a finite set is principal, so this is exhaustive.
class PrincipalFilter {
public:
    PrincipalFilter(SoftSet host, std::vector<SoftElement> generator);

    const SoftSet& host() const { return host_; }
    const std::vector<SoftElement>& generator() const { return gen_; }

private:
    SoftSet host_;
    std::vector<SoftElement> gen_; // sorted, deduplicated, nonempty
};

struct MemberCover {
    int member;
    std::vector<SoftElement> centers; // greedy cover, lexicographic tie-break
    std::optional<int> exact_minimum; // exact search when the element count allows
};

enum class CoverStatus { Bounded, NotApplicable };

struct TotalBoundednessReport {
    CoverStatus status = CoverStatus::NotApplicable;
    std::vector<MemberCover> covers; // one per base member
    bool bounded() const { return status == CoverStatus::Bounded; }
};

/// Finitely many balls of each member covering the host, sectionwise. On a
/// non-carrier host no ball family can reach the empty section, so the
/// verdict is "not applicable" rather than a boolean.
TotalBoundednessReport is_totally_bounded(const UniformityBase& base, const Limits& limits = {});

/// Every ordered generator pair lands inside every base member at every
/// parameter. Base members suffice: they sit below everything else the
/// uniformity contains, and a principal filter's smallest member is its
/// generator.
bool is_cauchy(const UniformityBase& base, const PrincipalFilter& filter);

/// Every basic ball around the limit point swallows the generator.
bool converges_to(const UniformityBase& base, const PrincipalFilter& filter,
                  const SoftElement& p);

/// Points whose every basic ball meets the generator.
std::vector<SoftElement> cluster_points(const UniformityBase& base,
                                        const PrincipalFilter& filter,
                                        const Limits& limits = {});

struct FilterVerdict {
    std::vector<int> generator;       // element indices into the host enumeration
    bool cauchy = false;
    std::optional<int> limit;         // an element index, when convergent
};

struct CompletenessReport {
    bool complete = false;
    bool applicable = false;          // carrier host within the filter cap
    std::uint64_t filters_checked = 0;
    std::uint64_t cauchy_count = 0;
    std::vector<FilterVerdict> cauchy_filters; // verdict per Cauchy filter
};

/// Enumerates every principal filter (nonempty generator set), keeps the
/// Cauchy ones, and checks each converges somewhere.
CompletenessReport is_complete(const UniformityBase& base, const Limits& limits = {});

struct Thm54Trace {
    SoftElement limit; // the chosen cluster point
    struct Step {
        int member;                  // base member U
        int root_member;             // member whose square sits below U
        SoftRelation symmetric_root; // V = root meet its inverse
        SoftElement meeting_point;   // generator element inside V[limit]
        bool verified;               // generator inside the elements of U[limit]
    };
    std::vector<Step> steps;
    bool verified = false;
};

/// Reconstructs the compactness-implies-completeness argument for one Cauchy
/// filter: pick a cluster point, and per member walk the symmetric square
/// root to show the generator sits inside the member ball at the point.
Thm54Trace thm54_witness(const UniformityBase& base, const PrincipalFilter& filter,
                         const Limits& limits = {});

} // namespace softuni
