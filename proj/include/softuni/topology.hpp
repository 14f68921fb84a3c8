#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "softuni/uniformity.hpp"

namespace softuni {

/// U[x]: sectionwise row of the relation at the element's choice.
SoftSet entourage_ball(const SoftRelation& u, const SoftElement& x);

struct NeighbourhoodFamily {
    SoftElement center;
    std::vector<SoftSet> members; // one ball per base member
};

NeighbourhoodFamily neighbourhood_family(const UniformityBase& base, const SoftElement& x);

/// Open per the induced-topology definition: every soft element of the set
/// has a base-member ball inside it. A set with no soft elements (some
/// section empty) is vacuously open.
bool is_open(const UniformityBase& base, const SoftSet& o, const Limits& limits = {});

/// Flattens soft subsets of a host into bit positions, one bit per
/// (parameter, section atom). Supports hosts with at most 63 such positions.
class SubsetCodec {
public:
    explicit SubsetCodec(SoftSet host);

    const SoftSet& host() const { return host_; }
    int bit_count() const { return int(pos_.size()); }
    std::uint64_t full_mask() const { return full_; }

    std::uint64_t encode(const SoftSet& subset) const;
    SoftSet decode(std::uint64_t mask) const;
    std::uint64_t element_mask(const SoftElement& x) const;
    std::uint64_t ball_mask(const SoftRelation& u, const SoftElement& x) const;

    // nonempty at every parameter block
    bool has_all_sections(std::uint64_t mask) const;

private:
    SoftSet host_;
    std::vector<std::vector<int>> bit_of_;       // [param][universe idx] -> bit or -1
    std::vector<std::pair<int, int>> pos_;       // bit -> (param, universe idx)
    std::vector<std::uint64_t> param_block_;     // mask of one parameter's bits
    std::uint64_t full_ = 0;
};

struct Thm36Check {
    bool contains_empty_and_host = false;
    bool meets_closed = false;
    bool joins_closed = false;
    bool exhaustive = false; // pair checks exhaustive vs sampled
    std::optional<std::pair<std::uint64_t, std::uint64_t>> meet_counterexample;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> join_counterexample;

    bool ok() const { return contains_empty_and_host && meets_closed && joins_closed; }
};

/// The induced topology of a base, explicitly enumerated (inside the subset
/// cap). Opens are stored as codec masks in ascending order.
class SoftTopology {
public:
    SoftTopology(SoftSet host, SubsetCodec codec, std::vector<std::uint64_t> opens,
                 Thm36Check thm36);

    const SoftSet& host() const { return host_; }
    const SubsetCodec& codec() const { return codec_; }
    const std::vector<std::uint64_t>& open_masks() const { return opens_; }
    std::size_t size() const { return opens_.size(); }

    bool contains_mask(std::uint64_t mask) const;
    bool contains(const SoftSet& o) const { return contains_mask(codec_.encode(o)); }
    SoftSet open_at(std::size_t i) const { return codec_.decode(opens_[i]); }

    // some section empty: open only because it has no soft elements
    bool is_vacuous_mask(std::uint64_t mask) const { return !codec_.has_all_sections(mask); }
    std::size_t vacuous_open_count() const;

    std::uint64_t interior_mask(std::uint64_t mask) const; // union of opens inside
    std::uint64_t closure_mask(std::uint64_t mask) const;  // meet of closed supersets
    bool is_closed_mask(std::uint64_t mask) const;

    const Thm36Check& thm36() const { return thm36_; }

private:
    SoftSet host_;
    SubsetCodec codec_;
    std::vector<std::uint64_t> opens_;
    Thm36Check thm36_;
};

/// Every soft subset of the host tested for openness. Requires a validated
/// base: valid, or a semi-uniformity for the relaxed workflows.
SoftTopology enumerate_topology(const UniformityBase& base, const Limits& limits = {});

struct ClosureResult {
    SoftSet set;
    bool is_closed; // the family of opens need not be union-closed, so the
                    // meet of closed supersets can fail to be closed itself
};

ClosureResult closure(const SoftTopology& tau, const SoftSet& a);

/// Meet of all base members equal to the diagonal. The base meet equals the
/// uniformity-wide meet because the base is downward cofinal.
bool is_separated(const UniformityBase& base);

struct T1Check {
    bool t1 = false;
    bool vacuous = false;       // non-carrier host: no soft elements to separate
    bool oracle_ran = false;    // enumerated-topology cross-check
};

/// Soft T1 via basic balls: for each ordered pair of distinct soft elements,
/// some member ball around the first misses the second. When a topology is
/// supplied the enumerated-opens definition is evaluated too and must agree.
T1Check is_soft_t1(const UniformityBase& base, const SoftTopology* oracle = nullptr,
                   const Limits& limits = {});

struct RegularityWitness {
    SoftElement point;
    SoftSet closed_set;
    SoftSet open_around_point;
    SoftSet open_around_closed;
};

struct RegularityCheck {
    bool regular = true;
    bool vacuous = false;
    std::uint64_t pairs_checked = 0;
    std::uint64_t via_recipe = 0;   // witness from the symmetric-square-root construction
    std::uint64_t via_fallback = 0; // exhaustive open-pair search
    std::vector<RegularityWitness> samples;
    std::optional<RegularityWitness> failure; // point/closed pair with no witness
};

/// For every soft element and every closed set it sectionwise avoids, find
/// disjoint opens separating them. The constructive witness takes the ball of
/// the minimal member (symmetric, idempotent under composition); an
/// exhaustive open-pair search backs it up.
RegularityCheck is_soft_regular(const UniformityBase& base, const Limits& limits = {});

} // namespace softuni
