#pragma once

#include <optional>
#include <vector>

#include "softuni/topology.hpp"

namespace softuni {

/// One total function per parameter, F(e) -> G(e). Domain and codomain share
/// the parameter set; the universes may differ.
class SoftMapping {
public:
    // maps[p] is sized by the domain universe; entries are codomain universe
    // indices and are read only on the domain section.
    SoftMapping(SoftSet domain, SoftSet codomain, std::vector<std::vector<int>> maps);

    static SoftMapping identity(const SoftSet& host);
    static SoftMapping constant(const SoftSet& domain, const SoftSet& codomain,
                                const SoftElement& value);

    const SoftSet& domain() const { return domain_; }
    const SoftSet& codomain() const { return codomain_; }
    int map(int p, int x) const { return maps_[p][x]; }
    const std::vector<std::vector<int>>& tables() const { return maps_; }

private:
    SoftSet domain_;
    SoftSet codomain_;
    std::vector<std::vector<int>> maps_;
};

SoftElement apply(const SoftMapping& f, const SoftElement& x);

/// Sectionwise preimage of a soft subset of the codomain.
SoftSet preimage(const SoftMapping& f, const SoftSet& o);

/// (f x f)(U): parameterwise image relation on the codomain.
SoftRelation pushforward_relation(const SoftMapping& f, const SoftRelation& u);

SoftMapping compose_mappings(const SoftMapping& g, const SoftMapping& f);

struct ContinuityCheck {
    bool pointwise = false;            // primary: a domain ball maps into each codomain ball
    std::optional<bool> topological;   // secondary: literal preimage-of-opens (under cap)
    bool vacuous = false;              // non-carrier domain: pointwise quantifier empty

    // The definitional verdict. The two paths provably agree on valid bases
    // (asserted); on semi-uniformities they can genuinely differ and the
    // topological one is the definition.
    bool continuous() const { return topological.value_or(pointwise); }
};

ContinuityCheck is_soft_continuous(const SoftMapping& f, const UniformityBase& dom,
                                   const UniformityBase& cod, const Limits& limits = {},
                                   const SoftTopology* tau_dom = nullptr,
                                   const SoftTopology* tau_cod = nullptr);

struct UniformContinuityCheck {
    bool uniformly_continuous = false;
    std::vector<int> witness;          // codomain member -> domain member index
    std::optional<int> failing_member; // codomain member with no witness
};

UniformContinuityCheck is_soft_uniformly_continuous(const SoftMapping& f,
                                                    const UniformityBase& dom,
                                                    const UniformityBase& cod);

struct LebesgueResult {
    SoftRelation entourage;
    std::vector<int> assignment; // per host soft element: cover index holding its ball
    bool verified = false;       // membership + refinement re-checked after construction
};

/// A single entourage whose balls refine the given open cover. Follows the
/// compactness proof: per element pick a covering member, a member ball
/// inside it, a symmetric square root below that member, and meet the picks.
/// Every soft element must lie inside some single cover member (the proof's
/// hypothesis; a merely sectionwise union admits counterexamples). A
/// precomputed topology speeds up the openness precondition.
LebesgueResult lebesgue_entourage(const UniformityBase& base, const std::vector<SoftSet>& cover,
                                  const Limits& limits = {}, const SoftTopology* tau = nullptr);

struct HeineCantorReport {
    ContinuityCheck continuity;
    UniformContinuityCheck uniform;

    struct MemberTrace {
        int cod_member;
        SoftRelation symmetric_root; // W symmetric with W o W below the member
        std::size_t cover_size;      // preimages of W-balls at image points
        SoftRelation entourage;      // Lebesgue pick for that cover
        bool verified;               // (f x f)(entourage) below the member
    };
    std::vector<MemberTrace> trace;  // reconstructed only when continuous

    bool agree() const { return continuity.continuous() == uniform.uniformly_continuous; }
};

/// Continuity forces uniform continuity here (finite carrier hosts are
/// compact); the report reconstructs the proof chain member by member.
/// Requires valid bases and a carrier domain.
HeineCantorReport heine_cantor_check(const SoftMapping& f, const UniformityBase& dom,
                                     const UniformityBase& cod, const Limits& limits = {});

} // namespace softuni
