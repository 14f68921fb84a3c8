#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "softuni/core.hpp"
#include "softuni/rational.hpp"

namespace softuni {

enum class BaseAxiom { U1Diagonal, U2Intersection, U3Inverse, U4SquareRoot };

const char* axiom_name(BaseAxiom a);

struct AxiomViolation {
    BaseAxiom axiom;
    std::vector<std::string> members; // offending member name(s)
    std::string param;                // witnessing parameter
    std::string pair_first;           // witnessing pair, by atom name
    std::string pair_second;
    std::string message;
};

enum class ValidationStatus { Unchecked, Valid, Invalid };

struct BaseValidation {
    ValidationStatus status = ValidationStatus::Unchecked;
    std::vector<AxiomViolation> violations;

    bool ok() const { return status == ValidationStatus::Valid; }
    bool axiom_holds(BaseAxiom a) const;
};

/// A finite family of diagonal-containing soft relations standing for the
/// uniformity it generates upward: U is a member of the represented
/// uniformity exactly when some base member sits below U. The family itself
/// must realize (U1)-(U4) in base form; upward closure (U5) is implicit.
class UniformityBase {
public:
    UniformityBase(SoftSet host, std::vector<SoftRelation> members,
                   std::vector<std::string> names = {});

    const SoftSet& host() const { return host_; }
    int size() const { return int(members_.size()); }
    const SoftRelation& member(int i) const { return members_[i]; }
    const std::vector<SoftRelation>& members() const { return members_; }
    const std::string& member_name(int i) const { return names_[i]; }
    const std::vector<std::string>& member_names() const { return names_; }

    const BaseValidation& validate();
    const BaseValidation& validation() const { return validation_; }
    bool validated_ok() const { return validation_.ok(); }

    // (U1)-(U3) hold in base form; (U4) may fail. The relaxed checkers accept
    // these "semi-uniformities".
    bool is_semi_uniformity() const;

    // Index of a member whose square sits below member i, or -1. Filled by
    // validate().
    int square_root_of(int i) const { return square_root_[i]; }

    /// The meet of all members. For any base satisfying (U2) in base form
    /// this is itself a member (iterate the pairwise witness), and it is the
    /// smallest entourage of the represented uniformity.
    const SoftRelation& minimal_member() const;
    int minimal_member_index() const;

private:
    void require_checked() const;

    SoftSet host_;
    std::vector<SoftRelation> members_;
    std::vector<std::string> names_;
    BaseValidation validation_;
    std::vector<int> square_root_;
    mutable std::optional<SoftRelation> meet_of_all_;
    mutable int minimal_index_ = -2; // -2 unknown, -1 absent
};

BaseValidation validate_base(UniformityBase& base);

/// Membership in the represented uniformity: some base member below u.
/// Requires a validated-valid base.
bool member_of(const UniformityBase& base, const SoftRelation& u);

struct SaturationResult {
    UniformityBase base;                                 // meet/inverse closed, validated
    bool valid = false;                                  // (U4) held
    std::vector<std::string> members_missing_square_root;
};

/// Closes the input family under pairwise meet and inverse, then validates.
/// Inputs must contain the diagonal. (U4) is verified, never forced: there is
/// no canonical way to shrink a family into a uniformity, so failures are
/// reported with the members that lack square roots.
SaturationResult saturate(const SoftSet& host, std::vector<SoftRelation> relations,
                          std::vector<std::string> names = {}, const Limits& limits = {});

/// Base {diagonal}: generates every diagonal-containing relation.
UniformityBase discrete_uniformity(const SoftSet& host);

/// One exact metric per parameter, checked exhaustively at construction.
class MetricFamily {
public:
    // dist[p] is a full universe-sized matrix; only entries inside the
    // section square are read.
    MetricFamily(SoftSet host, std::vector<std::vector<std::vector<Rational>>> dist);

    const SoftSet& host() const { return host_; }
    const Rational& distance(int p, int x, int y) const { return dist_[p][x][y]; }

    // Smallest strictly positive distance across all parameters; empty when
    // every section is a singleton or empty.
    std::optional<Rational> min_positive_distance() const;

private:
    SoftSet host_;
    std::vector<std::vector<std::vector<Rational>>> dist_;
};

/// Entourages H(eps) = { (x,y) : d(x,y) < eps }, parameterwise, for a strictly
/// descending positive epsilon grid. The grid is extended with halves until
/// every member has a square root (the triangle inequality makes eps/2 work),
/// which terminates because any eps below the least positive distance yields
/// the diagonal. The result is meet/inverse closed by monotonicity of H.
UniformityBase metric_uniformity(const MetricFamily& metric, std::vector<Rational> epsilons);

struct SymmetricRoot {
    SoftRelation relation; // symmetric, relation o relation below the target
    int via_member;        // member whose square witnessed the construction
};

/// A symmetric member of the represented uniformity whose square sits below
/// u. Exists for every u the uniformity contains, by (U4) plus meet with the
/// inverse. Requires a validated-valid base.
SymmetricRoot symmetric_square_root(const UniformityBase& base, const SoftRelation& u);

} // namespace softuni
