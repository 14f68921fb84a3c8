#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "softuni/bits.hpp"
#include "softuni/limits.hpp"

namespace softuni {

/// Finite ground set of atoms. The construction order of the atoms is the
/// canonical order used by every enumeration and every serialized output.
class Universe {
public:
    explicit Universe(std::vector<std::string> atoms);

    int size() const { return int(atoms_.size()); }
    const std::string& name(int i) const { return atoms_[i]; }
    std::optional<int> index_of(std::string_view atom) const;
    const std::vector<std::string>& atoms() const { return atoms_; }

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.atoms_ == b.atoms_;
    }

private:
    std::vector<std::string> atoms_;
    std::unordered_map<std::string, int> index_;
};

class ParameterSet {
public:
    explicit ParameterSet(std::vector<std::string> names);

    int size() const { return int(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    std::optional<int> index_of(std::string_view name) const;
    const std::vector<std::string>& names() const { return names_; }

    friend bool operator==(const ParameterSet& a, const ParameterSet& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;
using ParameterSetPtr = std::shared_ptr<const ParameterSet>;

/// A parameter-indexed family of subsets of the universe. One section per
/// parameter; a set is a "carrier" when every section is nonempty (only
/// carriers have soft elements).
class SoftSet {
public:
    SoftSet(UniversePtr universe, ParameterSetPtr params, std::vector<BitVec> sections);

    static SoftSet empty_like(const SoftSet& host);

    const Universe& universe() const { return *universe_; }
    const ParameterSet& params() const { return *params_; }
    const UniversePtr& universe_ptr() const { return universe_; }
    const ParameterSetPtr& params_ptr() const { return params_; }

    int param_count() const { return params_->size(); }
    const BitVec& section(int p) const { return sections_[p]; }
    const std::vector<BitVec>& sections() const { return sections_; }

    bool same_space(const SoftSet& o) const;
    bool is_carrier() const;
    bool is_empty() const; // every section empty

    // Saturating product of section sizes.
    std::uint64_t soft_element_count() const;

    bool is_subset_of(const SoftSet& o) const;

    friend SoftSet operator|(const SoftSet& a, const SoftSet& b);
    friend SoftSet operator&(const SoftSet& a, const SoftSet& b);
    SoftSet complement_in(const SoftSet& host) const;

    friend bool operator==(const SoftSet& a, const SoftSet& b);

    std::string to_string() const;

private:
    UniversePtr universe_;
    ParameterSetPtr params_;
    std::vector<BitVec> sections_;
};

/// A choice function: one universe element per parameter, drawn from the host
/// section. Equality is extensional (same space, same choices); the host it
/// was validated against is not part of the identity.
class SoftElement {
public:
    SoftElement(const SoftSet& host, std::vector<int> choice);

    int at(int p) const { return choice_[p]; }
    const std::vector<int>& choices() const { return choice_; }
    int param_count() const { return int(choice_.size()); }

    const Universe& universe() const { return *universe_; }
    const ParameterSet& params() const { return *params_; }

    // x in_s S: the choice lands inside S's section at every parameter.
    bool member_of(const SoftSet& s) const;

    friend bool operator==(const SoftElement& a, const SoftElement& b);
    friend bool operator<(const SoftElement& a, const SoftElement& b) {
        return a.choice_ < b.choice_;
    }

    std::string to_string() const;

private:
    UniversePtr universe_;
    ParameterSetPtr params_;
    std::vector<int> choice_;
};

/// A parameter-indexed family of binary relations, each confined to the
/// square of its host section.
class SoftRelation {
public:
    SoftRelation(SoftSet host, std::vector<BitMatrix> graphs);

    const SoftSet& host() const { return host_; }
    int param_count() const { return host_.param_count(); }
    const BitMatrix& graph(int p) const { return graphs_[p]; }
    const std::vector<BitMatrix>& graphs() const { return graphs_; }

    bool contains_pair(int p, int x, int y) const { return graphs_[p].test(x, y); }
    int pair_count() const;

    friend bool operator==(const SoftRelation& a, const SoftRelation& b);
    friend bool operator<(const SoftRelation& a, const SoftRelation& b) {
        return a.graphs_ < b.graphs_;
    }

    std::string to_string() const;

private:
    SoftSet host_;
    std::vector<BitMatrix> graphs_;
};

// --- relation algebra --------------------------------------------------

SoftRelation diagonal(const SoftSet& host);
SoftRelation full_relation(const SoftSet& host);

SoftRelation inverse(const SoftRelation& r);

// Order follows the source convention: (R o S) applies S first, then R.
// (x,z) in (R o S)(e)  iff  exists y with (x,y) in S(e) and (y,z) in R(e).
SoftRelation compose(const SoftRelation& r, const SoftRelation& s);

SoftRelation meet(const SoftRelation& a, const SoftRelation& b);
SoftRelation join(const SoftRelation& a, const SoftRelation& b);
bool is_subrelation(const SoftRelation& a, const SoftRelation& b);

bool contains_diagonal(const SoftRelation& r);
bool is_symmetric(const SoftRelation& r);

// (x,y) in_s R: pairs land in the graph at every parameter.
bool pair_in(const SoftRelation& r, const SoftElement& x, const SoftElement& y);

/// Per-parameter reflexivity/symmetry/transitivity. Each flag is computed
/// both by direct quantification over pairs and through the diagonal /
/// inverse / composition characterizations; a mismatch throws (it would be a
/// bug in the algebra, not bad input).
struct RelationProperties {
    std::vector<bool> reflexive;
    std::vector<bool> symmetric;
    std::vector<bool> transitive;

    bool all_reflexive() const;
    bool all_symmetric() const;
    bool all_transitive() const;
};

RelationProperties relation_properties(const SoftRelation& r);

/// All choice functions of F in lexicographic order (parameter-major, then
/// universe order). Empty when some section is empty.
std::vector<SoftElement> enumerate_soft_elements(const SoftSet& f, const Limits& limits = {});

} // namespace softuni
