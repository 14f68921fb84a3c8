#include "softuni/uniformity.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <tuple>

namespace softuni {

const char* axiom_name(BaseAxiom a) {
    switch (a) {
        case BaseAxiom::U1Diagonal: return "U1";
        case BaseAxiom::U2Intersection: return "U2";
        case BaseAxiom::U3Inverse: return "U3";
        case BaseAxiom::U4SquareRoot: return "U4";
    }
    return "?";
}

bool BaseValidation::axiom_holds(BaseAxiom a) const {
    if (status == ValidationStatus::Unchecked) return false;
    return std::none_of(violations.begin(), violations.end(),
                        [&](const AxiomViolation& v) { return v.axiom == a; });
}

UniformityBase::UniformityBase(SoftSet host, std::vector<SoftRelation> members,
                               std::vector<std::string> names)
    : host_(std::move(host)), members_(std::move(members)), names_(std::move(names)) {
    if (members_.empty())
        throw std::invalid_argument("a uniformity base needs at least one member");
    for (const auto& m : members_)
        if (!(m.host() == host_))
            throw std::invalid_argument("base member lives on a different host");
    if (names_.empty())
        for (size_t i = 0; i < members_.size(); ++i) names_.push_back("U" + std::to_string(i + 1));
    if (names_.size() != members_.size())
        throw std::invalid_argument("base needs one name per member");
    square_root_.assign(members_.size(), -1);
}

namespace {

// First pair of a's graph escaping b's, as (param, x, y); nullopt if a <= b.
std::optional<std::tuple<int, int, int>> first_escaping_pair(const SoftRelation& a,
                                                             const SoftRelation& b) {
    for (int p = 0; p < a.param_count(); ++p)
        for (int i = 0; i < a.graph(p).dim(); ++i) {
            BitVec escape = a.graph(p).row(i);
            escape.subtract(b.graph(p).row(i));
            if (escape.any()) return std::make_tuple(p, i, escape.first());
        }
    return std::nullopt;
}

int escape_count(const SoftRelation& a, const SoftRelation& b) {
    int c = 0;
    for (int p = 0; p < a.param_count(); ++p)
        for (int i = 0; i < a.graph(p).dim(); ++i) {
            BitVec escape = a.graph(p).row(i);
            escape.subtract(b.graph(p).row(i));
            c += escape.count();
        }
    return c;
}

AxiomViolation make_violation(const UniformityBase& base, BaseAxiom axiom,
                              std::vector<std::string> members,
                              const std::optional<std::tuple<int, int, int>>& witness,
                              std::string message) {
    AxiomViolation v;
    v.axiom = axiom;
    v.members = std::move(members);
    if (witness) {
        auto [p, x, y] = *witness;
        v.param = base.host().params().name(p);
        v.pair_first = base.host().universe().name(x);
        v.pair_second = base.host().universe().name(y);
    }
    v.message = std::move(message);
    return v;
}

} // namespace

const BaseValidation& UniformityBase::validate() {
    if (validation_.status != ValidationStatus::Unchecked) return validation_;
    validation_.violations.clear();

    // U1: every member contains the diagonal.
    SoftRelation diag = diagonal(host_);
    for (int i = 0; i < size(); ++i) {
        if (!is_subrelation(diag, members_[i])) {
            auto w = first_escaping_pair(diag, members_[i]);
            validation_.violations.push_back(make_violation(
                *this, BaseAxiom::U1Diagonal, {names_[i]}, w,
                names_[i] + " misses a diagonal pair"));
        }
    }

    // U2 in base form: some member below each pairwise meet.
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j) {
            SoftRelation m = meet(members_[i], members_[j]);
            bool found = false;
            for (int k = 0; k < size() && !found; ++k)
                if (is_subrelation(members_[k], m)) found = true;
            if (!found) {
                int best = 0, best_escape = INT_MAX;
                for (int k = 0; k < size(); ++k) {
                    int e = escape_count(members_[k], m);
                    if (e < best_escape) best = k, best_escape = e;
                }
                validation_.violations.push_back(make_violation(
                    *this, BaseAxiom::U2Intersection, {names_[i], names_[j]},
                    first_escaping_pair(members_[best], m),
                    "no member below " + names_[i] + " meet " + names_[j] +
                        "; closest is " + names_[best]));
            }
        }

    // U3 in base form: some member below each inverse.
    for (int i = 0; i < size(); ++i) {
        SoftRelation inv = inverse(members_[i]);
        bool found = false;
        for (int k = 0; k < size() && !found; ++k)
            if (is_subrelation(members_[k], inv)) found = true;
        if (!found) {
            int best = 0, best_escape = INT_MAX;
            for (int k = 0; k < size(); ++k) {
                int e = escape_count(members_[k], inv);
                if (e < best_escape) best = k, best_escape = e;
            }
            validation_.violations.push_back(make_violation(
                *this, BaseAxiom::U3Inverse, {names_[i]},
                first_escaping_pair(members_[best], inv),
                "no member below the inverse of " + names_[i]));
        }
    }

    // U4: a square root for every member.
    for (int i = 0; i < size(); ++i) {
        square_root_[i] = -1;
        for (int k = 0; k < size(); ++k)
            if (is_subrelation(compose(members_[k], members_[k]), members_[i])) {
                square_root_[i] = k;
                break;
            }
        if (square_root_[i] < 0) {
            int best = 0, best_escape = INT_MAX;
            for (int k = 0; k < size(); ++k) {
                int e = escape_count(compose(members_[k], members_[k]), members_[i]);
                if (e < best_escape) best = k, best_escape = e;
            }
            validation_.violations.push_back(make_violation(
                *this, BaseAxiom::U4SquareRoot, {names_[i]},
                first_escaping_pair(compose(members_[best], members_[best]), members_[i]),
                "no member whose square sits below " + names_[i] + "; closest is " +
                    names_[best]));
        }
    }

    validation_.status =
        validation_.violations.empty() ? ValidationStatus::Valid : ValidationStatus::Invalid;
    return validation_;
}

bool UniformityBase::is_semi_uniformity() const {
    if (validation_.status == ValidationStatus::Unchecked) return false;
    return validation_.axiom_holds(BaseAxiom::U1Diagonal) &&
           validation_.axiom_holds(BaseAxiom::U2Intersection) &&
           validation_.axiom_holds(BaseAxiom::U3Inverse);
}

void UniformityBase::require_checked() const {
    if (validation_.status == ValidationStatus::Unchecked)
        throw std::logic_error("uniformity base has not been validated");
}

const SoftRelation& UniformityBase::minimal_member() const {
    minimal_member_index();
    if (!meet_of_all_) throw std::logic_error("minimal member unavailable");
    return *meet_of_all_;
}

int UniformityBase::minimal_member_index() const {
    if (minimal_index_ != -2) return minimal_index_;
    SoftRelation m = members_[0];
    for (int i = 1; i < size(); ++i) m = meet(m, members_[i]);
    meet_of_all_ = m;
    minimal_index_ = -1;
    for (int i = 0; i < size(); ++i)
        if (members_[i] == m) {
            minimal_index_ = i;
            break;
        }
    return minimal_index_;
}

BaseValidation validate_base(UniformityBase& base) { return base.validate(); }

namespace {

bool some_member_below(const std::vector<SoftRelation>& members, const SoftRelation& u) {
    for (const auto& m : members)
        if (is_subrelation(m, u)) return true;
    return false;
}

} // namespace

bool member_of(const UniformityBase& base, const SoftRelation& u) {
    if (!(u.host() == base.host()))
        throw std::invalid_argument("member_of: relation lives on a different host");
    if (!base.validated_ok())
        throw std::logic_error("member_of requires a validated-valid base");
    return some_member_below(base.members(), u);
}

SaturationResult saturate(const SoftSet& host, std::vector<SoftRelation> relations,
                          std::vector<std::string> names, const Limits& limits) {
    if (relations.empty())
        throw std::invalid_argument("saturate: need at least one relation");
    if (names.empty())
        for (size_t i = 0; i < relations.size(); ++i) names.push_back("U" + std::to_string(i + 1));
    if (names.size() != relations.size())
        throw std::invalid_argument("saturate: one name per relation");
    for (size_t i = 0; i < relations.size(); ++i) {
        if (!(relations[i].host() == host))
            throw std::invalid_argument("saturate: relation lives on a different host");
        if (!contains_diagonal(relations[i]))
            throw std::invalid_argument("saturate: relation '" + names[i] +
                                        "' does not contain the diagonal");
    }

    std::vector<SoftRelation> closed;
    std::vector<std::string> closed_names;
    auto add = [&](SoftRelation r, const std::string& name) {
        for (const auto& m : closed)
            if (m == r) return false;
        closed.push_back(std::move(r));
        closed_names.push_back(name);
        if (int(closed.size()) > limits.max_base_members)
            throw CapExceeded("saturation exceeded " + std::to_string(limits.max_base_members) +
                              " members");
        return true;
    };
    for (size_t i = 0; i < relations.size(); ++i) add(relations[i], names[i]);

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < closed.size(); ++i) {
            if (add(inverse(closed[i]), closed_names[i] + "~")) changed = true;
            for (size_t j = 0; j < i; ++j)
                if (add(meet(closed[i], closed[j]),
                        "(" + closed_names[j] + "&" + closed_names[i] + ")"))
                    changed = true;
        }
    }

    SaturationResult out{UniformityBase(host, std::move(closed), std::move(closed_names)), false, {}};
    const BaseValidation& v = out.base.validate();
    out.valid = v.ok();
    for (const auto& viol : v.violations)
        if (viol.axiom == BaseAxiom::U4SquareRoot)
            out.members_missing_square_root.push_back(viol.members.front());
    return out;
}

UniformityBase discrete_uniformity(const SoftSet& host) {
    UniformityBase base(host, {diagonal(host)}, {"delta"});
    if (!base.validate().ok())
        throw std::logic_error("discrete base failed validation"); // cannot happen
    return base;
}

MetricFamily::MetricFamily(SoftSet host, std::vector<std::vector<std::vector<Rational>>> dist)
    : host_(std::move(host)), dist_(std::move(dist)) {
    int n = host_.universe().size();
    if (int(dist_.size()) != host_.param_count())
        throw std::invalid_argument("metric family needs one table per parameter");
    for (int p = 0; p < host_.param_count(); ++p) {
        const auto& t = dist_[p];
        if (int(t.size()) != n)
            throw std::invalid_argument("metric table size mismatch");
        for (const auto& row : t)
            if (int(row.size()) != n) throw std::invalid_argument("metric table size mismatch");
        auto elems = host_.section(p).indices();
        const std::string& pname = host_.params().name(p);
        for (int x : elems) {
            if (t[x][x] != Rational(0))
                throw std::invalid_argument("metric at '" + pname + "' has nonzero d(x,x)");
            for (int y : elems) {
                if (t[x][y] != t[y][x])
                    throw std::invalid_argument("metric at '" + pname + "' is not symmetric");
                if (x != y && t[x][y] <= Rational(0))
                    throw std::invalid_argument("metric at '" + pname +
                                                "' is not positive off the diagonal");
                for (int z : elems)
                    if (t[x][z] > t[x][y] + t[y][z])
                        throw std::invalid_argument("metric at '" + pname +
                                                    "' violates the triangle inequality");
            }
        }
    }
}

std::optional<Rational> MetricFamily::min_positive_distance() const {
    std::optional<Rational> best;
    for (int p = 0; p < host_.param_count(); ++p) {
        auto elems = host_.section(p).indices();
        for (int x : elems)
            for (int y : elems)
                if (x != y && (!best || dist_[p][x][y] < *best)) best = dist_[p][x][y];
    }
    return best;
}

namespace {

SoftRelation metric_entourage(const MetricFamily& metric, const Rational& eps) {
    const SoftSet& host = metric.host();
    std::vector<BitMatrix> gs;
    for (int p = 0; p < host.param_count(); ++p) {
        BitMatrix g(host.universe().size());
        auto elems = host.section(p).indices();
        for (int x : elems)
            for (int y : elems)
                if (metric.distance(p, x, y) < eps) g.set(x, y);
        gs.push_back(std::move(g));
    }
    return SoftRelation(host, std::move(gs));
}

} // namespace

UniformityBase metric_uniformity(const MetricFamily& metric, std::vector<Rational> epsilons) {
    if (epsilons.empty())
        throw std::invalid_argument("metric uniformity: empty epsilon list");
    for (size_t i = 0; i < epsilons.size(); ++i) {
        if (epsilons[i] <= Rational(0))
            throw std::invalid_argument("metric uniformity: epsilons must be positive");
        if (i > 0 && epsilons[i] >= epsilons[i - 1])
            throw std::invalid_argument("metric uniformity: epsilons must be strictly descending");
    }

    std::vector<Rational> grid = std::move(epsilons);
    std::vector<SoftRelation> ents;
    ents.reserve(grid.size());
    for (const auto& e : grid) ents.push_back(metric_entourage(metric, e));

    // Extend with halves until every entourage has a square root in the grid.
    for (size_t i = 0; i < grid.size(); ++i) {
        bool rooted = false;
        for (size_t j = 0; j < grid.size() && !rooted; ++j)
            if (is_subrelation(compose(ents[j], ents[j]), ents[i])) rooted = true;
        if (!rooted) {
            Rational half = grid[i] / 2;
            grid.push_back(half);
            ents.push_back(metric_entourage(metric, half));
        }
        if (grid.size() > 64)
            throw std::logic_error("metric grid extension did not terminate"); // cannot happen
    }

    // Sort by descending epsilon, drop epsilons that produce a duplicate
    // entourage (keeping the largest name for each).
    std::vector<size_t> order(grid.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return grid[a] > grid[b]; });

    std::vector<SoftRelation> members;
    std::vector<std::string> names;
    for (size_t idx : order) {
        bool dup = false;
        for (const auto& m : members)
            if (m == ents[idx]) dup = true;
        if (!dup) {
            members.push_back(ents[idx]);
            names.push_back("H(" + to_string(grid[idx]) + ")");
        }
    }

    UniformityBase base(metric.host(), std::move(members), std::move(names));
    if (!base.validate().ok())
        throw std::logic_error("metric base failed validation"); // triangle inequality forbids this
    return base;
}

SymmetricRoot symmetric_square_root(const UniformityBase& base, const SoftRelation& u) {
    if (!base.validated_ok())
        throw std::logic_error("symmetric_square_root requires a validated-valid base");
    // member below u, then the validated square root of that member
    int below = -1;
    for (int i = 0; i < base.size(); ++i)
        if (is_subrelation(base.member(i), u)) {
            below = i;
            break;
        }
    if (below < 0)
        throw std::invalid_argument("symmetric_square_root: relation is not in the uniformity");
    int w = base.square_root_of(below);
    if (w < 0) throw std::logic_error("validated base lacks a square root");
    SoftRelation sym = meet(base.member(w), inverse(base.member(w)));
    return SymmetricRoot{std::move(sym), w};
}

} // namespace softuni
