#include "softuni/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace softuni {

namespace {

template <class T>
std::unordered_map<std::string, int> build_index(const std::vector<std::string>& names,
                                                 const char* what) {
    (void)sizeof(T);
    if (names.empty())
        throw std::invalid_argument(std::string(what) + " must be nonempty");
    std::unordered_map<std::string, int> idx;
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty())
            throw std::invalid_argument(std::string(what) + " contains an empty identifier");
        if (!idx.emplace(names[i], int(i)).second)
            throw std::invalid_argument(std::string(what) + " contains duplicate '" + names[i] + "'");
    }
    return idx;
}

} // namespace

Universe::Universe(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    index_ = build_index<Universe>(atoms_, "universe");
}

std::optional<int> Universe::index_of(std::string_view atom) const {
    auto it = index_.find(std::string(atom));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ParameterSet::ParameterSet(std::vector<std::string> names) : names_(std::move(names)) {
    index_ = build_index<ParameterSet>(names_, "parameter set");
}

std::optional<int> ParameterSet::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// --- SoftSet -------------------------------------------------------------

SoftSet::SoftSet(UniversePtr universe, ParameterSetPtr params, std::vector<BitVec> sections)
    : universe_(std::move(universe)), params_(std::move(params)), sections_(std::move(sections)) {
    if (!universe_ || !params_)
        throw std::invalid_argument("soft set needs a universe and a parameter set");
    if (int(sections_.size()) != params_->size())
        throw std::invalid_argument("soft set needs one section per parameter");
    for (const auto& s : sections_)
        if (s.capacity() != universe_->size())
            throw std::invalid_argument("section capacity does not match the universe");
}

SoftSet SoftSet::empty_like(const SoftSet& host) {
    std::vector<BitVec> secs(host.param_count(), BitVec(host.universe().size()));
    return SoftSet(host.universe_ptr(), host.params_ptr(), std::move(secs));
}

bool SoftSet::same_space(const SoftSet& o) const {
    if (universe_ == o.universe_ && params_ == o.params_) return true;
    return *universe_ == *o.universe_ && *params_ == *o.params_;
}

bool SoftSet::is_carrier() const {
    return std::all_of(sections_.begin(), sections_.end(),
                       [](const BitVec& s) { return s.any(); });
}

bool SoftSet::is_empty() const {
    return std::all_of(sections_.begin(), sections_.end(),
                       [](const BitVec& s) { return s.none(); });
}

std::uint64_t SoftSet::soft_element_count() const {
    std::uint64_t n = 1;
    for (const auto& s : sections_) {
        std::uint64_t c = std::uint64_t(s.count());
        if (c == 0) return 0;
        if (n > UINT64_MAX / c) return UINT64_MAX;
        n *= c;
    }
    return n;
}

bool SoftSet::is_subset_of(const SoftSet& o) const {
    if (!same_space(o)) return false;
    for (int p = 0; p < param_count(); ++p)
        if (!sections_[p].is_subset_of(o.sections_[p])) return false;
    return true;
}

static void require_same_space(const SoftSet& a, const SoftSet& b) {
    if (!a.same_space(b))
        throw std::invalid_argument("soft sets live on different (universe, parameters) spaces");
}

SoftSet operator|(const SoftSet& a, const SoftSet& b) {
    require_same_space(a, b);
    std::vector<BitVec> secs = a.sections_;
    for (int p = 0; p < a.param_count(); ++p) secs[p] |= b.sections_[p];
    return SoftSet(a.universe_, a.params_, std::move(secs));
}

SoftSet operator&(const SoftSet& a, const SoftSet& b) {
    require_same_space(a, b);
    std::vector<BitVec> secs = a.sections_;
    for (int p = 0; p < a.param_count(); ++p) secs[p] &= b.sections_[p];
    return SoftSet(a.universe_, a.params_, std::move(secs));
}

SoftSet SoftSet::complement_in(const SoftSet& host) const {
    require_same_space(*this, host);
    if (!is_subset_of(host))
        throw std::invalid_argument("complement_in: not a subset of the host");
    std::vector<BitVec> secs = host.sections_;
    for (int p = 0; p < param_count(); ++p) secs[p].subtract(sections_[p]);
    return SoftSet(universe_, params_, std::move(secs));
}

bool operator==(const SoftSet& a, const SoftSet& b) {
    return a.same_space(b) && a.sections_ == b.sections_;
}

std::string SoftSet::to_string() const {
    std::ostringstream os;
    os << "{";
    for (int p = 0; p < param_count(); ++p) {
        if (p) os << ", ";
        os << params_->name(p) << ":{";
        bool first = true;
        sections_[p].for_each([&](int i) {
            if (!first) os << ",";
            first = false;
            os << universe_->name(i);
        });
        os << "}";
    }
    os << "}";
    return os.str();
}

// --- SoftElement -----------------------------------------------------------

SoftElement::SoftElement(const SoftSet& host, std::vector<int> choice)
    : universe_(host.universe_ptr()), params_(host.params_ptr()), choice_(std::move(choice)) {
    if (int(choice_.size()) != host.param_count())
        throw std::invalid_argument("soft element needs one choice per parameter");
    for (int p = 0; p < host.param_count(); ++p) {
        int v = choice_[p];
        if (v < 0 || v >= universe_->size() || !host.section(p).test(v))
            throw std::invalid_argument("soft element choice escapes the host section at parameter '" +
                                        params_->name(p) + "'");
    }
}

bool SoftElement::member_of(const SoftSet& s) const {
    if (!(*universe_ == s.universe()) || !(*params_ == s.params())) return false;
    for (int p = 0; p < int(choice_.size()); ++p)
        if (!s.section(p).test(choice_[p])) return false;
    return true;
}

bool operator==(const SoftElement& a, const SoftElement& b) {
    return *a.universe_ == *b.universe_ && *a.params_ == *b.params_ && a.choice_ == b.choice_;
}

std::string SoftElement::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int p = 0; p < int(choice_.size()); ++p) {
        if (p) os << ",";
        os << universe_->name(choice_[p]);
    }
    os << ")";
    return os.str();
}

// --- SoftRelation ----------------------------------------------------------

SoftRelation::SoftRelation(SoftSet host, std::vector<BitMatrix> graphs)
    : host_(std::move(host)), graphs_(std::move(graphs)) {
    if (int(graphs_.size()) != host_.param_count())
        throw std::invalid_argument("soft relation needs one graph per parameter");
    for (int p = 0; p < host_.param_count(); ++p) {
        const BitMatrix& g = graphs_[p];
        if (g.dim() != host_.universe().size())
            throw std::invalid_argument("relation graph dimension does not match the universe");
        const BitVec& sec = host_.section(p);
        for (int i = 0; i < g.dim(); ++i) {
            if (g.row(i).none()) continue;
            if (!sec.test(i) || !g.row(i).is_subset_of(sec))
                throw std::invalid_argument("relation pair escapes the section square at parameter '" +
                                            host_.params().name(p) + "'");
        }
    }
}

int SoftRelation::pair_count() const {
    int c = 0;
    for (const auto& g : graphs_) c += g.count();
    return c;
}

bool operator==(const SoftRelation& a, const SoftRelation& b) {
    return a.host_ == b.host_ && a.graphs_ == b.graphs_;
}

std::string SoftRelation::to_string() const {
    std::ostringstream os;
    os << "{";
    for (int p = 0; p < param_count(); ++p) {
        if (p) os << ", ";
        os << host_.params().name(p) << ":[";
        bool first = true;
        for (int i = 0; i < graphs_[p].dim(); ++i)
            graphs_[p].row(i).for_each([&](int j) {
                if (!first) os << ",";
                first = false;
                os << "(" << host_.universe().name(i) << "," << host_.universe().name(j) << ")";
            });
        os << "]";
    }
    os << "}";
    return os.str();
}

// --- relation algebra --------------------------------------------------

static void require_same_host(const SoftRelation& a, const SoftRelation& b) {
    if (!(a.host() == b.host()))
        throw std::invalid_argument("soft relations live on different hosts");
}

SoftRelation diagonal(const SoftSet& host) {
    std::vector<BitMatrix> gs;
    gs.reserve(host.param_count());
    for (int p = 0; p < host.param_count(); ++p)
        gs.push_back(BitMatrix::identity_on(host.section(p)));
    return SoftRelation(host, std::move(gs));
}

SoftRelation full_relation(const SoftSet& host) {
    std::vector<BitMatrix> gs;
    gs.reserve(host.param_count());
    for (int p = 0; p < host.param_count(); ++p)
        gs.push_back(BitMatrix::full_on(host.section(p)));
    return SoftRelation(host, std::move(gs));
}

SoftRelation inverse(const SoftRelation& r) {
    std::vector<BitMatrix> gs;
    gs.reserve(r.param_count());
    for (int p = 0; p < r.param_count(); ++p) gs.push_back(r.graph(p).transposed());
    return SoftRelation(r.host(), std::move(gs));
}

SoftRelation compose(const SoftRelation& r, const SoftRelation& s) {
    require_same_host(r, s);
    std::vector<BitMatrix> gs;
    gs.reserve(r.param_count());
    for (int p = 0; p < r.param_count(); ++p)
        gs.push_back(compose_bits(r.graph(p), s.graph(p)));
    return SoftRelation(r.host(), std::move(gs));
}

SoftRelation meet(const SoftRelation& a, const SoftRelation& b) {
    require_same_host(a, b);
    std::vector<BitMatrix> gs = a.graphs();
    for (int p = 0; p < a.param_count(); ++p) gs[p] &= b.graph(p);
    return SoftRelation(a.host(), std::move(gs));
}

SoftRelation join(const SoftRelation& a, const SoftRelation& b) {
    require_same_host(a, b);
    std::vector<BitMatrix> gs = a.graphs();
    for (int p = 0; p < a.param_count(); ++p) gs[p] |= b.graph(p);
    return SoftRelation(a.host(), std::move(gs));
}

bool is_subrelation(const SoftRelation& a, const SoftRelation& b) {
    require_same_host(a, b);
    for (int p = 0; p < a.param_count(); ++p)
        if (!a.graph(p).is_subset_of(b.graph(p))) return false;
    return true;
}

bool contains_diagonal(const SoftRelation& r) {
    for (int p = 0; p < r.param_count(); ++p) {
        bool ok = true;
        r.host().section(p).for_each([&](int i) {
            if (!r.graph(p).test(i, i)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_symmetric(const SoftRelation& r) {
    for (int p = 0; p < r.param_count(); ++p)
        if (!(r.graph(p) == r.graph(p).transposed())) return false;
    return true;
}

bool pair_in(const SoftRelation& r, const SoftElement& x, const SoftElement& y) {
    for (int p = 0; p < r.param_count(); ++p)
        if (!r.graph(p).test(x.at(p), y.at(p))) return false;
    return true;
}

bool RelationProperties::all_reflexive() const {
    return std::all_of(reflexive.begin(), reflexive.end(), [](bool b) { return b; });
}
bool RelationProperties::all_symmetric() const {
    return std::all_of(symmetric.begin(), symmetric.end(), [](bool b) { return b; });
}
bool RelationProperties::all_transitive() const {
    return std::all_of(transitive.begin(), transitive.end(), [](bool b) { return b; });
}

RelationProperties relation_properties(const SoftRelation& r) {
    RelationProperties out;
    const SoftSet& host = r.host();
    for (int p = 0; p < r.param_count(); ++p) {
        const BitMatrix& g = r.graph(p);
        const BitVec& sec = host.section(p);
        auto elems = sec.indices();

        // direct quantifier evaluation
        bool refl = true, symm = true, trans = true;
        for (int x : elems)
            if (!g.test(x, x)) refl = false;
        for (int x : elems)
            for (int y : elems) {
                if (g.test(x, y) != g.test(y, x)) symm = false;
                if (!g.test(x, y)) continue;
                for (int z : elems)
                    if (g.test(y, z) && !g.test(x, z)) trans = false;
            }

        // characterizations: diagonal below, fixed by transpose, square below
        bool refl2 = BitMatrix::identity_on(sec).is_subset_of(g);
        bool symm2 = g == g.transposed();
        bool trans2 = compose_bits(g, g).is_subset_of(g);

        if (refl != refl2 || symm != symm2 || trans != trans2)
            throw std::logic_error("relation property characterizations disagree at parameter '" +
                                   host.params().name(p) + "'");

        out.reflexive.push_back(refl);
        out.symmetric.push_back(symm);
        out.transitive.push_back(trans);
    }
    return out;
}

std::vector<SoftElement> enumerate_soft_elements(const SoftSet& f, const Limits& limits) {
    std::uint64_t n = f.soft_element_count();
    if (n > limits.max_soft_elements)
        throw CapExceeded("soft element count " + std::to_string(n) + " exceeds cap " +
                          std::to_string(limits.max_soft_elements));
    std::vector<SoftElement> out;
    if (n == 0) return out;
    out.reserve(n);

    std::vector<std::vector<int>> columns;
    for (int p = 0; p < f.param_count(); ++p) columns.push_back(f.section(p).indices());

    std::vector<int> pos(f.param_count(), 0);
    for (;;) {
        std::vector<int> choice(f.param_count());
        for (int p = 0; p < f.param_count(); ++p) choice[p] = columns[p][pos[p]];
        out.emplace_back(f, std::move(choice));
        int p = f.param_count() - 1;
        while (p >= 0 && ++pos[p] == int(columns[p].size())) pos[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

} // namespace softuni
