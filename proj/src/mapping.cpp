#include "softuni/mapping.hpp"

#include <algorithm>
#include <stdexcept>

namespace softuni {

SoftMapping::SoftMapping(SoftSet domain, SoftSet codomain, std::vector<std::vector<int>> maps)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), maps_(std::move(maps)) {
    if (!(domain_.params() == codomain_.params()))
        throw std::invalid_argument("soft mapping needs matching parameter sets");
    if (int(maps_.size()) != domain_.param_count())
        throw std::invalid_argument("soft mapping needs one table per parameter");
    for (int p = 0; p < domain_.param_count(); ++p) {
        if (int(maps_[p].size()) != domain_.universe().size())
            throw std::invalid_argument("mapping table sized to the wrong universe");
        bool total = true;
        domain_.section(p).for_each([&](int x) {
            int y = maps_[p][x];
            if (y < 0 || y >= codomain_.universe().size() || !codomain_.section(p).test(y))
                total = false;
        });
        if (!total)
            throw std::invalid_argument("mapping not total into the codomain section at '" +
                                        domain_.params().name(p) + "'");
    }
}

SoftMapping SoftMapping::identity(const SoftSet& host) {
    std::vector<std::vector<int>> maps(host.param_count(),
                                       std::vector<int>(host.universe().size()));
    for (auto& t : maps)
        for (size_t i = 0; i < t.size(); ++i) t[i] = int(i);
    return SoftMapping(host, host, std::move(maps));
}

SoftMapping SoftMapping::constant(const SoftSet& domain, const SoftSet& codomain,
                                  const SoftElement& value) {
    if (!value.member_of(codomain))
        throw std::invalid_argument("constant mapping: value is not a soft element of the codomain");
    std::vector<std::vector<int>> maps(domain.param_count(),
                                       std::vector<int>(domain.universe().size(), -1));
    for (int p = 0; p < domain.param_count(); ++p)
        domain.section(p).for_each([&](int x) { maps[p][x] = value.at(p); });
    return SoftMapping(domain, codomain, std::move(maps));
}

SoftElement apply(const SoftMapping& f, const SoftElement& x) {
    if (!x.member_of(f.domain()))
        throw std::invalid_argument("apply: not a soft element of the domain");
    std::vector<int> choice(x.param_count());
    for (int p = 0; p < x.param_count(); ++p) choice[p] = f.map(p, x.at(p));
    return SoftElement(f.codomain(), std::move(choice));
}

SoftSet preimage(const SoftMapping& f, const SoftSet& o) {
    if (!o.is_subset_of(f.codomain()))
        throw std::invalid_argument("preimage: not a soft subset of the codomain");
    std::vector<BitVec> secs(f.domain().param_count(), BitVec(f.domain().universe().size()));
    for (int p = 0; p < f.domain().param_count(); ++p)
        f.domain().section(p).for_each([&](int x) {
            if (o.section(p).test(f.map(p, x))) secs[p].set(x);
        });
    return SoftSet(f.domain().universe_ptr(), f.domain().params_ptr(), std::move(secs));
}

SoftRelation pushforward_relation(const SoftMapping& f, const SoftRelation& u) {
    if (!(u.host() == f.domain()))
        throw std::invalid_argument("pushforward: relation lives on a different host");
    std::vector<BitMatrix> gs;
    gs.reserve(f.domain().param_count());
    for (int p = 0; p < f.domain().param_count(); ++p) {
        BitMatrix g(f.codomain().universe().size());
        for (int x = 0; x < u.graph(p).dim(); ++x)
            u.graph(p).row(x).for_each([&](int y) { g.set(f.map(p, x), f.map(p, y)); });
        gs.push_back(std::move(g));
    }
    return SoftRelation(f.codomain(), std::move(gs));
}

SoftMapping compose_mappings(const SoftMapping& g, const SoftMapping& f) {
    if (!(f.codomain() == g.domain()))
        throw std::invalid_argument("compose_mappings: codomain of f differs from domain of g");
    std::vector<std::vector<int>> maps(f.domain().param_count(),
                                       std::vector<int>(f.domain().universe().size(), -1));
    for (int p = 0; p < f.domain().param_count(); ++p)
        f.domain().section(p).for_each([&](int x) { maps[p][x] = g.map(p, f.map(p, x)); });
    return SoftMapping(f.domain(), g.codomain(), std::move(maps));
}

namespace {

void require_usable_pair(const SoftMapping& f, const UniformityBase& dom,
                         const UniformityBase& cod, const char* what) {
    if (!(dom.host() == f.domain()) || !(cod.host() == f.codomain()))
        throw std::invalid_argument(std::string(what) + ": bases do not match the mapping");
    for (const UniformityBase* b : {&dom, &cod}) {
        if (b->validation().status == ValidationStatus::Unchecked)
            throw std::logic_error(std::string(what) + ": base has not been validated");
        if (!b->validated_ok() && !b->is_semi_uniformity())
            throw std::invalid_argument(std::string(what) + ": base is not a (semi-)uniformity");
    }
}

// f(U-ball at x) inside V-ball at f(x), checked on the raw graphs.
bool ball_maps_inside(const SoftMapping& f, const SoftRelation& u, const SoftRelation& v,
                      const SoftElement& x) {
    for (int p = 0; p < x.param_count(); ++p) {
        const BitVec& dom_row = u.graph(p).row(x.at(p));
        const BitVec& cod_row = v.graph(p).row(f.map(p, x.at(p)));
        bool inside = true;
        dom_row.for_each([&](int y) {
            if (!cod_row.test(f.map(p, y))) inside = false;
        });
        if (!inside) return false;
    }
    return true;
}

} // namespace

ContinuityCheck is_soft_continuous(const SoftMapping& f, const UniformityBase& dom,
                                   const UniformityBase& cod, const Limits& limits,
                                   const SoftTopology* tau_dom, const SoftTopology* tau_cod) {
    require_usable_pair(f, dom, cod, "is_soft_continuous");
    ContinuityCheck out;

    auto elements = enumerate_soft_elements(f.domain(), limits);
    out.vacuous = elements.empty();
    out.pointwise = true;
    for (const auto& x : elements) {
        for (int j = 0; j < cod.size() && out.pointwise; ++j) {
            bool found = false;
            for (int i = 0; i < dom.size() && !found; ++i)
                if (ball_maps_inside(f, dom.member(i), cod.member(j), x)) found = true;
            if (!found) out.pointwise = false;
        }
        if (!out.pointwise) break;
    }

    // literal definition on enumerated topologies
    std::optional<SoftTopology> own_dom, own_cod;
    try {
        if (!tau_dom) {
            own_dom = enumerate_topology(dom, limits);
            tau_dom = &*own_dom;
        }
        if (!tau_cod) {
            own_cod = enumerate_topology(cod, limits);
            tau_cod = &*own_cod;
        }
    } catch (const CapExceeded&) {
        return out; // primary verdict stands alone
    }

    // bit-level preimage: domain position (p,u) pulls codomain position (p,f_p(u))
    const SubsetCodec& dc = tau_dom->codec();
    const SubsetCodec& cc = tau_cod->codec();
    std::vector<std::uint64_t> pull(dc.bit_count());
    {
        for (int b = 0; b < dc.bit_count(); ++b) {
            SoftSet piece = dc.decode(std::uint64_t{1} << b);
            // single bit: one parameter, one atom
            for (int p = 0; p < piece.param_count(); ++p)
                piece.section(p).for_each([&](int u) {
                    BitVec img(f.codomain().universe().size());
                    img.set(f.map(p, u));
                    std::vector<BitVec> secs(piece.param_count(),
                                             BitVec(f.codomain().universe().size()));
                    secs[p] = img;
                    pull[b] = cc.encode(
                        SoftSet(f.codomain().universe_ptr(), f.codomain().params_ptr(), secs));
                });
        }
    }
    bool topological = true;
    for (auto o : tau_cod->open_masks()) {
        std::uint64_t pre = 0;
        for (int b = 0; b < dc.bit_count(); ++b)
            if ((pull[b] & ~o) == 0) pre |= std::uint64_t{1} << b;
        if (!tau_dom->contains_mask(pre)) {
            topological = false;
            break;
        }
    }
    out.topological = topological;

    if (dom.validated_ok() && cod.validated_ok() && out.pointwise != topological)
        throw std::logic_error("continuity checkers disagree on valid bases");
    return out;
}

UniformContinuityCheck is_soft_uniformly_continuous(const SoftMapping& f,
                                                    const UniformityBase& dom,
                                                    const UniformityBase& cod) {
    require_usable_pair(f, dom, cod, "is_soft_uniformly_continuous");
    UniformContinuityCheck out;
    out.uniformly_continuous = true;
    out.witness.assign(cod.size(), -1);
    for (int j = 0; j < cod.size(); ++j) {
        for (int i = 0; i < dom.size(); ++i)
            if (is_subrelation(pushforward_relation(f, dom.member(i)), cod.member(j))) {
                out.witness[j] = i;
                break;
            }
        if (out.witness[j] < 0) {
            out.uniformly_continuous = false;
            out.failing_member = j;
            break;
        }
    }
    return out;
}

LebesgueResult lebesgue_entourage(const UniformityBase& base, const std::vector<SoftSet>& cover,
                                  const Limits& limits, const SoftTopology* tau) {
    if (!base.validated_ok())
        throw std::logic_error("lebesgue_entourage requires a validated-valid base");
    if (cover.empty()) throw std::invalid_argument("lebesgue_entourage: empty cover");

    SoftSet united = SoftSet::empty_like(base.host());
    for (const auto& o : cover) {
        bool open = tau ? tau->contains(o) : is_open(base, o, limits);
        if (!open)
            throw std::invalid_argument("lebesgue_entourage: cover member is not open");
        united = united | o;
    }
    if (!(united == base.host()))
        throw std::invalid_argument("lebesgue_entourage: cover does not unite to the host");

    auto elements = enumerate_soft_elements(base.host(), limits);

    // per element: cover member holding it, member ball inside that, then a
    // symmetric root of the member; the result is the meet of the roots
    std::optional<SoftRelation> acc;
    for (const auto& x : elements) {
        int ci = -1;
        for (size_t c = 0; c < cover.size(); ++c)
            if (x.member_of(cover[c])) {
                ci = int(c);
                break;
            }
        // a sectionwise union can reach the host while some soft element
        // mixes across members; no single entourage can refine such a cover
        if (ci < 0)
            throw std::invalid_argument("lebesgue_entourage: no cover member holds the soft element " +
                                        x.to_string());
        int vi = -1;
        for (int i = 0; i < base.size(); ++i)
            if (entourage_ball(base.member(i), x).is_subset_of(cover[ci])) {
                vi = i;
                break;
            }
        if (vi < 0) throw std::logic_error("open cover member without a ball witness");
        int wi = base.square_root_of(vi);
        if (wi < 0) throw std::logic_error("validated base lacks a square root");
        SoftRelation sym = meet(base.member(wi), inverse(base.member(wi)));
        acc = acc ? meet(*acc, sym) : sym;
    }
    SoftRelation result = acc ? *acc : full_relation(base.host()); // vacuous host: meet of nothing

    LebesgueResult out{std::move(result), {}, true};
    if (!member_of(base, out.entourage)) out.verified = false;
    for (const auto& x : elements) {
        SoftSet ball = entourage_ball(out.entourage, x);
        int holder = -1;
        for (size_t c = 0; c < cover.size(); ++c)
            if (ball.is_subset_of(cover[c])) {
                holder = int(c);
                break;
            }
        out.assignment.push_back(holder);
        if (holder < 0) out.verified = false;
    }
    if (!out.verified)
        throw std::logic_error("lebesgue entourage failed its post-construction verification");
    return out;
}

HeineCantorReport heine_cantor_check(const SoftMapping& f, const UniformityBase& dom,
                                     const UniformityBase& cod, const Limits& limits) {
    require_usable_pair(f, dom, cod, "heine_cantor_check");
    if (!dom.validated_ok() || !cod.validated_ok())
        throw std::invalid_argument("heine_cantor_check is disabled for semi-uniformities");
    if (!f.domain().is_carrier())
        throw std::invalid_argument("heine_cantor_check requires a carrier domain");

    HeineCantorReport out;
    out.continuity = is_soft_continuous(f, dom, cod, limits);
    out.uniform = is_soft_uniformly_continuous(f, dom, cod);

    if (out.continuity.continuous() != out.uniform.uniformly_continuous)
        throw std::logic_error(
            "finite carrier domain: continuity and uniform continuity must coincide");
    if (!out.continuity.continuous()) return out;

    // proof reconstruction, instantiated at the minimal codomain member: it
    // is symmetric, squares into itself, and its balls are open
    const SoftRelation& w = cod.minimal_member();
    auto elements = enumerate_soft_elements(f.domain(), limits);
    for (int j = 0; j < cod.size(); ++j) {
        std::vector<SoftSet> cover;
        for (const auto& x : elements) {
            SoftSet piece = preimage(f, entourage_ball(w, apply(f, x)));
            bool dup = false;
            for (const auto& c : cover)
                if (c == piece) dup = true;
            if (!dup) cover.push_back(std::move(piece));
        }
        LebesgueResult leb = lebesgue_entourage(dom, cover, limits);
        bool verified = is_subrelation(pushforward_relation(f, leb.entourage), cod.member(j));
        out.trace.push_back(HeineCantorReport::MemberTrace{
            j, w, cover.size(), leb.entourage, verified});
        if (!verified)
            throw std::logic_error("heine-cantor witness chain failed verification");
    }
    return out;
}

} // namespace softuni
