#include "softuni/topology.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace softuni {

SoftSet entourage_ball(const SoftRelation& u, const SoftElement& x) {
    const SoftSet& host = u.host();
    if (!x.member_of(host))
        throw std::invalid_argument("entourage_ball: not a soft element of the relation's host");
    std::vector<BitVec> secs;
    secs.reserve(host.param_count());
    for (int p = 0; p < host.param_count(); ++p) secs.push_back(u.graph(p).row(x.at(p)));
    return SoftSet(host.universe_ptr(), host.params_ptr(), std::move(secs));
}

NeighbourhoodFamily neighbourhood_family(const UniformityBase& base, const SoftElement& x) {
    if (!base.validated_ok())
        throw std::logic_error("neighbourhood_family requires a validated-valid base");
    NeighbourhoodFamily fam{x, {}};
    fam.members.reserve(base.size());
    for (int i = 0; i < base.size(); ++i) fam.members.push_back(entourage_ball(base.member(i), x));
    return fam;
}

namespace {

void require_usable(const UniformityBase& base, const char* what) {
    if (base.validation().status == ValidationStatus::Unchecked)
        throw std::logic_error(std::string(what) + ": base has not been validated");
    if (!base.validated_ok() && !base.is_semi_uniformity())
        throw std::invalid_argument(std::string(what) +
                                    ": base is not a uniformity (nor a semi-uniformity)");
}

} // namespace

bool is_open(const UniformityBase& base, const SoftSet& o, const Limits& limits) {
    require_usable(base, "is_open");
    if (!o.is_subset_of(base.host()))
        throw std::invalid_argument("is_open: not a soft subset of the host");
    for (const auto& x : enumerate_soft_elements(o, limits)) {
        bool has_ball = false;
        for (int i = 0; i < base.size() && !has_ball; ++i)
            if (entourage_ball(base.member(i), x).is_subset_of(o)) has_ball = true;
        if (!has_ball) return false;
    }
    return true;
}

// --- SubsetCodec -----------------------------------------------------------

SubsetCodec::SubsetCodec(SoftSet host) : host_(std::move(host)) {
    int bits = 0;
    for (int p = 0; p < host_.param_count(); ++p) bits += host_.section(p).count();
    if (bits > 63)
        throw CapExceeded("soft subset space needs " + std::to_string(bits) +
                          " bits; the codec supports 63");
    bit_of_.assign(host_.param_count(), std::vector<int>(host_.universe().size(), -1));
    param_block_.assign(host_.param_count(), 0);
    int next = 0;
    for (int p = 0; p < host_.param_count(); ++p)
        host_.section(p).for_each([&](int v) {
            bit_of_[p][v] = next;
            pos_.emplace_back(p, v);
            param_block_[p] |= std::uint64_t{1} << next;
            ++next;
        });
    full_ = bit_count() == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << bit_count()) - 1;
}

std::uint64_t SubsetCodec::encode(const SoftSet& subset) const {
    if (!subset.is_subset_of(host_))
        throw std::invalid_argument("codec: not a soft subset of the host");
    std::uint64_t mask = 0;
    for (int p = 0; p < host_.param_count(); ++p)
        subset.section(p).for_each([&](int v) { mask |= std::uint64_t{1} << bit_of_[p][v]; });
    return mask;
}

SoftSet SubsetCodec::decode(std::uint64_t mask) const {
    std::vector<BitVec> secs(host_.param_count(), BitVec(host_.universe().size()));
    for (int b = 0; b < bit_count(); ++b)
        if (mask >> b & 1) secs[pos_[b].first].set(pos_[b].second);
    return SoftSet(host_.universe_ptr(), host_.params_ptr(), std::move(secs));
}

std::uint64_t SubsetCodec::element_mask(const SoftElement& x) const {
    std::uint64_t mask = 0;
    for (int p = 0; p < host_.param_count(); ++p) {
        int b = bit_of_[p][x.at(p)];
        if (b < 0) throw std::invalid_argument("codec: element escapes the host");
        mask |= std::uint64_t{1} << b;
    }
    return mask;
}

std::uint64_t SubsetCodec::ball_mask(const SoftRelation& u, const SoftElement& x) const {
    std::uint64_t mask = 0;
    for (int p = 0; p < host_.param_count(); ++p)
        u.graph(p).row(x.at(p)).for_each([&](int v) {
            mask |= std::uint64_t{1} << bit_of_[p][v];
        });
    return mask;
}

bool SubsetCodec::has_all_sections(std::uint64_t mask) const {
    for (std::uint64_t block : param_block_)
        if (!(mask & block)) return false;
    return true;
}

// --- SoftTopology ----------------------------------------------------------

SoftTopology::SoftTopology(SoftSet host, SubsetCodec codec, std::vector<std::uint64_t> opens,
                           Thm36Check thm36)
    : host_(std::move(host)), codec_(std::move(codec)), opens_(std::move(opens)), thm36_(thm36) {}

bool SoftTopology::contains_mask(std::uint64_t mask) const {
    return std::binary_search(opens_.begin(), opens_.end(), mask);
}

std::size_t SoftTopology::vacuous_open_count() const {
    std::size_t c = 0;
    for (auto m : opens_)
        if (is_vacuous_mask(m)) ++c;
    return c;
}

std::uint64_t SoftTopology::interior_mask(std::uint64_t mask) const {
    std::uint64_t acc = 0;
    for (auto o : opens_)
        if ((o & ~mask) == 0) acc |= o;
    return acc;
}

std::uint64_t SoftTopology::closure_mask(std::uint64_t mask) const {
    // meet of closed supersets = complement of the interior of the complement
    return codec_.full_mask() & ~interior_mask(codec_.full_mask() & ~mask);
}

bool SoftTopology::is_closed_mask(std::uint64_t mask) const {
    return contains_mask(codec_.full_mask() & ~mask);
}

SoftTopology enumerate_topology(const UniformityBase& base, const Limits& limits) {
    require_usable(base, "enumerate_topology");
    SubsetCodec codec(base.host());
    int bits = codec.bit_count();
    std::uint64_t subsets = std::uint64_t{1} << bits;
    if (bits >= 63 || subsets > limits.max_subsets)
        throw CapExceeded("subset space of 2^" + std::to_string(bits) +
                          " exceeds the topology cap " + std::to_string(limits.max_subsets));

    auto elements = enumerate_soft_elements(base.host(), limits);
    std::vector<std::uint64_t> elem_masks, min_ball_masks;
    std::vector<std::vector<std::uint64_t>> all_ball_masks; // slow path
    elem_masks.reserve(elements.size());
    int min_idx = base.minimal_member_index();
    for (const auto& x : elements) {
        elem_masks.push_back(codec.element_mask(x));
        if (min_idx >= 0) {
            // a member below every member: its ball decides openness alone
            min_ball_masks.push_back(codec.ball_mask(base.member(min_idx), x));
        } else {
            std::vector<std::uint64_t> balls;
            for (int i = 0; i < base.size(); ++i)
                balls.push_back(codec.ball_mask(base.member(i), x));
            all_ball_masks.push_back(std::move(balls));
        }
    }

    std::vector<std::uint64_t> opens;
    for (std::uint64_t o = 0; o < subsets; ++o) {
        bool open = true;
        for (std::size_t i = 0; i < elements.size() && open; ++i) {
            if (elem_masks[i] & ~o) continue; // not a soft element of o
            if (min_idx >= 0) {
                open = (min_ball_masks[i] & ~o) == 0;
            } else {
                open = false;
                for (auto b : all_ball_masks[i])
                    if ((b & ~o) == 0) {
                        open = true;
                        break;
                    }
            }
        }
        if (open) opens.push_back(o);
    }

    // Post-hoc look at the theorem the construction is named after: empty and
    // host present, meets and joins of opens still open. The family genuinely
    // can fail join-closure through vacuous opens; record, don't throw.
    Thm36Check check;
    check.contains_empty_and_host =
        std::binary_search(opens.begin(), opens.end(), std::uint64_t{0}) &&
        std::binary_search(opens.begin(), opens.end(), codec.full_mask());
    check.meets_closed = true;
    check.joins_closed = true;
    auto probe = [&](std::uint64_t a, std::uint64_t b) {
        if (check.meets_closed && !std::binary_search(opens.begin(), opens.end(), a & b)) {
            check.meets_closed = false;
            check.meet_counterexample = {a, b};
        }
        if (check.joins_closed && !std::binary_search(opens.begin(), opens.end(), a | b)) {
            check.joins_closed = false;
            check.join_counterexample = {a, b};
        }
    };
    if (opens.size() <= 512) {
        check.exhaustive = true;
        for (std::size_t i = 0; i < opens.size(); ++i)
            for (std::size_t j = i + 1; j < opens.size(); ++j) probe(opens[i], opens[j]);
    } else {
        check.exhaustive = false;
        std::mt19937_64 rng(0x736f6674u); // fixed seed: diagnostics must be reproducible
        for (int t = 0; t < 2000; ++t)
            probe(opens[rng() % opens.size()], opens[rng() % opens.size()]);
    }

    return SoftTopology(base.host(), std::move(codec), std::move(opens), check);
}

ClosureResult closure(const SoftTopology& tau, const SoftSet& a) {
    std::uint64_t cl = tau.closure_mask(tau.codec().encode(a));
    return ClosureResult{tau.codec().decode(cl), tau.is_closed_mask(cl)};
}

bool is_separated(const UniformityBase& base) {
    require_usable(base, "is_separated");
    return base.minimal_member() == diagonal(base.host());
}

T1Check is_soft_t1(const UniformityBase& base, const SoftTopology* oracle, const Limits& limits) {
    if (!base.validated_ok()) throw std::logic_error("is_soft_t1 requires a validated-valid base");
    T1Check out;
    auto elements = enumerate_soft_elements(base.host(), limits);
    if (elements.empty()) {
        out.t1 = true;
        out.vacuous = true;
        return out;
    }

    // ball method: some member ball around x misses y
    out.t1 = true;
    for (const auto& x : elements) {
        for (const auto& y : elements) {
            if (x == y) continue;
            bool separated_pair = false;
            for (int i = 0; i < base.size() && !separated_pair; ++i)
                if (!pair_in(base.member(i), x, y)) separated_pair = true;
            if (!separated_pair) {
                out.t1 = false;
                break;
            }
        }
        if (!out.t1) break;
    }

    if (oracle) {
        // enumerated-opens definition: an open holding x and not y
        const SubsetCodec& codec = oracle->codec();
        std::vector<std::uint64_t> masks;
        std::vector<std::uint64_t> core(elements.size(), codec.full_mask());
        masks.reserve(elements.size());
        for (const auto& x : elements) masks.push_back(codec.element_mask(x));
        for (auto o : oracle->open_masks())
            for (std::size_t i = 0; i < elements.size(); ++i)
                if ((masks[i] & ~o) == 0) core[i] &= o;
        bool oracle_t1 = true;
        for (std::size_t i = 0; i < elements.size() && oracle_t1; ++i)
            for (std::size_t j = 0; j < elements.size(); ++j)
                if (i != j && (masks[j] & ~core[i]) == 0) {
                    oracle_t1 = false;
                    break;
                }
        out.oracle_ran = true;
        if (oracle_t1 != out.t1)
            throw std::logic_error("T1 ball method and topology oracle disagree");
    }
    return out;
}

RegularityCheck is_soft_regular(const UniformityBase& base, const Limits& limits) {
    if (!base.validated_ok())
        throw std::logic_error("is_soft_regular requires a validated-valid base");
    SoftTopology tau = enumerate_topology(base, limits);
    const SubsetCodec& codec = tau.codec();

    RegularityCheck out;
    auto elements = enumerate_soft_elements(base.host(), limits);
    if (elements.empty()) {
        out.vacuous = true;
        return out;
    }

    int min_idx = base.minimal_member_index();
    if (min_idx < 0) throw std::logic_error("valid base without minimal member");
    const SoftRelation& m0 = base.minimal_member();

    // Constructive witness around x: O1 is the minimal-member ball (the
    // minimal member is symmetric and composes into itself, so its balls are
    // clopen); O2 is the complement of its closure.
    struct PerElement {
        std::uint64_t elem, o1, cl, o2;
        bool usable;
    };
    std::vector<PerElement> pre;
    pre.reserve(elements.size());
    for (const auto& x : elements) {
        PerElement pe;
        pe.elem = codec.element_mask(x);
        pe.o1 = codec.ball_mask(m0, x);
        pe.cl = tau.closure_mask(pe.o1);
        pe.o2 = codec.full_mask() & ~pe.cl;
        pe.usable = tau.contains_mask(pe.o1) && tau.contains_mask(pe.o2);
        pre.push_back(pe);
    }

    const std::size_t sample_cap = 5;
    for (auto o : tau.open_masks()) {
        std::uint64_t c = codec.full_mask() & ~o; // every closed set arises this way
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (pre[i].elem & c) continue; // x must sectionwise avoid C
            ++out.pairs_checked;

            const PerElement& pe = pre[i];
            bool ok = pe.usable && (pe.o1 & pe.o2) == 0 && (c & ~pe.o2) == 0 &&
                      (pe.elem & ~pe.o1) == 0 && (pe.cl & c) == 0;
            if (ok) {
                ++out.via_recipe;
                if (out.samples.size() < sample_cap)
                    out.samples.push_back(RegularityWitness{elements[i], codec.decode(c),
                                                            codec.decode(pe.o1),
                                                            codec.decode(pe.o2)});
                continue;
            }

            // exhaustive open-pair search
            bool found = false;
            for (auto o1 : tau.open_masks()) {
                if (pe.elem & ~o1) continue;
                for (auto o2 : tau.open_masks())
                    if ((c & ~o2) == 0 && (o1 & o2) == 0) {
                        found = true;
                        ++out.via_fallback;
                        if (out.samples.size() < sample_cap)
                            out.samples.push_back(RegularityWitness{elements[i], codec.decode(c),
                                                                    codec.decode(o1),
                                                                    codec.decode(o2)});
                        break;
                    }
                if (found) break;
            }
            if (!found) {
                out.regular = false;
                out.failure = RegularityWitness{elements[i], codec.decode(c),
                                                SoftSet::empty_like(base.host()),
                                                SoftSet::empty_like(base.host())};
                return out;
            }
        }
    }
    return out;
}

} // namespace softuni
