#include "softuni/checks.hpp"

#include <algorithm>
#include <chrono>

namespace softuni {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

ordered_json violation_json(const AxiomViolation& v) {
    ordered_json j;
    j["axiom"] = axiom_name(v.axiom);
    j["members"] = v.members;
    if (!v.param.empty()) {
        j["param"] = v.param;
        j["pair"] = {v.pair_first, v.pair_second};
    }
    j["message"] = v.message;
    return j;
}

void require_usable_base(const BuiltInstance& inst, const CheckOptions& opts) {
    if (inst.base.validated_ok()) return;
    if (opts.allow_invalid && inst.base.is_semi_uniformity()) return;
    throw std::invalid_argument(
        "base fails the uniformity axioms (see the validate command); "
        "semi-uniformities need --allow-invalid");
}

ordered_json set_json(const SoftSet& s) {
    ordered_json j = ordered_json::object();
    for (int p = 0; p < s.param_count(); ++p) {
        ordered_json sec = ordered_json::array();
        s.section(p).for_each([&](int v) { sec.push_back(s.universe().name(v)); });
        j[s.params().name(p)] = sec;
    }
    return j;
}

} // namespace

CheckReport cmd_validate(const BuiltInstance& inst, const CheckOptions&) {
    CheckReport rep{"validate", instance_digest(inst.doc), {}};
    auto t0 = Clock::now();
    const BaseValidation& v = inst.base.validation();
    if (v.ok()) {
        ordered_json d;
        d["members"] = inst.base.member_names();
        rep.add("base-axioms", Verdict::Pass, d, ms_since(t0));
    } else {
        ordered_json d;
        d["violations"] = ordered_json::array();
        for (const auto& viol : v.violations) d["violations"].push_back(violation_json(viol));
        rep.add("base-axioms", Verdict::Fail, d, ms_since(t0));
    }
    if (inst.doc.has_metric)
        rep.add("metric-axioms", Verdict::Pass,
                ordered_json{{"note", "checked exhaustively at construction"}});
    rep.add("carrier", inst.host.is_carrier() ? Verdict::Pass : Verdict::Vacuous,
            ordered_json{{"carrier", inst.host.is_carrier()}});
    return rep;
}

CheckReport cmd_topology(const BuiltInstance& inst, const CheckOptions& opts) {
    CheckReport rep{"topology", instance_digest(inst.doc), {}};
    require_usable_base(inst, opts);
    auto t0 = Clock::now();
    std::optional<SoftTopology> tau;
    try {
        tau = enumerate_topology(inst.base, opts.limits);
    } catch (const CapExceeded& e) {
        rep.add("enumeration", Verdict::Skipped, ordered_json{{"reason", e.what()}},
                ms_since(t0));
        return rep;
    }
    ordered_json d;
    d["opens"] = tau->size();
    d["vacuous"] = tau->vacuous_open_count();
    rep.add("enumeration", Verdict::Pass, d, ms_since(t0));

    const Thm36Check& c = tau->thm36();
    rep.add("contains-empty-and-host",
            c.contains_empty_and_host ? Verdict::Pass : Verdict::Fail);
    rep.add("intersection-closed", c.meets_closed ? Verdict::Pass : Verdict::Fail,
            c.meet_counterexample
                ? ordered_json{{"left", set_json(tau->codec().decode(c.meet_counterexample->first))},
                               {"right", set_json(tau->codec().decode(c.meet_counterexample->second))}}
                : ordered_json(nullptr));
    rep.add("union-closed", c.joins_closed ? Verdict::Pass : Verdict::Fail,
            c.join_counterexample
                ? ordered_json{{"left", set_json(tau->codec().decode(c.join_counterexample->first))},
                               {"right", set_json(tau->codec().decode(c.join_counterexample->second))}}
                : ordered_json{{"exhaustive", c.exhaustive}});
    return rep;
}

CheckReport cmd_separation(const BuiltInstance& inst, const CheckOptions& opts) {
    CheckReport rep{"separation", instance_digest(inst.doc), {}};
    require_usable_base(inst, opts);
    if (!inst.base.validated_ok())
        throw std::invalid_argument("separation checks need a valid base");

    auto t0 = Clock::now();
    bool sep = is_separated(inst.base);
    ordered_json sd;
    if (!sep) {
        // witness: an off-diagonal pair surviving in the minimal member
        const SoftRelation& m0 = inst.base.minimal_member();
        for (int p = 0; p < m0.param_count() && !sd.contains("pair"); ++p)
            for (int x = 0; x < m0.graph(p).dim() && !sd.contains("pair"); ++x)
                m0.graph(p).row(x).for_each([&](int y) {
                    if (x != y && !sd.contains("pair")) {
                        sd["param"] = inst.host.params().name(p);
                        sd["pair"] = {inst.host.universe().name(x), inst.host.universe().name(y)};
                    }
                });
    }
    rep.add("separated", sep ? Verdict::Pass : Verdict::Fail, sd, ms_since(t0));

    t0 = Clock::now();
    std::optional<SoftTopology> tau;
    try {
        tau = enumerate_topology(inst.base, opts.limits);
    } catch (const CapExceeded&) {
    }
    T1Check t1 = is_soft_t1(inst.base, tau ? &*tau : nullptr, opts.limits);
    ordered_json td{{"oracle", t1.oracle_ran}};
    rep.add("t1", t1.vacuous ? Verdict::Vacuous : (t1.t1 ? Verdict::Pass : Verdict::Fail), td,
            ms_since(t0));
    rep.add("t1-matches-separated",
            t1.vacuous ? Verdict::Vacuous : (t1.t1 == sep ? Verdict::Pass : Verdict::Fail));

    t0 = Clock::now();
    try {
        RegularityCheck rc = is_soft_regular(inst.base, opts.limits);
        ordered_json rd;
        rd["pairs"] = rc.pairs_checked;
        rd["recipe"] = rc.via_recipe;
        rd["fallback"] = rc.via_fallback;
        if (rc.failure) {
            rd["point"] = rc.failure->point.to_string();
            rd["closed"] = set_json(rc.failure->closed_set);
        }
        rep.add("regular",
                rc.vacuous ? Verdict::Vacuous : (rc.regular ? Verdict::Pass : Verdict::Fail), rd,
                ms_since(t0));
    } catch (const CapExceeded& e) {
        rep.add("regular", Verdict::Skipped, ordered_json{{"reason", e.what()}}, ms_since(t0));
    }
    return rep;
}

CheckReport cmd_map_check(const BuiltMapping& m, const CheckOptions& opts) {
    CheckReport rep{"map-check", instance_digest(m.domain.doc), {}};
    require_usable_base(m.domain, opts);
    require_usable_base(m.codomain, opts);
    bool relaxed = !m.domain.base.validated_ok() || !m.codomain.base.validated_ok();

    auto t0 = Clock::now();
    ContinuityCheck c = is_soft_continuous(m.map, m.domain.base, m.codomain.base, opts.limits);
    ordered_json cd;
    cd["pointwise"] = c.pointwise;
    if (c.topological) cd["topological"] = *c.topological;
    if (c.vacuous) cd["vacuous"] = true;
    rep.add("continuous", c.continuous() ? Verdict::Pass : Verdict::Fail, cd, ms_since(t0));

    t0 = Clock::now();
    UniformContinuityCheck uc = is_soft_uniformly_continuous(m.map, m.domain.base, m.codomain.base);
    ordered_json ud;
    if (uc.uniformly_continuous) {
        ordered_json w = ordered_json::object();
        for (int j = 0; j < m.codomain.base.size(); ++j)
            w[m.codomain.base.member_name(j)] = m.domain.base.member_name(uc.witness[j]);
        ud["witness"] = w;
    } else if (uc.failing_member) {
        ud["failing-member"] = m.codomain.base.member_name(*uc.failing_member);
    }
    rep.add("uniformly-continuous", uc.uniformly_continuous ? Verdict::Pass : Verdict::Fail, ud,
            ms_since(t0));

    // uniform continuity must imply continuity, valid or relaxed
    rep.add("uniform-implies-continuous",
            (!uc.uniformly_continuous || c.continuous()) ? Verdict::Pass : Verdict::Fail);

    if (relaxed) {
        ordered_json gd;
        gd["topological"] = c.topological ? ordered_json(*c.topological) : ordered_json(nullptr);
        gd["pointwise"] = c.pointwise;
        gd["uniformly-continuous"] = uc.uniformly_continuous;
        gd["gap"] = c.continuous() && !uc.uniformly_continuous;
        rep.add("relaxed-gap", Verdict::Pass, gd);
        rep.add("heine-cantor", Verdict::Skipped,
                ordered_json{{"reason", "disabled for semi-uniformities"}});
        return rep;
    }

    t0 = Clock::now();
    if (!m.domain.host.is_carrier()) {
        rep.add("heine-cantor", Verdict::Vacuous,
                ordered_json{{"reason", "non-carrier domain has no soft elements"}});
        return rep;
    }
    HeineCantorReport hc = heine_cantor_check(m.map, m.domain.base, m.codomain.base, opts.limits);
    ordered_json hd;
    hd["agree"] = hc.agree();
    hd["traced-members"] = hc.trace.size();
    bool all_verified = std::all_of(hc.trace.begin(), hc.trace.end(),
                                    [](const auto& t) { return t.verified; });
    rep.add("heine-cantor", hc.agree() && all_verified ? Verdict::Pass : Verdict::Fail, hd,
            ms_since(t0));
    return rep;
}

std::vector<SoftSet> random_open_cover(const SoftTopology& tau, std::mt19937_64& rng) {
    std::vector<std::uint64_t> masks(tau.open_masks());
    std::shuffle(masks.begin(), masks.end(), rng);
    size_t take = 1 + rng() % std::min<size_t>(masks.size(), 24);

    std::vector<std::uint64_t> picked(masks.begin(), masks.begin() + take);
    auto elements = enumerate_soft_elements(tau.host());
    bool all_held = true;
    std::uint64_t acc = 0;
    for (auto m : picked) acc |= m;
    for (const auto& x : elements) {
        std::uint64_t em = tau.codec().element_mask(x);
        bool held = false;
        for (auto m : picked)
            if ((em & ~m) == 0) held = true;
        if (!held) all_held = false;
    }
    if (!all_held || acc != tau.codec().full_mask()) picked.push_back(tau.codec().full_mask());

    std::vector<SoftSet> cover;
    cover.reserve(picked.size());
    for (auto m : picked) cover.push_back(tau.codec().decode(m));
    return cover;
}

CheckReport cmd_lebesgue(const BuiltInstance& inst, const std::vector<SoftSet>* covers,
                         const CheckOptions& opts) {
    CheckReport rep{"lebesgue", instance_digest(inst.doc), {}};
    require_usable_base(inst, opts);
    if (!inst.base.validated_ok())
        throw std::invalid_argument("lebesgue needs a valid base");

    auto t0 = Clock::now();
    std::optional<SoftTopology> tau;
    try {
        tau = enumerate_topology(inst.base, opts.limits);
    } catch (const CapExceeded& e) {
        if (!covers) {
            rep.add("lebesgue", Verdict::Skipped, ordered_json{{"reason", e.what()}},
                    ms_since(t0));
            return rep;
        }
    }

    std::vector<std::vector<SoftSet>> all_covers;
    if (covers) {
        all_covers.push_back(*covers);
    } else {
        std::mt19937_64 rng(opts.seed);
        for (int i = 0; i < opts.cover_count; ++i) all_covers.push_back(random_open_cover(*tau, rng));
    }

    std::size_t verified = 0;
    std::size_t smallest = SIZE_MAX;
    for (const auto& cover : all_covers) {
        LebesgueResult r = lebesgue_entourage(inst.base, cover, opts.limits,
                                              tau ? &*tau : nullptr);
        if (r.verified) ++verified;
        smallest = std::min<std::size_t>(smallest, r.entourage.pair_count());
    }
    ordered_json d;
    d["covers"] = all_covers.size();
    d["verified"] = verified;
    rep.add("lebesgue", verified == all_covers.size() ? Verdict::Pass : Verdict::Fail, d,
            ms_since(t0));
    return rep;
}

CheckReport cmd_cover(const BuiltInstance& inst, const CheckOptions& opts) {
    CheckReport rep{"cover", instance_digest(inst.doc), {}};
    require_usable_base(inst, opts);
    if (!inst.base.validated_ok())
        throw std::invalid_argument("cover needs a valid base");

    auto t0 = Clock::now();
    TotalBoundednessReport r = is_totally_bounded(inst.base, opts.limits);
    if (!r.bounded()) {
        rep.add("totally-bounded", Verdict::Vacuous,
                ordered_json{{"reason", "non-carrier host: balls cannot reach an empty section"}},
                ms_since(t0));
        return rep;
    }
    // independent re-check of each witness cover
    bool all_good = true;
    ordered_json members = ordered_json::array();
    for (const auto& c : r.covers) {
        SoftSet acc = SoftSet::empty_like(inst.host);
        for (const auto& center : c.centers)
            acc = acc | entourage_ball(inst.base.member(c.member), center);
        bool good = acc == inst.host;
        all_good = all_good && good;
        ordered_json mj;
        mj["member"] = inst.base.member_name(c.member);
        ordered_json centers = ordered_json::array();
        for (const auto& center : c.centers) centers.push_back(center.to_string());
        mj["centers"] = centers;
        if (c.exact_minimum) mj["exact-minimum"] = *c.exact_minimum;
        mj["covers"] = good;
        members.push_back(mj);
    }
    rep.add("totally-bounded", all_good ? Verdict::Pass : Verdict::Fail,
            ordered_json{{"members", members}}, ms_since(t0));
    return rep;
}

CheckReport cmd_complete(const BuiltInstance& inst, const CheckOptions& opts) {
    CheckReport rep{"complete", instance_digest(inst.doc), {}};
    require_usable_base(inst, opts);
    if (!inst.base.validated_ok())
        throw std::invalid_argument("complete needs a valid base");

    auto t0 = Clock::now();
    CompletenessReport r;
    try {
        r = is_complete(inst.base, opts.limits);
    } catch (const CapExceeded& e) {
        rep.add("complete", Verdict::Skipped, ordered_json{{"reason", e.what()}}, ms_since(t0));
        return rep;
    }
    if (!r.applicable) {
        rep.add("complete", Verdict::Vacuous,
                ordered_json{{"reason", "non-carrier host has no soft elements"}}, ms_since(t0));
        return rep;
    }
    ordered_json d;
    d["filters"] = r.filters_checked;
    d["cauchy"] = r.cauchy_count;
    rep.add("complete", r.complete ? Verdict::Pass : Verdict::Fail, d, ms_since(t0));

    t0 = Clock::now();
    auto elements = enumerate_soft_elements(inst.host, opts.limits);
    std::size_t traced = 0, verified = 0;
    for (const auto& fv : r.cauchy_filters) {
        std::vector<SoftElement> gen;
        for (int i : fv.generator) gen.push_back(elements[i]);
        Thm54Trace trace = thm54_witness(inst.base, PrincipalFilter(inst.host, gen), opts.limits);
        ++traced;
        if (trace.verified) ++verified;
    }
    rep.add("limit-traces", traced == verified ? Verdict::Pass : Verdict::Fail,
            ordered_json{{"traced", traced}, {"verified", verified}}, ms_since(t0));
    return rep;
}

CheckReport cmd_oracle(const BuiltInstance& inst, const CheckOptions& opts) {
    CheckReport rep{"oracle", instance_digest(inst.doc), {}};
    require_usable_base(inst, opts);
    if (!inst.base.validated_ok())
        throw std::invalid_argument("oracle needs a valid base");

    std::mt19937_64 rng(opts.seed);

    // random self-maps shared by the continuity and bridge sub-checks
    std::vector<SoftMapping> maps;
    maps.push_back(SoftMapping::identity(inst.host));
    for (int t = 1; t < opts.oracle_maps; ++t) {
        std::vector<std::vector<int>> tables(inst.host.param_count(),
                                             std::vector<int>(inst.host.universe().size(), -1));
        for (int p = 0; p < inst.host.param_count(); ++p) {
            auto targets = inst.host.section(p).indices();
            inst.host.section(p).for_each(
                [&](int x) { tables[p][x] = targets[rng() % targets.size()]; });
        }
        maps.emplace_back(inst.host, inst.host, std::move(tables));
    }

    std::optional<SoftTopology> tau;
    auto t0 = Clock::now();
    try {
        tau = enumerate_topology(inst.base, opts.limits);
    } catch (const CapExceeded& e) {
        rep.add("topology", Verdict::Skipped, ordered_json{{"reason", e.what()}}, ms_since(t0));
    }

    // fast pointwise continuity against the literal topological definition
    t0 = Clock::now();
    if (tau) {
        bool ok = true;
        for (const auto& f : maps) {
            try {
                ContinuityCheck c =
                    is_soft_continuous(f, inst.base, inst.base, opts.limits, &*tau, &*tau);
                if (!c.topological || c.pointwise != *c.topological) ok = false;
            } catch (const std::logic_error&) {
                ok = false;
            }
        }
        rep.add("continuity-paths", ok ? Verdict::Pass : Verdict::Fail,
                ordered_json{{"maps", maps.size()}}, ms_since(t0));
    } else {
        rep.add("continuity-paths", Verdict::Skipped,
                ordered_json{{"reason", "topology over the cap"}});
    }

    // ball-based T1 against the enumerated-opens T1
    t0 = Clock::now();
    if (tau) {
        try {
            T1Check t1 = is_soft_t1(inst.base, &*tau, opts.limits);
            rep.add("t1-paths", Verdict::Pass,
                    ordered_json{{"t1", t1.t1}, {"vacuous", t1.vacuous}}, ms_since(t0));
        } catch (const std::logic_error& e) {
            rep.add("t1-paths", Verdict::Fail, ordered_json{{"reason", e.what()}}, ms_since(t0));
        }
    } else {
        rep.add("t1-paths", Verdict::Skipped, ordered_json{{"reason", "topology over the cap"}});
    }

    // greedy covers versus the exact minimum search
    t0 = Clock::now();
    {
        TotalBoundednessReport tb = is_totally_bounded(inst.base, opts.limits);
        bool ok = true;
        if (tb.bounded()) {
            for (const auto& c : tb.covers) {
                SoftSet acc = SoftSet::empty_like(inst.host);
                for (const auto& center : c.centers)
                    acc = acc | entourage_ball(inst.base.member(c.member), center);
                if (!(acc == inst.host)) ok = false;
                if (c.exact_minimum && *c.exact_minimum > int(c.centers.size())) ok = false;
            }
        }
        rep.add("cover-paths", ok ? Verdict::Pass : Verdict::Fail,
                ordered_json{{"applicable", tb.bounded()}}, ms_since(t0));
    }

    // every parameterwise slice must pass the independent classical validator
    t0 = Clock::now();
    {
        bool ok = true;
        for (int p = 0; p < inst.host.param_count(); ++p)
            if (!classical::validate_base(classical::slice(inst.base, p)).ok) ok = false;
        rep.add("slices-classical", ok ? Verdict::Pass : Verdict::Fail,
                ordered_json{{"params", inst.host.param_count()}}, ms_since(t0));
    }

    // single-parameter instances: the whole verdict vector must match the
    // classical implementation
    t0 = Clock::now();
    if (inst.host.param_count() == 1 && inst.host.is_carrier()) {
        classical::Base cb = classical::slice(inst.base, 0);
        bool ok = true;
        ok = ok && classical::separated(cb) == is_separated(inst.base);
        if (tau) ok = ok && classical::t1(cb) == is_soft_t1(inst.base, &*tau, opts.limits).t1;
        ok = ok && classical::regular(cb) == is_soft_regular(inst.base, opts.limits).regular;
        ok = ok && classical::totally_bounded(cb) == is_totally_bounded(inst.base).bounded();
        if (inst.host.soft_element_count() <= std::uint64_t(opts.limits.max_filter_elements))
            ok = ok && classical::complete(cb) == is_complete(inst.base, opts.limits).complete;
        for (const auto& f : maps) {
            std::vector<int> table =
                classical::slice_map(inst.host, inst.host, 0, f.tables()[0]);
            ok = ok && classical::uniformly_continuous(table, cb, cb) ==
                           is_soft_uniformly_continuous(f, inst.base, inst.base)
                               .uniformly_continuous;
            ok = ok && classical::continuous(table, cb, cb) ==
                           is_soft_continuous(f, inst.base, inst.base, opts.limits).continuous();
        }
        rep.add("classical-bridge", ok ? Verdict::Pass : Verdict::Fail,
                ordered_json{{"maps", maps.size()}}, ms_since(t0));
    } else {
        rep.add("classical-bridge", Verdict::Vacuous,
                ordered_json{{"reason", "bridge compares single-parameter instances"}});
    }
    return rep;
}

} // namespace softuni
