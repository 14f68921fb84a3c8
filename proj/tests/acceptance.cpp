// Acceptance gate: ten property campaigns at desk scale, one per --criterion.
// Each prints a single PASS/FAIL line; the process exits nonzero when a
// campaign finds violations.

#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "softuni/checks.hpp"
#include "softuni/generator.hpp"

using namespace softuni;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

constexpr int kCorpusSize = 1000;

const std::vector<BuiltInstance>& corpus() {
    static std::vector<BuiltInstance> instances = [] {
        std::vector<BuiltInstance> out;
        out.reserve(kCorpusSize);
        for (std::uint64_t seed = 1; seed <= kCorpusSize; ++seed)
            out.push_back(build_instance(generate_instance(seed)));
        return out;
    }();
    return instances;
}

// ---- independent literal machinery (std::set relations over the document) --

using LRel = std::set<std::pair<int, int>>; // one parameter
using LSoft = std::vector<LRel>;            // parameter-indexed

LSoft literal_meet(const LSoft& a, const LSoft& b) {
    LSoft out(a.size());
    for (size_t p = 0; p < a.size(); ++p)
        for (const auto& pr : a[p])
            if (b[p].count(pr)) out[p].insert(pr);
    return out;
}

LSoft literal_inverse(const LSoft& a) {
    LSoft out(a.size());
    for (size_t p = 0; p < a.size(); ++p)
        for (const auto& [x, y] : a[p]) out[p].insert({y, x});
    return out;
}

LSoft literal_compose(const LSoft& outer, const LSoft& inner) {
    LSoft out(outer.size());
    for (size_t p = 0; p < outer.size(); ++p)
        for (const auto& [x, y] : inner[p])
            for (const auto& [y2, z] : outer[p])
                if (y == y2) out[p].insert({x, z});
    return out;
}

bool literal_subset(const LSoft& a, const LSoft& b) {
    for (size_t p = 0; p < a.size(); ++p)
        for (const auto& pr : a[p])
            if (!b[p].count(pr)) return false;
    return true;
}

// members straight from the document text, bypassing the bit-matrix path
std::vector<LSoft> literal_members(const BuiltInstance& inst) {
    std::vector<LSoft> out;
    for (const auto& g : inst.doc.base) {
        LSoft rel(inst.doc.parameters.size());
        for (size_t p = 0; p < inst.doc.parameters.size(); ++p)
            for (const auto& [x, y] : g.pairs[p])
                rel[p].insert({*inst.host.universe().index_of(x),
                               *inst.host.universe().index_of(y)});
        out.push_back(std::move(rel));
    }
    return out;
}

LSoft literal_diagonal(const BuiltInstance& inst) {
    LSoft d(inst.doc.parameters.size());
    for (size_t p = 0; p < inst.doc.parameters.size(); ++p)
        inst.host.section(int(p)).for_each([&](int v) { d[p].insert({v, v}); });
    return d;
}

SoftRelation to_relation(const BuiltInstance& inst, const LSoft& rel) {
    std::vector<BitMatrix> gs;
    for (size_t p = 0; p < rel.size(); ++p) {
        BitMatrix g(inst.host.universe().size());
        for (const auto& [x, y] : rel[p]) g.set(x, y);
        gs.push_back(std::move(g));
    }
    return SoftRelation(inst.host, std::move(gs));
}

LSoft random_literal_relation(const BuiltInstance& inst, std::mt19937_64& rng, bool reflexive) {
    LSoft rel(inst.doc.parameters.size());
    for (size_t p = 0; p < rel.size(); ++p) {
        auto elems = inst.host.section(int(p)).indices();
        for (int x : elems)
            for (int y : elems)
                if (rng() & 1) rel[p].insert({x, y});
        if (reflexive)
            for (int x : elems) rel[p].insert({x, x});
    }
    return rel;
}

struct Campaign {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::string first_witness;

    void fail(const std::string& witness) {
        if (violations == 0) first_witness = witness;
        ++violations;
    }
};

int report(int n, const char* title, const Campaign& c, double elapsed,
           double budget = 0.0) {
    bool time_ok = budget <= 0.0 || elapsed < budget;
    bool pass = c.violations == 0 && time_ok;
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " — " << title << " ("
              << c.checked << " checks, " << c.violations << " violations, " << elapsed << " s";
    if (budget > 0.0) std::cout << ", budget " << budget << " s";
    std::cout << ")\n";
    if (!c.first_witness.empty()) std::cout << "  first witness: " << c.first_witness << "\n";
    if (!time_ok) std::cout << "  time budget exceeded\n";
    return pass ? 0 : 1;
}

// --- criterion 1: axiom validator soundness ------------------------------

int criterion1() {
    auto t0 = Clock::now();
    Campaign c;
    for (std::uint64_t seed = 1; seed <= kCorpusSize; ++seed) {
        BuiltInstance inst = build_instance(generate_instance(seed));
        if (!inst.base.validated_ok()) {
            c.fail("seed " + std::to_string(seed) + " emitted an invalid base");
            continue;
        }
        auto members = literal_members(inst);
        LSoft diag = literal_diagonal(inst);

        // literal (U1)-(U4) in base form
        bool ok = true;
        for (const auto& m : members)
            if (!literal_subset(diag, m)) ok = false;
        for (size_t i = 0; i < members.size() && ok; ++i)
            for (size_t j = i + 1; j < members.size() && ok; ++j) {
                LSoft meet_ij = literal_meet(members[i], members[j]);
                bool below = false;
                for (const auto& m : members)
                    if (literal_subset(m, meet_ij)) below = true;
                ok = below;
            }
        for (const auto& m : members) {
            if (!ok) break;
            LSoft inv = literal_inverse(m);
            bool below = false;
            for (const auto& k : members)
                if (literal_subset(k, inv)) below = true;
            ok = below;
        }
        for (const auto& m : members) {
            if (!ok) break;
            bool rooted = false;
            for (const auto& k : members)
                if (literal_subset(literal_compose(k, k), m)) rooted = true;
            ok = rooted;
        }
        ++c.checked;
        if (!ok) {
            c.fail("seed " + std::to_string(seed) + ": literal re-check rejects the valid base");
            continue;
        }

        // U5-closure: membership must equal "some member literally below"
        std::mt19937_64 rng(seed ^ 0x55aa55aaULL);
        for (int probe = 0; probe < 200; ++probe) {
            LSoft w;
            int kind = probe % 3;
            if (kind == 0) {
                // superset of a random member
                w = members[rng() % members.size()];
                LSoft extra = random_literal_relation(inst, rng, false);
                for (size_t p = 0; p < w.size(); ++p)
                    for (const auto& pr : extra[p]) w[p].insert(pr);
            } else {
                w = random_literal_relation(inst, rng, kind == 1);
            }
            bool literal = false;
            for (const auto& m : members)
                if (literal_subset(m, w)) literal = true;
            bool fast = member_of(inst.base, to_relation(inst, w));
            ++c.checked;
            if (fast != literal)
                c.fail("seed " + std::to_string(seed) + " probe " + std::to_string(probe));
        }
    }
    return report(1, "axiom validator vs literal re-check + 200 membership probes each", c,
                  seconds_since(t0), 60.0);
}

// --- criterion 2: the induced family as a topology ------------------------

int criterion2() {
    auto t0 = Clock::now();
    Campaign c;
    std::mt19937_64 rng(20260810);
    for (const auto& inst : corpus()) {
        std::optional<SoftTopology> tau;
        try {
            tau = enumerate_topology(inst.base);
        } catch (const CapExceeded&) {
            continue;
        }
        const auto& opens = tau->open_masks();
        ++c.checked;
        if (!tau->contains_mask(0) || !tau->contains_mask(tau->codec().full_mask()))
            c.fail(instance_digest(inst.doc) + ": empty or host missing");

        auto describe = [&](std::uint64_t a, std::uint64_t b, const char* op) {
            std::ostringstream os;
            os << instance_digest(inst.doc) << ": " << op << " of "
               << tau->codec().decode(a).to_string() << " and "
               << tau->codec().decode(b).to_string() << " is not open";
            return os.str();
        };
        auto check_pair = [&](std::uint64_t a, std::uint64_t b) {
            ++c.checked;
            if (!tau->contains_mask(a & b)) c.fail(describe(a, b, "intersection"));
            ++c.checked;
            if (!tau->contains_mask(a | b)) c.fail(describe(a, b, "union"));
        };
        auto check_triple = [&](std::uint64_t a, std::uint64_t b, std::uint64_t d) {
            ++c.checked;
            if (!tau->contains_mask(a | b | d))
                c.fail(instance_digest(inst.doc) + ": triple union not open");
        };

        if (opens.size() <= 64) {
            for (size_t i = 0; i < opens.size(); ++i)
                for (size_t j = i + 1; j < opens.size(); ++j) {
                    check_pair(opens[i], opens[j]);
                    for (size_t k = j + 1; k < opens.size(); ++k)
                        check_triple(opens[i], opens[j], opens[k]);
                }
        } else {
            for (int t = 0; t < 500; ++t) {
                std::uint64_t a = opens[rng() % opens.size()];
                std::uint64_t b = opens[rng() % opens.size()];
                check_pair(a, b);
                check_triple(a, b, opens[rng() % opens.size()]);
            }
        }
    }
    return report(2, "induced opens contain empty/host, closed under meets and joins of <= 3", c,
                  seconds_since(t0));
}

// --- criterion 3: separated iff T1 ----------------------------------------

int criterion3() {
    auto t0 = Clock::now();
    Campaign c;
    for (const auto& inst : corpus()) {
        std::optional<SoftTopology> tau;
        try {
            tau = enumerate_topology(inst.base);
        } catch (const CapExceeded&) {
        }
        ++c.checked;
        try {
            T1Check t1 = is_soft_t1(inst.base, tau ? &*tau : nullptr);
            bool sep = is_separated(inst.base);
            if (!t1.vacuous && t1.t1 != sep)
                c.fail(instance_digest(inst.doc) + ": separated=" + std::to_string(sep) +
                       " t1=" + std::to_string(t1.t1));
            if (tau && !t1.oracle_ran) c.fail(instance_digest(inst.doc) + ": oracle skipped");
        } catch (const std::logic_error& e) {
            c.fail(instance_digest(inst.doc) + ": " + e.what()); // ball/topology paths diverged
        }
    }
    return report(3, "separatedness equals soft T1, cross-checked by the topology oracle", c,
                  seconds_since(t0));
}

// --- criterion 4: regularity with verified witnesses -----------------------

int criterion4() {
    auto t0 = Clock::now();
    Campaign c;
    for (const auto& inst : corpus()) {
        std::optional<SoftTopology> tau;
        RegularityCheck rc;
        try {
            tau = enumerate_topology(inst.base);
            rc = is_soft_regular(inst.base);
        } catch (const CapExceeded&) {
            continue;
        }
        ++c.checked;
        if (!rc.regular)
            c.fail(instance_digest(inst.doc) + ": not regular at " +
                   (rc.failure ? rc.failure->point.to_string() : "?"));
        // independent witness audit
        for (const auto& w : rc.samples) {
            ++c.checked;
            bool good = w.point.member_of(w.open_around_point) &&
                        w.closed_set.is_subset_of(w.open_around_closed) &&
                        (w.open_around_point & w.open_around_closed).is_empty() &&
                        tau->contains(w.open_around_point) &&
                        tau->contains(w.open_around_closed) &&
                        tau->is_closed_mask(tau->codec().encode(w.closed_set));
            if (!good) c.fail(instance_digest(inst.doc) + ": witness audit failed");
        }
    }
    return report(4, "regularity holds with audited witnesses on every enumerable instance", c,
                  seconds_since(t0));
}

// --- criterion 5: uniform continuity equals continuity here ----------------

int criterion5() {
    auto t0 = Clock::now();
    Campaign c;
    for (std::uint64_t s = 1; s <= 500; ++s) {
        InstanceDocument dom_doc = generate_instance(10000 + 2 * s);
        InstanceDocument cod_doc =
            generate_instance_with_params(10001 + 2 * s, dom_doc.parameters);
        BuiltMapping m = build_mapping(generate_mapping(s, dom_doc, cod_doc),
                                       [](const std::string&) -> std::string {
                                           throw std::runtime_error("inline only");
                                       });
        ++c.checked;
        try {
            ContinuityCheck cont = is_soft_continuous(m.map, m.domain.base, m.codomain.base);
            UniformContinuityCheck uc =
                is_soft_uniformly_continuous(m.map, m.domain.base, m.codomain.base);
            if (cont.topological && *cont.topological != cont.pointwise)
                c.fail("seed " + std::to_string(s) + ": continuity paths disagree");
            if (uc.uniformly_continuous != cont.continuous())
                c.fail("seed " + std::to_string(s) + ": uc=" +
                       std::to_string(uc.uniformly_continuous) +
                       " cont=" + std::to_string(cont.continuous()));
        } catch (const std::logic_error& e) {
            c.fail("seed " + std::to_string(s) + ": " + e.what());
        }
    }
    return report(5, "500 random mappings: uniformly continuous iff continuous, paths agree", c,
                  seconds_since(t0), 60.0);
}

// --- criterion 6: Lebesgue entourages for random covers --------------------

int criterion6() {
    auto t0 = Clock::now();
    Campaign c;
    for (const auto& inst : corpus()) {
        std::optional<SoftTopology> tau;
        try {
            tau = enumerate_topology(inst.base);
        } catch (const CapExceeded&) {
            continue;
        }
        std::mt19937_64 rng(instance_digest(inst.doc).front() * 7919ull + 13);
        auto elements = enumerate_soft_elements(inst.host);
        for (int t = 0; t < 50; ++t) {
            std::vector<SoftSet> cover = random_open_cover(*tau, rng);
            ++c.checked;
            try {
                LebesgueResult r = lebesgue_entourage(inst.base, cover, {}, &*tau);
                // audit independently of the construction's own flags
                bool member = false;
                for (const auto& m : inst.base.members())
                    if (is_subrelation(m, r.entourage)) member = true;
                if (!member) c.fail(instance_digest(inst.doc) + ": result not in the uniformity");
                for (const auto& x : elements) {
                    SoftSet ball = entourage_ball(r.entourage, x);
                    bool inside = false;
                    for (const auto& o : cover)
                        if (ball.is_subset_of(o)) inside = true;
                    if (!inside) {
                        c.fail(instance_digest(inst.doc) + ": ball at " + x.to_string() +
                               " refines nothing");
                        break;
                    }
                }
            } catch (const std::exception& e) {
                c.fail(instance_digest(inst.doc) + ": " + e.what());
            }
        }
    }
    return report(6, "Lebesgue entourage refines 50 random open covers per instance", c,
                  seconds_since(t0));
}

// --- criterion 7: totally bounded and complete -----------------------------

int criterion7() {
    auto t0 = Clock::now();
    Campaign c;
    for (const auto& inst : corpus()) {
        if (inst.host.soft_element_count() > 16) continue;
        ++c.checked;
        TotalBoundednessReport tb = is_totally_bounded(inst.base);
        if (!tb.bounded()) {
            c.fail(instance_digest(inst.doc) + ": not totally bounded");
            continue;
        }
        for (const auto& cover : tb.covers) {
            SoftSet acc = SoftSet::empty_like(inst.host);
            for (const auto& center : cover.centers)
                acc = acc | entourage_ball(inst.base.member(cover.member), center);
            ++c.checked;
            if (!(acc == inst.host))
                c.fail(instance_digest(inst.doc) + ": witness cover misses the host");
        }

        CompletenessReport comp = is_complete(inst.base);
        ++c.checked;
        if (!comp.complete) {
            c.fail(instance_digest(inst.doc) + ": incomplete");
            continue;
        }
        auto elements = enumerate_soft_elements(inst.host);
        for (const auto& fv : comp.cauchy_filters) {
            std::vector<SoftElement> gen;
            for (int i : fv.generator) gen.push_back(elements[i]);
            PrincipalFilter phi(inst.host, gen);
            Thm54Trace trace = thm54_witness(inst.base, phi);
            ++c.checked;
            if (!trace.verified || !converges_to(inst.base, phi, trace.limit))
                c.fail(instance_digest(inst.doc) + ": unverified limit trace");
        }
    }
    return report(7, "small carrier instances are totally bounded and complete with traces", c,
                  seconds_since(t0));
}

// --- criterion 8: the classical bridge -------------------------------------

int criterion8() {
    auto t0 = Clock::now();
    Campaign c;
    std::mt19937_64 rng(88);
    for (const auto& inst : corpus()) {
        if (inst.host.param_count() >= 2) {
            for (int p = 0; p < inst.host.param_count(); ++p) {
                ++c.checked;
                if (!classical::validate_base(classical::slice(inst.base, p)).ok)
                    c.fail(instance_digest(inst.doc) + ": slice " + std::to_string(p) +
                           " fails the classical validator");
            }
            continue;
        }

        classical::Base cb = classical::slice(inst.base, 0);
        auto tau = enumerate_topology(inst.base);
        ++c.checked;
        if (classical::separated(cb) != is_separated(inst.base))
            c.fail(instance_digest(inst.doc) + ": separated differs");
        ++c.checked;
        if (classical::t1(cb) != is_soft_t1(inst.base, &tau).t1)
            c.fail(instance_digest(inst.doc) + ": t1 differs");
        ++c.checked;
        if (classical::regular(cb) != is_soft_regular(inst.base).regular)
            c.fail(instance_digest(inst.doc) + ": regular differs");
        ++c.checked;
        if (classical::totally_bounded(cb) != is_totally_bounded(inst.base).bounded())
            c.fail(instance_digest(inst.doc) + ": totally bounded differs");
        if (inst.host.soft_element_count() <= 16) {
            ++c.checked;
            if (classical::complete(cb) != is_complete(inst.base).complete)
                c.fail(instance_digest(inst.doc) + ": complete differs");
        }

        // sampled self-maps: continuity and uniform continuity must coincide
        for (int t = 0; t < 4; ++t) {
            std::vector<std::vector<int>> tables(1, std::vector<int>(inst.host.universe().size(), -1));
            auto targets = inst.host.section(0).indices();
            inst.host.section(0).for_each(
                [&](int x) { tables[0][x] = t == 0 ? x : int(targets[rng() % targets.size()]); });
            SoftMapping f(inst.host, inst.host, tables);
            std::vector<int> table = classical::slice_map(inst.host, inst.host, 0, f.tables()[0]);
            ++c.checked;
            if (classical::continuous(table, cb, cb) !=
                is_soft_continuous(f, inst.base, inst.base).continuous())
                c.fail(instance_digest(inst.doc) + ": continuity differs");
            ++c.checked;
            if (classical::uniformly_continuous(table, cb, cb) !=
                is_soft_uniformly_continuous(f, inst.base, inst.base).uniformly_continuous)
                c.fail(instance_digest(inst.doc) + ": uniform continuity differs");
        }
    }
    return report(8, "single-parameter verdicts match the classical oracle; slices validate", c,
                  seconds_since(t0));
}

// --- criterion 9: golden fixtures ------------------------------------------

int criterion9() {
    auto t0 = Clock::now();
    Campaign c;

    BuiltInstance disc = build_instance(parse_instance(slurp("fixtures/discrete.sui")));
    SoftTopology tau_d = enumerate_topology(disc.base);
    ++c.checked;
    if (tau_d.size() != 16) c.fail("discrete fixture: expected 16 opens");
    ++c.checked;
    if (tau_d.size() != (std::uint64_t{1} << tau_d.codec().bit_count()))
        c.fail("discrete fixture: not the full power set");

    BuiltInstance full = build_instance(parse_instance(slurp("fixtures/full.sui")));
    SoftTopology tau_f = enumerate_topology(full.base);
    ++c.checked;
    if (tau_f.size() != 8) c.fail("full fixture: expected 8 opens");
    for (auto m : tau_f.open_masks()) {
        ++c.checked;
        if (!tau_f.is_vacuous_mask(m) && m != tau_f.codec().full_mask())
            c.fail("full fixture: a carrier proper subset is open");
    }
    ++c.checked;
    if (is_separated(full.base)) c.fail("full fixture: should not be separated");
    ++c.checked;
    if (is_soft_t1(full.base, &tau_f).t1) c.fail("full fixture: should not be T1");

    BuiltInstance metric = build_instance(parse_instance(slurp("fixtures/metric.sui")));
    ++c.checked;
    if (!is_separated(metric.base)) c.fail("metric fixture: grid below min distance separates");
    SoftTopology tau_m = enumerate_topology(metric.base);
    ++c.checked;
    if (tau_m.size() != 16) c.fail("metric fixture: expected the 16-open power set");

    return report(9, "golden fixtures: discrete=16 opens, full=vacuous+host=8, metric separated",
                  c, seconds_since(t0));
}

// --- criterion 10: relaxed-mode sanity --------------------------------------

int criterion10() {
    auto t0 = Clock::now();
    Campaign c;

    BuiltInstance path = build_instance(parse_instance(slurp("fixtures/relaxed_path.sui")));
    ++c.checked;
    if (path.base.validated_ok() || !path.base.is_semi_uniformity())
        c.fail("stored base should fail exactly the square-root axiom");

    MappingDocument doc = MappingDocument::parse(slurp("fixtures/relaxed_gap.map"));
    BuiltMapping gap = build_mapping(doc, [](const std::string& p) {
        return slurp("fixtures/" + p);
    });
    ContinuityCheck cont = is_soft_continuous(gap.map, gap.domain.base, gap.codomain.base);
    UniformContinuityCheck uc =
        is_soft_uniformly_continuous(gap.map, gap.domain.base, gap.codomain.base);
    ++c.checked;
    if (!(cont.topological && *cont.topological))
        c.fail("gap mapping should be topologically continuous");
    ++c.checked;
    if (cont.pointwise) c.fail("gap mapping should fail the pointwise ball criterion");
    ++c.checked;
    if (uc.uniformly_continuous) c.fail("gap mapping should not be uniformly continuous");

    // on principal filters a Cauchy generator always converges to its own
    // points, valid base or not; the gap above is what keeps the checkers
    // honest, and this sweep documents the other disjunct coming up empty
    auto elements = enumerate_soft_elements(path.host);
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << elements.size()); ++g) {
        std::vector<SoftElement> gen;
        for (size_t i = 0; i < elements.size(); ++i)
            if (g >> i & 1) gen.push_back(elements[i]);
        bool cauchy = true;
        for (const auto& m : path.base.members())
            for (const auto& x : gen)
                for (const auto& y : gen)
                    if (!pair_in(m, x, y)) cauchy = false;
        if (!cauchy) continue;
        bool limit = false;
        for (const auto& p : elements) {
            bool to_p = true;
            for (const auto& m : path.base.members())
                for (const auto& x : gen)
                    if (!pair_in(m, p, x)) to_p = false;
            if (to_p) limit = true;
        }
        ++c.checked;
        if (!limit) c.fail("a Cauchy generator without a limit appeared after all");
    }

    // generated invalid instances exist and fail exactly U4 as well
    GeneratorProfile invalid;
    invalid.allow_invalid = true;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        BuiltInstance inst = build_instance(generate_instance(seed, invalid));
        ++c.checked;
        if (inst.base.validated_ok() || !inst.base.is_semi_uniformity())
            c.fail("allow-invalid seed " + std::to_string(seed) + " is not a semi-uniformity");
    }

    return report(10, "stored square-root-free base exhibits the continuity gap", c,
                  seconds_since(t0));
}

} // namespace

int main(int argc, char** argv) {
    int which = 0;
    for (int i = 1; i + 1 < argc + 1; ++i)
        if (i + 1 < argc && std::strcmp(argv[i], "--criterion") == 0) which = std::atoi(argv[i + 1]);

    int (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                           criterion6, criterion7, criterion8, criterion9, criterion10};
    try {
        if (which >= 1 && which <= 10) return criteria[which - 1]();
        int rc = 0;
        for (auto* f : criteria) rc |= f();
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "acceptance harness error: " << e.what() << "\n";
        return 2;
    }
}
