#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "softuni/core.hpp"
#include "softuni/uniformity.hpp"

namespace testutil {

using namespace softuni;

inline UniversePtr abc_universe() {
    return std::make_shared<Universe>(std::vector<std::string>{"a", "b", "c"});
}

inline ParameterSetPtr params(std::vector<std::string> names) {
    return std::make_shared<ParameterSet>(std::move(names));
}

inline BitVec bv(const Universe& u, std::initializer_list<const char*> atoms) {
    BitVec v(u.size());
    for (const char* a : atoms) v.set(*u.index_of(a));
    return v;
}

// The running two-parameter fixture: F(e1) = {a,b}, F(e2) = {b,c}.
inline SoftSet fixture_host() {
    auto u = abc_universe();
    auto e = params({"e1", "e2"});
    std::vector<BitVec> secs{bv(*u, {"a", "b"}), bv(*u, {"b", "c"})};
    return SoftSet(u, e, std::move(secs));
}

inline SoftSet subset(const SoftSet& host,
                      std::vector<std::initializer_list<const char*>> sections) {
    std::vector<BitVec> secs;
    for (auto& s : sections) secs.push_back(bv(host.universe(), s));
    return SoftSet(host.universe_ptr(), host.params_ptr(), std::move(secs));
}

using PairList = std::vector<std::pair<const char*, const char*>>;

inline SoftRelation relation(const SoftSet& host, std::vector<PairList> pairs_per_param) {
    std::vector<BitMatrix> gs;
    for (int p = 0; p < host.param_count(); ++p) {
        BitMatrix g(host.universe().size());
        for (auto& [x, y] : pairs_per_param[p])
            g.set(*host.universe().index_of(x), *host.universe().index_of(y));
        gs.push_back(std::move(g));
    }
    return SoftRelation(host, std::move(gs));
}

// Random equivalence relation: a partition of each section into blocks.
inline SoftRelation random_partition_relation(const SoftSet& host, std::mt19937_64& rng) {
    std::vector<BitMatrix> gs;
    for (int p = 0; p < host.param_count(); ++p) {
        BitMatrix g(host.universe().size());
        auto elems = host.section(p).indices();
        std::vector<int> block(elems.size());
        int blocks = elems.empty() ? 0 : 1 + int(rng() % elems.size());
        for (auto& b : block) b = int(rng() % blocks);
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = 0; j < elems.size(); ++j)
                if (block[i] == block[j]) g.set(elems[i], elems[j]);
        gs.push_back(std::move(g));
    }
    return SoftRelation(host, std::move(gs));
}

// Saturated valid base: partitions plus symmetrized noise around them; falls
// back to the discrete base when the dice keep rolling invalid families.
inline softuni::UniformityBase random_valid_base(const SoftSet& host, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        SoftRelation part = random_partition_relation(host, rng);
        std::vector<SoftRelation> inputs{part};
        if (rng() & 1) {
            SoftRelation noisy = part;
            for (int p = 0; p < host.param_count(); ++p) {
                auto elems = host.section(p).indices();
                if (elems.size() >= 2 && (rng() & 1)) {
                    int x = elems[rng() % elems.size()], y = elems[rng() % elems.size()];
                    BitMatrix g = noisy.graph(p);
                    g.set(x, y);
                    g.set(y, x);
                    std::vector<BitMatrix> gs = noisy.graphs();
                    gs[p] = g;
                    noisy = SoftRelation(host, std::move(gs));
                }
            }
            inputs.push_back(noisy);
        }
        if (rng() % 3 == 0) inputs.push_back(random_partition_relation(host, rng));
        auto sat = saturate(host, inputs);
        if (sat.valid) return sat.base;
    }
    return discrete_uniformity(host);
}

inline SoftElement element(const SoftSet& host, std::initializer_list<const char*> atoms) {
    std::vector<int> choice;
    for (const char* a : atoms) choice.push_back(*host.universe().index_of(a));
    return SoftElement(host, std::move(choice));
}

// Uniform random relation within the section squares.
inline SoftRelation random_relation(const SoftSet& host, std::mt19937_64& rng,
                                    bool force_reflexive = false) {
    std::vector<BitMatrix> gs;
    for (int p = 0; p < host.param_count(); ++p) {
        BitMatrix g(host.universe().size());
        auto elems = host.section(p).indices();
        for (int x : elems)
            for (int y : elems)
                if (rng() & 1) g.set(x, y);
        if (force_reflexive)
            for (int x : elems) g.set(x, x);
        gs.push_back(std::move(g));
    }
    return SoftRelation(host, std::move(gs));
}

} // namespace testutil
