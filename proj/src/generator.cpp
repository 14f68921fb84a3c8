#include "softuni/generator.hpp"

#include <random>

namespace softuni {

namespace {

// mt19937_64 output is standardized; reduction by modulo keeps documents
// byte-identical across platforms (bias is irrelevant here)
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::vector<BitVec> random_carrier_sections(std::mt19937_64& rng, int universe, int params) {
    std::vector<BitVec> out;
    for (int p = 0; p < params; ++p) {
        BitVec s(universe);
        while (s.none()) {
            std::uint64_t bits = below(rng, std::uint64_t{1} << universe);
            for (int i = 0; i < universe; ++i)
                if (bits >> i & 1) s.set(i);
        }
        out.push_back(std::move(s));
    }
    return out;
}

SoftRelation random_partition(const SoftSet& host, std::mt19937_64& rng) {
    std::vector<BitMatrix> gs;
    for (int p = 0; p < host.param_count(); ++p) {
        BitMatrix g(host.universe().size());
        auto elems = host.section(p).indices();
        std::vector<int> block(elems.size());
        for (auto& b : block) b = int(below(rng, elems.size()));
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = 0; j < elems.size(); ++j)
                if (block[i] == block[j]) g.set(elems[i], elems[j]);
        gs.push_back(std::move(g));
    }
    return SoftRelation(host, std::move(gs));
}

SoftRelation with_symmetric_noise(const SoftRelation& r, std::mt19937_64& rng) {
    const SoftSet& host = r.host();
    std::vector<BitMatrix> gs = r.graphs();
    for (int p = 0; p < host.param_count(); ++p) {
        auto elems = host.section(p).indices();
        if (elems.size() < 2) continue;
        int extra = int(below(rng, 3)); // 0..2 noise pairs
        for (int t = 0; t < extra; ++t) {
            int x = elems[below(rng, elems.size())];
            int y = elems[below(rng, elems.size())];
            gs[p].set(x, y);
            gs[p].set(y, x);
        }
    }
    return SoftRelation(host, std::move(gs));
}

// reflexive symmetric path over the first section: its square escapes, so a
// singleton base over it cannot satisfy the square-root axiom
InstanceDocument invalid_fallback() {
    InstanceDocument doc;
    doc.universe = {"a", "b", "c"};
    doc.parameters = {"e1"};
    doc.sections = {{"a", "b", "c"}};
    doc.has_base = true;
    NamedGraph g;
    g.name = "U1";
    g.pairs = {{{"a", "a"},
                {"a", "b"},
                {"b", "a"},
                {"b", "b"},
                {"b", "c"},
                {"c", "b"},
                {"c", "c"}}};
    doc.base.push_back(std::move(g));
    return doc;
}

InstanceDocument document_from(const SoftSet& host, const UniformityBase& base) {
    InstanceDocument doc;
    doc.universe = host.universe().atoms();
    doc.parameters = host.params().names();
    for (int p = 0; p < host.param_count(); ++p) {
        std::vector<std::string> sec;
        host.section(p).for_each([&](int v) { sec.push_back(host.universe().name(v)); });
        doc.sections.push_back(std::move(sec));
    }
    doc.has_base = true;
    for (int i = 0; i < base.size(); ++i) {
        NamedGraph g;
        g.name = base.member_name(i);
        g.pairs.resize(host.param_count());
        for (int p = 0; p < host.param_count(); ++p)
            for (int x = 0; x < base.member(i).graph(p).dim(); ++x)
                base.member(i).graph(p).row(x).for_each([&](int y) {
                    g.pairs[p].emplace_back(host.universe().name(x), host.universe().name(y));
                });
        doc.base.push_back(std::move(g));
    }
    return doc;
}

InstanceDocument generate_with(std::mt19937_64& rng, std::vector<std::string> parameters,
                               const GeneratorProfile& profile) {
    int universe_size = 1 + int(below(rng, profile.max_universe));
    std::vector<std::string> atoms;
    for (int i = 0; i < universe_size; ++i) atoms.push_back(std::string(1, char('a' + i)));

    auto universe = std::make_shared<Universe>(atoms);
    auto params = std::make_shared<ParameterSet>(parameters);

    for (int attempt = 0; attempt < 200; ++attempt) {
        SoftSet host(universe, params,
                     random_carrier_sections(rng, universe_size, int(parameters.size())));
        int k = 1 + int(below(rng, profile.max_base));
        std::vector<SoftRelation> inputs;
        for (int i = 0; i < k; ++i) {
            SoftRelation part = random_partition(host, rng);
            inputs.push_back(below(rng, 2) ? with_symmetric_noise(part, rng) : part);
        }
        SaturationResult sat = saturate(host, std::move(inputs));
        if (sat.valid != profile.allow_invalid) return document_from(host, sat.base);
    }

    if (profile.allow_invalid) return invalid_fallback();
    // partitions alone always validate
    SoftSet host(universe, params,
                 random_carrier_sections(rng, universe_size, int(parameters.size())));
    SaturationResult sat = saturate(host, {random_partition(host, rng)});
    return document_from(host, sat.base);
}

} // namespace

InstanceDocument generate_instance(std::uint64_t seed, const GeneratorProfile& profile) {
    std::mt19937_64 rng(seed);
    int param_count = 1 + int(below(rng, profile.max_params));
    std::vector<std::string> parameters;
    for (int i = 0; i < param_count; ++i) parameters.push_back("e" + std::to_string(i + 1));
    return generate_with(rng, std::move(parameters), profile);
}

InstanceDocument generate_instance_with_params(std::uint64_t seed,
                                               const std::vector<std::string>& parameters,
                                               const GeneratorProfile& profile) {
    std::mt19937_64 rng(seed);
    return generate_with(rng, parameters, profile);
}

MappingDocument generate_mapping(std::uint64_t seed, const InstanceDocument& domain,
                                 const InstanceDocument& codomain) {
    if (domain.parameters != codomain.parameters)
        throw std::invalid_argument("generate_mapping: parameter sets differ");
    std::mt19937_64 rng(seed);
    MappingDocument doc;
    doc.domain = domain;
    doc.codomain = codomain;
    for (size_t p = 0; p < domain.parameters.size(); ++p) {
        const auto& targets = codomain.sections[p];
        for (const auto& x : domain.sections[p])
            doc.maps[domain.parameters[p]][x] = targets[below(rng, targets.size())];
    }
    return doc;
}

} // namespace softuni
