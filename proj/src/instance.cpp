#include "softuni/instance.hpp"

#include <algorithm>
#include <sstream>

namespace softuni {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& msg, int line = 0) { throw ParseError(line, msg); }

std::vector<std::string> string_array(const ordered_json& j, const std::string& what) {
    if (!j.is_array()) fail(what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) fail(what + " must contain only strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

int index_in(const std::vector<std::string>& names, const std::string& x,
             const std::string& what) {
    auto it = std::find(names.begin(), names.end(), x);
    if (it == names.end()) fail(what + " references undeclared '" + x + "'");
    return int(it - names.begin());
}

void require_distinct(const std::vector<std::string>& names, const std::string& what) {
    if (names.empty()) fail(what + " must be nonempty");
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) fail(what + " contains an empty identifier");
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) fail(what + " contains duplicate '" + names[i] + "'");
    }
}

Rational rational_field(const ordered_json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) fail(what + " must be a rational string like \"3/2\"");
    auto r = parse_rational(j.get<std::string>());
    if (!r) fail(what + ": cannot parse rational '" + j.get<std::string>() + "'");
    return *r;
}

} // namespace

InstanceDocument InstanceDocument::from_json(const ordered_json& j) {
    if (!j.is_object()) fail("instance must be an object");
    static const std::vector<std::string> known{"universe", "parameters", "sections",
                                               "base",     "metric",     "epsilons"};
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (std::find(known.begin(), known.end(), k) == known.end())
            fail("unknown key '" + k + "'");
    }
    if (!j.contains("universe") || !j.contains("parameters") || !j.contains("sections"))
        fail("instance needs universe, parameters, and sections");

    InstanceDocument doc;
    doc.universe = string_array(j.at("universe"), "universe");
    require_distinct(doc.universe, "universe");
    doc.parameters = string_array(j.at("parameters"), "parameters");
    require_distinct(doc.parameters, "parameters");

    auto universe_pos = [&](const std::string& x, const std::string& what) {
        return index_in(doc.universe, x, what);
    };

    const auto& sections = j.at("sections");
    if (!sections.is_object()) fail("sections must be an object");
    for (const auto& [k, v] : sections.items()) {
        (void)v;
        index_in(doc.parameters, k, "sections");
    }
    doc.sections.resize(doc.parameters.size());
    for (size_t p = 0; p < doc.parameters.size(); ++p) {
        if (!sections.contains(doc.parameters[p]))
            fail("sections is missing parameter '" + doc.parameters[p] + "'");
        auto elems = string_array(sections.at(doc.parameters[p]), "section");
        std::vector<int> idx;
        for (const auto& e : elems) {
            int i = universe_pos(e, "section of '" + doc.parameters[p] + "'");
            if (std::find(idx.begin(), idx.end(), i) != idx.end())
                fail("section of '" + doc.parameters[p] + "' repeats '" + e + "'");
            idx.push_back(i);
        }
        std::sort(idx.begin(), idx.end());
        for (int i : idx) doc.sections[p].push_back(doc.universe[i]);
    }

    auto in_section = [&](size_t p, const std::string& x) {
        return std::find(doc.sections[p].begin(), doc.sections[p].end(), x) !=
               doc.sections[p].end();
    };

    doc.has_base = j.contains("base");
    doc.has_metric = j.contains("metric");
    if (doc.has_base && doc.has_metric) fail("at most one of base/metric may be present");
    if (doc.has_metric != j.contains("epsilons"))
        fail("metric and epsilons must be supplied together");

    if (doc.has_base) {
        const auto& base = j.at("base");
        if (!base.is_array() || base.empty()) fail("base must be a nonempty array");
        std::vector<std::string> names;
        for (const auto& entry : base) {
            if (!entry.is_object() || !entry.contains("name") || !entry.contains("graph"))
                fail("base entries need name and graph");
            for (const auto& [k, v] : entry.items()) {
                (void)v;
                if (k != "name" && k != "graph") fail("unknown key '" + k + "' in base entry");
            }
            NamedGraph g;
            if (!entry.at("name").is_string()) fail("relation name must be a string");
            g.name = entry.at("name").get<std::string>();
            names.push_back(g.name);
            const auto& graph = entry.at("graph");
            if (!graph.is_object()) fail("graph must be an object");
            for (const auto& [k, v] : graph.items()) {
                (void)v;
                index_in(doc.parameters, k, "graph of '" + g.name + "'");
            }
            g.pairs.resize(doc.parameters.size());
            for (size_t p = 0; p < doc.parameters.size(); ++p) {
                if (!graph.contains(doc.parameters[p]))
                    fail("graph of '" + g.name + "' is missing parameter '" + doc.parameters[p] +
                         "'");
                const auto& rows = graph.at(doc.parameters[p]);
                if (!rows.is_array()) fail("graph entries must be arrays of pairs");
                std::vector<std::pair<int, int>> idx_pairs;
                for (const auto& pr : rows) {
                    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() ||
                        !pr[1].is_string())
                        fail("graph pairs must be [\"x\",\"y\"]");
                    std::string x = pr[0].get<std::string>(), y = pr[1].get<std::string>();
                    if (!in_section(p, x) || !in_section(p, y))
                        fail("pair [" + x + "," + y + "] escapes the section square of '" +
                             doc.parameters[p] + "' in '" + g.name + "'");
                    std::pair<int, int> ip{universe_pos(x, "pair"), universe_pos(y, "pair")};
                    if (std::find(idx_pairs.begin(), idx_pairs.end(), ip) != idx_pairs.end())
                        fail("graph of '" + g.name + "' repeats a pair at '" +
                             doc.parameters[p] + "'");
                    idx_pairs.push_back(ip);
                }
                std::sort(idx_pairs.begin(), idx_pairs.end());
                for (auto [xi, yi] : idx_pairs)
                    g.pairs[p].emplace_back(doc.universe[xi], doc.universe[yi]);
            }
            doc.base.push_back(std::move(g));
        }
        require_distinct(names, "base names");
    }

    if (doc.has_metric) {
        const auto& metric = j.at("metric");
        if (!metric.is_object()) fail("metric must be an object");
        for (const auto& [k, v] : metric.items()) {
            (void)v;
            index_in(doc.parameters, k, "metric");
        }
        doc.metric.resize(doc.parameters.size());
        for (size_t p = 0; p < doc.parameters.size(); ++p) {
            std::map<std::pair<int, int>, Rational> seen;
            if (metric.contains(doc.parameters[p])) {
                const auto& rows = metric.at(doc.parameters[p]);
                if (!rows.is_array()) fail("metric entries must be arrays of triples");
                for (const auto& tr : rows) {
                    if (!tr.is_array() || tr.size() != 3 || !tr[0].is_string() ||
                        !tr[1].is_string())
                        fail("metric triples must be [\"x\",\"y\",\"p/q\"]");
                    std::string x = tr[0].get<std::string>(), y = tr[1].get<std::string>();
                    if (!in_section(p, x) || !in_section(p, y))
                        fail("metric pair [" + x + "," + y + "] escapes the section of '" +
                             doc.parameters[p] + "'");
                    if (x == y) fail("metric lists a diagonal distance for '" + x + "'");
                    Rational d = rational_field(tr[2], "metric distance");
                    if (d <= Rational(0)) fail("metric distance must be positive");
                    int xi = universe_pos(x, "metric"), yi = universe_pos(y, "metric");
                    auto key = std::minmax(xi, yi);
                    auto it = seen.find(key);
                    if (it != seen.end()) {
                        if (it->second != d)
                            fail("metric gives two distances for {" + x + "," + y + "}");
                    } else {
                        seen.emplace(key, d);
                    }
                }
            }
            // every unordered pair inside the section must be priced
            for (size_t a = 0; a < doc.sections[p].size(); ++a)
                for (size_t b = a + 1; b < doc.sections[p].size(); ++b) {
                    int xi = universe_pos(doc.sections[p][a], "metric");
                    int yi = universe_pos(doc.sections[p][b], "metric");
                    if (!seen.count(std::minmax(xi, yi)))
                        fail("metric is missing the distance {" + doc.sections[p][a] + "," +
                             doc.sections[p][b] + "} at '" + doc.parameters[p] + "'");
                }
            for (const auto& [key, d] : seen)
                doc.metric[p].emplace_back(doc.universe[key.first], doc.universe[key.second], d);
        }

        const auto& eps = j.at("epsilons");
        if (!eps.is_array() || eps.empty()) fail("epsilons must be a nonempty array");
        for (const auto& e : eps) {
            Rational r = rational_field(e, "epsilon");
            if (r <= Rational(0)) fail("epsilons must be positive");
            if (!doc.epsilons.empty() && r >= doc.epsilons.back())
                fail("epsilons must be strictly descending");
            doc.epsilons.push_back(r);
        }
    }

    return doc;
}

ordered_json InstanceDocument::to_json() const {
    ordered_json j;
    j["universe"] = universe;
    j["parameters"] = parameters;
    ordered_json secs = ordered_json::object();
    for (size_t p = 0; p < parameters.size(); ++p) secs[parameters[p]] = sections[p];
    j["sections"] = secs;
    if (has_base) {
        ordered_json arr = ordered_json::array();
        for (const auto& g : base) {
            ordered_json graph = ordered_json::object();
            for (size_t p = 0; p < parameters.size(); ++p) {
                ordered_json rows = ordered_json::array();
                for (const auto& [x, y] : g.pairs[p]) rows.push_back({x, y});
                graph[parameters[p]] = rows;
            }
            arr.push_back({{"name", g.name}, {"graph", graph}});
        }
        j["base"] = arr;
    }
    if (has_metric) {
        ordered_json m = ordered_json::object();
        for (size_t p = 0; p < parameters.size(); ++p) {
            ordered_json rows = ordered_json::array();
            for (const auto& [x, y, d] : metric[p]) rows.push_back({x, y, to_string(d)});
            m[parameters[p]] = rows;
        }
        j["metric"] = m;
        ordered_json eps = ordered_json::array();
        for (const auto& e : epsilons) eps.push_back(to_string(e));
        j["epsilons"] = eps;
    }
    return j;
}

InstanceDocument parse_instance(const std::string& text) {
    // entries start at column zero as "key:"; values run to the next entry
    std::vector<std::pair<std::string, std::string>> entries;
    std::vector<int> entry_lines;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        bool starts_entry = false;
        size_t colon = line.find(':');
        if (!isspace(static_cast<unsigned char>(line[0])) && colon != std::string::npos) {
            std::string key = line.substr(0, colon);
            starts_entry = !key.empty() && key.find_first_not_of(
                                               "abcdefghijklmnopqrstuvwxyz_") == std::string::npos;
        }
        if (starts_entry) {
            entries.emplace_back(line.substr(0, colon), line.substr(colon + 1));
            entry_lines.push_back(lineno);
        } else {
            if (entries.empty()) throw ParseError(lineno, "expected 'key: value'");
            entries.back().second += "\n" + line;
        }
    }
    if (entries.empty()) throw ParseError(1, "empty document");

    ordered_json obj = ordered_json::object();
    for (size_t i = 0; i < entries.size(); ++i) {
        if (obj.contains(entries[i].first))
            throw ParseError(entry_lines[i], "duplicate key '" + entries[i].first + "'");
        try {
            obj[entries[i].first] = ordered_json::parse(entries[i].second);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(entry_lines[i],
                             "bad value for '" + entries[i].first + "': " + e.what());
        }
    }
    try {
        return InstanceDocument::from_json(obj);
    } catch (const ParseError&) {
        throw;
    }
}

std::string serialize_instance(const InstanceDocument& doc) {
    ordered_json j = doc.to_json();
    std::string out;
    for (const auto& [k, v] : j.items()) out += k + ": " + v.dump() + "\n";
    return out;
}

std::string instance_digest(const InstanceDocument& doc) {
    std::string text = serialize_instance(doc);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

BuiltInstance build_instance(const InstanceDocument& doc) {
    auto universe = std::make_shared<Universe>(doc.universe);
    auto params = std::make_shared<ParameterSet>(doc.parameters);
    std::vector<BitVec> secs;
    for (size_t p = 0; p < doc.parameters.size(); ++p) {
        BitVec s(universe->size());
        for (const auto& e : doc.sections[p]) s.set(*universe->index_of(e));
        secs.push_back(std::move(s));
    }
    SoftSet host(universe, params, std::move(secs));

    if (doc.has_metric) {
        int n = universe->size();
        std::vector<std::vector<std::vector<Rational>>> dist(
            doc.parameters.size(),
            std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
        for (size_t p = 0; p < doc.parameters.size(); ++p)
            for (const auto& [x, y, d] : doc.metric[p]) {
                int xi = *universe->index_of(x), yi = *universe->index_of(y);
                dist[p][xi][yi] = dist[p][yi][xi] = d;
            }
        MetricFamily family(host, std::move(dist));
        UniformityBase base = metric_uniformity(family, doc.epsilons);
        return BuiltInstance{doc, host, std::move(base)};
    }

    if (!doc.has_base) fail("instance has no uniformity source (base or metric)");
    std::vector<SoftRelation> members;
    std::vector<std::string> names;
    for (const auto& g : doc.base) {
        std::vector<BitMatrix> graphs;
        for (size_t p = 0; p < doc.parameters.size(); ++p) {
            BitMatrix m(universe->size());
            for (const auto& [x, y] : g.pairs[p])
                m.set(*universe->index_of(x), *universe->index_of(y));
            graphs.push_back(std::move(m));
        }
        members.emplace_back(host, std::move(graphs));
        names.push_back(g.name);
    }
    UniformityBase base(host, std::move(members), std::move(names));
    base.validate();
    return BuiltInstance{doc, host, std::move(base)};
}

MappingDocument MappingDocument::parse(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("mapping document: ") + e.what());
    }
    if (!j.is_object()) fail("mapping document must be an object");
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (k != "domain" && k != "codomain" && k != "maps")
            fail("unknown key '" + k + "' in mapping document");
    }
    if (!j.contains("domain") || !j.contains("codomain") || !j.contains("maps"))
        fail("mapping document needs domain, codomain, and maps");

    MappingDocument doc;
    auto side = [&](const char* key) -> std::variant<std::string, InstanceDocument> {
        const auto& v = j.at(key);
        if (v.is_string()) return v.get<std::string>();
        return InstanceDocument::from_json(v);
    };
    doc.domain = side("domain");
    doc.codomain = side("codomain");

    const auto& maps = j.at("maps");
    if (!maps.is_object()) fail("maps must be an object");
    for (const auto& [param, table] : maps.items()) {
        if (!table.is_object()) fail("maps entries must be objects");
        for (const auto& [x, y] : table.items()) {
            if (!y.is_string()) fail("map values must be strings");
            doc.maps[param][x] = y.get<std::string>();
        }
    }
    return doc;
}

ordered_json MappingDocument::to_json() const {
    ordered_json j;
    auto side = [](const std::variant<std::string, InstanceDocument>& v) -> ordered_json {
        if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
        return std::get<InstanceDocument>(v).to_json();
    };
    j["domain"] = side(domain);
    j["codomain"] = side(codomain);
    ordered_json m = ordered_json::object();
    for (const auto& [param, table] : maps) {
        ordered_json t = ordered_json::object();
        for (const auto& [x, y] : table) t[x] = y;
        m[param] = t;
    }
    j["maps"] = m;
    return j;
}

BuiltMapping build_mapping(const MappingDocument& doc,
                           const std::function<std::string(const std::string&)>& load) {
    auto resolve = [&](const std::variant<std::string, InstanceDocument>& v) {
        if (std::holds_alternative<InstanceDocument>(v))
            return build_instance(std::get<InstanceDocument>(v));
        return build_instance(parse_instance(load(std::get<std::string>(v))));
    };
    BuiltInstance dom = resolve(doc.domain);
    BuiltInstance cod = resolve(doc.codomain);

    if (!(dom.host.params() == cod.host.params()))
        fail("mapping: domain and codomain have different parameter sets");

    for (const auto& [param, table] : doc.maps) {
        (void)table;
        if (!dom.host.params().index_of(param))
            fail("maps references undeclared parameter '" + param + "'");
    }

    std::vector<std::vector<int>> tables(dom.host.param_count(),
                                         std::vector<int>(dom.host.universe().size(), -1));
    for (int p = 0; p < dom.host.param_count(); ++p) {
        const std::string& pname = dom.host.params().name(p);
        auto it = doc.maps.find(pname);
        if (it == doc.maps.end()) fail("maps is missing parameter '" + pname + "'");
        for (const auto& [x, y] : it->second) {
            auto xi = dom.host.universe().index_of(x);
            auto yi = cod.host.universe().index_of(y);
            if (!xi || !dom.host.section(p).test(*xi))
                fail("maps at '" + pname + "' uses '" + x + "' outside the domain section");
            if (!yi || !cod.host.section(p).test(*yi))
                fail("maps at '" + pname + "' sends '" + x + "' to '" + y +
                     "' outside the codomain section");
            tables[p][*xi] = *yi;
        }
        bool total = true;
        std::string missing;
        dom.host.section(p).for_each([&](int x) {
            if (tables[p][x] < 0) {
                total = false;
                missing = dom.host.universe().name(x);
            }
        });
        if (!total)
            fail("maps at '" + pname + "' is missing the image of '" + missing + "'");
    }

    SoftMapping map(dom.host, cod.host, std::move(tables));
    return BuiltMapping{std::move(dom), std::move(cod), std::move(map)};
}

} // namespace softuni
