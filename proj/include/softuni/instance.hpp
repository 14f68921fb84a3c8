#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "json.hpp"
#include "softuni/mapping.hpp"
#include "softuni/rational.hpp"
#include "softuni/uniformity.hpp"

namespace softuni {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& msg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line(line) {}
    int line = 0;
};

struct NamedGraph {
    std::string name;
    // pairs per parameter position, canonically sorted
    std::vector<std::vector<std::pair<std::string, std::string>>> pairs;
};

/// The on-disk instance: universe, parameters, sections, and exactly one
/// uniformity source (a named relation base, or a metric family with an
/// epsilon grid). Parsing is strict: unknown keys, undeclared identifiers,
/// duplicates, and pairs outside the section square are all rejected.
struct InstanceDocument {
    std::vector<std::string> universe;
    std::vector<std::string> parameters;
    std::vector<std::vector<std::string>> sections; // per parameter, universe order

    bool has_base = false;
    std::vector<NamedGraph> base;

    bool has_metric = false;
    // per parameter: (x, y, distance) with x < y in universe order
    std::vector<std::vector<std::tuple<std::string, std::string, Rational>>> metric;
    std::vector<Rational> epsilons;

    static InstanceDocument from_json(const nlohmann::ordered_json& j);
    nlohmann::ordered_json to_json() const;
};

/// Structured text: one "key: <json value>" entry per top-level key.
InstanceDocument parse_instance(const std::string& text);
std::string serialize_instance(const InstanceDocument& doc);

/// FNV-1a over the canonical serialization, hex.
std::string instance_digest(const InstanceDocument& doc);

struct BuiltInstance {
    InstanceDocument doc;
    SoftSet host;
    UniformityBase base; // validated (status recorded, valid or not)
};

BuiltInstance build_instance(const InstanceDocument& doc);

/// Mapping file: a JSON object with "domain", "codomain" (inline instance or
/// path string) and "maps" (parameter -> element -> element).
struct MappingDocument {
    std::variant<std::string, InstanceDocument> domain;
    std::variant<std::string, InstanceDocument> codomain;
    std::map<std::string, std::map<std::string, std::string>> maps;

    static MappingDocument parse(const std::string& text);
    nlohmann::ordered_json to_json() const;
};

struct BuiltMapping {
    BuiltInstance domain;
    BuiltInstance codomain;
    SoftMapping map;
};

/// Resolves path references through `load` (path -> file contents).
BuiltMapping build_mapping(const MappingDocument& doc,
                           const std::function<std::string(const std::string&)>& load);

} // namespace softuni
