#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "softuni/checks.hpp"
#include "softuni/generator.hpp"

namespace fs = std::filesystem;
using namespace softuni;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// cover file: JSON array of section objects, e.g. [{"e1":["a"],"e2":[]}]
std::vector<SoftSet> parse_cover(const std::string& text, const SoftSet& host) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("cover file must be a nonempty array of section objects");
    std::vector<SoftSet> cover;
    for (const auto& entry : j) {
        if (!entry.is_object()) throw std::invalid_argument("cover members must be objects");
        std::vector<BitVec> secs(host.param_count(), BitVec(host.universe().size()));
        for (const auto& [param, elems] : entry.items()) {
            auto p = host.params().index_of(param);
            if (!p) throw std::invalid_argument("cover references undeclared parameter '" + param + "'");
            for (const auto& e : elems) {
                auto v = host.universe().index_of(e.get<std::string>());
                if (!v || !host.section(*p).test(*v))
                    throw std::invalid_argument("cover element escapes the host section");
                secs[*p].set(*v);
            }
        }
        cover.emplace_back(host.universe_ptr(), host.params_ptr(), std::move(secs));
    }
    return cover;
}

int emit(const CheckReport& rep, bool json) {
    if (json)
        std::cout << rep.to_json().dump() << "\n";
    else
        std::cout << rep.to_text();
    return rep.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"softuni: finite model checks for parameterized uniform structures"};
    app.require_subcommand(1);

    std::string format = "text";
    CheckOptions opts;
    app.add_option("--format", format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opts.seed, "seed for sampled covers and oracle mappings");
    app.add_option("--max-subsets", opts.limits.max_subsets, "topology enumeration cap");
    app.add_option("--max-elements", opts.limits.max_filter_elements,
                   "soft element cap for completeness enumeration");
    app.add_flag("--allow-invalid", opts.allow_invalid,
                 "run topology/mapping checks on bases failing the square-root axiom");

    std::string instance_path, mapping_path, cover_path;
    auto add_instance_cmd = [&](const char* name, const char* desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("instance", instance_path, "instance document")->required();
        return c;
    };

    auto* c_validate = add_instance_cmd("validate", "check the uniformity axioms");
    auto* c_topology = add_instance_cmd("topology", "enumerate the induced topology");
    auto* c_separation = add_instance_cmd("separation", "separatedness, T1, regularity");
    auto* c_cover = add_instance_cmd("cover", "total boundedness with witness covers");
    auto* c_complete = add_instance_cmd("complete", "Cauchy filters and completeness");
    auto* c_oracle = add_instance_cmd("oracle", "differential fast-path versus brute-force checks");

    auto* c_lebesgue = add_instance_cmd("lebesgue", "Lebesgue entourages for open covers");
    c_lebesgue->add_option("--cover", cover_path, "cover file (JSON array of section objects)");
    c_lebesgue->add_option("--covers", opts.cover_count, "random covers when no file is given");

    auto* c_map = app.add_subcommand("map-check", "continuity and uniform continuity");
    c_map->add_option("mapping", mapping_path, "mapping document")->required();

    auto* c_generate = app.add_subcommand("generate", "emit a seeded random instance");
    GeneratorProfile profile;
    std::uint64_t gen_seed = 0;
    c_generate->add_option("--seed", gen_seed, "generator seed")->required();
    c_generate->add_option("--max-universe", profile.max_universe, "universe size bound");
    c_generate->add_option("--max-params", profile.max_params, "parameter count bound");
    c_generate->add_option("--max-base", profile.max_base, "input relation count bound");
    c_generate->add_flag("--allow-invalid", profile.allow_invalid,
                         "emit a base failing the square-root axiom");

    CLI11_PARSE(app, argc, argv);
    bool json = format == "json";

    try {
        if (c_generate->parsed()) {
            std::cout << serialize_instance(generate_instance(gen_seed, profile));
            return 0;
        }
        if (c_map->parsed()) {
            fs::path dir = fs::path(mapping_path).parent_path();
            MappingDocument doc = MappingDocument::parse(read_file(mapping_path));
            BuiltMapping built = build_mapping(doc, [&](const std::string& ref) {
                return read_file((dir / ref).string());
            });
            return emit(cmd_map_check(built, opts), json);
        }

        BuiltInstance inst = build_instance(parse_instance(read_file(instance_path)));
        if (c_validate->parsed()) return emit(cmd_validate(inst, opts), json);
        if (c_topology->parsed()) return emit(cmd_topology(inst, opts), json);
        if (c_separation->parsed()) return emit(cmd_separation(inst, opts), json);
        if (c_cover->parsed()) return emit(cmd_cover(inst, opts), json);
        if (c_complete->parsed()) return emit(cmd_complete(inst, opts), json);
        if (c_oracle->parsed()) return emit(cmd_oracle(inst, opts), json);
        if (c_lebesgue->parsed()) {
            std::optional<std::vector<SoftSet>> cover;
            if (!cover_path.empty()) cover = parse_cover(read_file(cover_path), inst.host);
            return emit(cmd_lebesgue(inst, cover ? &*cover : nullptr, opts), json);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
