#include "softuni/report.hpp"

#include <algorithm>
#include <sstream>

namespace softuni {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Vacuous: return "vacuous";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

void CheckReport::add(std::string name, Verdict v, nlohmann::ordered_json details, double ms) {
    entries.push_back(CheckEntry{std::move(name), v, std::move(details), ms});
}

bool CheckReport::any(Verdict v) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const CheckEntry& e) { return e.verdict == v; });
}

int CheckReport::exit_code() const {
    if (any(Verdict::Fail)) return 1;
    if (any(Verdict::Skipped)) return 2;
    return 0;
}

nlohmann::ordered_json CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["instance"] = digest;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json c;
        c["name"] = e.name;
        c["verdict"] = verdict_name(e.verdict);
        if (!e.details.is_null()) c["details"] = e.details;
        c["ms"] = e.ms;
        checks.push_back(c);
    }
    j["checks"] = checks;
    j["exit"] = exit_code();
    return j;
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << "# " << command << "  instance " << digest << "\n";
    size_t width = 4;
    for (const auto& e : entries) width = std::max(width, e.name.size());
    for (const auto& e : entries) {
        os << verdict_name(e.verdict);
        for (size_t i = strlen(verdict_name(e.verdict)); i < 8; ++i) os << ' ';
        os << e.name;
        for (size_t i = e.name.size(); i < width + 2; ++i) os << ' ';
        if (!e.details.is_null()) os << e.details.dump();
        os << "  (" << e.ms << " ms)\n";
    }
    return os.str();
}

} // namespace softuni
