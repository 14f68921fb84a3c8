#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace softuni {

enum class Verdict { Pass, Fail, Vacuous, Skipped };

const char* verdict_name(Verdict v);

struct CheckEntry {
    std::string name;
    Verdict verdict;
    nlohmann::ordered_json details; // witnesses and diagnostics
    double ms = 0.0;
};

/// One command run: per-check verdicts, every failure carrying a concrete
/// re-checkable witness. Exit codes: 0 all pass, 1 some property failed,
/// 2 input invalid or a cap was hit (skipped entries).
struct CheckReport {
    std::string command;
    std::string digest;
    std::vector<CheckEntry> entries;

    void add(std::string name, Verdict v, nlohmann::ordered_json details = {}, double ms = 0.0);

    bool any(Verdict v) const;
    int exit_code() const;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

} // namespace softuni
