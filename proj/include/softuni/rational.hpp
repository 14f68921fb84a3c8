#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace softuni {

// Exact arithmetic for metric values and epsilon grids. Distances are small
// hand-written fractions, so 64-bit components are plenty.
using Rational = boost::rational<std::int64_t>;

// Accepts "p" or "p/q" with optional leading minus.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            std::int64_t p = std::stoll(text, &used);
            if (used != text.size()) return std::nullopt;
            return Rational(p);
        }
        std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty()) return std::nullopt;
        size_t un = 0, ud = 0;
        std::int64_t p = std::stoll(ns, &un);
        std::int64_t q = std::stoll(ds, &ud);
        if (un != ns.size() || ud != ds.size() || q == 0) return std::nullopt;
        return Rational(p, q);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace softuni
