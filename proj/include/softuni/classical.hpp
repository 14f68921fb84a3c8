#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "softuni/uniformity.hpp"

namespace softuni::classical {

// Deliberately independent machinery: ordinary uniform-space checks on a
// crisp finite ground set {0..n-1}, written as direct definitional loops over
// std::set relations. This is the oracle the parameterized implementation is
// compared against, so it shares no representation with it.

using Rel = std::set<std::pair<int, int>>;
using Mask = std::uint32_t; // subset of the ground set, n <= 20

struct Base {
    int n = 0;
    std::vector<Rel> members;
    std::vector<std::string> names;
};

struct Validation {
    bool ok = false;
    std::vector<std::string> problems;
};

Validation validate_base(const Base& base);

std::set<int> ball(const Rel& r, int x);

bool is_open(const Base& base, Mask subset);
std::vector<Mask> enumerate_topology(const Base& base);

bool separated(const Base& base);
bool t1(const Base& base);
bool regular(const Base& base);

// f maps ground points of dom to ground points of cod.
bool continuous(const std::vector<int>& f, const Base& dom, const Base& cod);
bool uniformly_continuous(const std::vector<int>& f, const Base& dom, const Base& cod);

bool totally_bounded(const Base& base);
bool complete(const Base& base); // principal filters on points, n <= 16

/// The parameterwise slice of a soft base: member graphs at one parameter,
/// remapped onto {0..m-1} in section order and deduplicated.
Base slice(const UniformityBase& base, int param);

/// Remap a parameterwise function table onto slice coordinates.
std::vector<int> slice_map(const SoftSet& dom, const SoftSet& cod, int param,
                           const std::vector<int>& universe_map);

} // namespace softuni::classical
