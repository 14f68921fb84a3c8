#include "softuni/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace softuni::classical {

namespace {

Rel compose_rel(const Rel& outer, const Rel& inner) {
    // (x,z) with (x,y) in inner and (y,z) in outer
    Rel out;
    for (const auto& [x, y] : inner)
        for (const auto& [y2, z] : outer)
            if (y == y2) out.insert({x, z});
    return out;
}

Rel inverse_rel(const Rel& r) {
    Rel out;
    for (const auto& [x, y] : r) out.insert({y, x});
    return out;
}

Rel meet_rel(const Rel& a, const Rel& b) {
    Rel out;
    for (const auto& p : a)
        if (b.count(p)) out.insert(p);
    return out;
}

bool subset_rel(const Rel& a, const Rel& b) {
    return std::all_of(a.begin(), a.end(), [&](const auto& p) { return b.count(p) > 0; });
}

} // namespace

Validation validate_base(const Base& base) {
    Validation v;
    if (base.n < 0 || base.members.empty()) {
        v.problems.push_back("empty base");
        return v;
    }
    auto name = [&](size_t i) {
        return i < base.names.size() ? base.names[i] : "#" + std::to_string(i);
    };

    for (size_t i = 0; i < base.members.size(); ++i)
        for (int x = 0; x < base.n; ++x)
            if (!base.members[i].count({x, x})) {
                v.problems.push_back("U1: " + name(i) + " misses (" + std::to_string(x) + "," +
                                     std::to_string(x) + ")");
                break;
            }

    for (size_t i = 0; i < base.members.size(); ++i)
        for (size_t j = i + 1; j < base.members.size(); ++j) {
            Rel m = meet_rel(base.members[i], base.members[j]);
            bool found = false;
            for (const auto& c : base.members)
                if (subset_rel(c, m)) found = true;
            if (!found)
                v.problems.push_back("U2: no member below " + name(i) + " meet " + name(j));
        }

    for (size_t i = 0; i < base.members.size(); ++i) {
        Rel inv = inverse_rel(base.members[i]);
        bool found = false;
        for (const auto& c : base.members)
            if (subset_rel(c, inv)) found = true;
        if (!found) v.problems.push_back("U3: no member below the inverse of " + name(i));
    }

    for (size_t i = 0; i < base.members.size(); ++i) {
        bool found = false;
        for (const auto& c : base.members)
            if (subset_rel(compose_rel(c, c), base.members[i])) found = true;
        if (!found) v.problems.push_back("U4: no square root for " + name(i));
    }

    v.ok = v.problems.empty();
    return v;
}

std::set<int> ball(const Rel& r, int x) {
    std::set<int> out;
    for (const auto& [a, b] : r)
        if (a == x) out.insert(b);
    return out;
}

bool is_open(const Base& base, Mask subset) {
    for (int x = 0; x < base.n; ++x) {
        if (!(subset >> x & 1)) continue;
        bool has_ball = false;
        for (const auto& u : base.members) {
            bool inside = true;
            for (int y : ball(u, x))
                if (!(subset >> y & 1)) inside = false;
            if (inside) {
                has_ball = true;
                break;
            }
        }
        if (!has_ball) return false;
    }
    return true;
}

std::vector<Mask> enumerate_topology(const Base& base) {
    if (base.n > 20) throw std::invalid_argument("classical topology enumeration: n > 20");
    std::vector<Mask> opens;
    for (Mask s = 0; s < (Mask{1} << base.n); ++s)
        if (is_open(base, s)) opens.push_back(s);
    return opens;
}

bool separated(const Base& base) {
    Rel all = base.members.front();
    for (size_t i = 1; i < base.members.size(); ++i) all = meet_rel(all, base.members[i]);
    for (int x = 0; x < base.n; ++x)
        for (int y = 0; y < base.n; ++y) {
            bool in = all.count({x, y}) > 0;
            if (in != (x == y)) return false;
        }
    return true;
}

bool t1(const Base& base) {
    auto opens = enumerate_topology(base);
    for (int x = 0; x < base.n; ++x)
        for (int y = 0; y < base.n; ++y) {
            if (x == y) continue;
            bool witness = false;
            for (Mask o : opens)
                if ((o >> x & 1) && !(o >> y & 1)) witness = true;
            if (!witness) return false;
        }
    return true;
}

bool regular(const Base& base) {
    auto opens = enumerate_topology(base);
    Mask ground = Mask((std::uint64_t{1} << base.n) - 1);
    for (int x = 0; x < base.n; ++x)
        for (Mask o : opens) {
            Mask closed = ground & ~o;
            if (closed >> x & 1) continue; // x must avoid the closed set
            bool witness = false;
            for (Mask o1 : opens) {
                if (!(o1 >> x & 1)) continue;
                for (Mask o2 : opens)
                    if ((closed & ~o2) == 0 && (o1 & o2) == 0) witness = true;
                if (witness) break;
            }
            if (!witness) return false;
        }
    return true;
}

bool continuous(const std::vector<int>& f, const Base& dom, const Base& cod) {
    auto dom_opens = enumerate_topology(dom);
    auto is_dom_open = [&](Mask m) {
        return std::find(dom_opens.begin(), dom_opens.end(), m) != dom_opens.end();
    };
    for (Mask o : enumerate_topology(cod)) {
        Mask pre = 0;
        for (int x = 0; x < dom.n; ++x)
            if (o >> f[x] & 1) pre |= Mask{1} << x;
        if (!is_dom_open(pre)) return false;
    }
    return true;
}

bool uniformly_continuous(const std::vector<int>& f, const Base& dom, const Base& cod) {
    for (const auto& v : cod.members) {
        bool found = false;
        for (const auto& u : dom.members) {
            bool inside = true;
            for (const auto& [x, y] : u)
                if (!v.count({f[x], f[y]})) inside = false;
            if (inside) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool totally_bounded(const Base& base) {
    // centers = all points always works on a reflexive finite base; the check
    // stays definitional anyway
    for (const auto& u : base.members) {
        std::set<int> covered;
        for (int x = 0; x < base.n; ++x)
            for (int y : ball(u, x)) covered.insert(y);
        if (int(covered.size()) != base.n) return false;
    }
    return true;
}

bool complete(const Base& base) {
    if (base.n > 16) throw std::invalid_argument("classical completeness: n > 16");
    for (Mask gen = 1; gen < (Mask{1} << base.n); ++gen) {
        bool cauchy = true;
        for (const auto& u : base.members)
            for (int x = 0; x < base.n && cauchy; ++x)
                for (int y = 0; y < base.n && cauchy; ++y)
                    if ((gen >> x & 1) && (gen >> y & 1) && !u.count({x, y})) cauchy = false;
        if (!cauchy) continue;
        bool converges = false;
        for (int p = 0; p < base.n && !converges; ++p) {
            bool to_p = true;
            for (const auto& u : base.members) {
                auto b = ball(u, p);
                for (int x = 0; x < base.n; ++x)
                    if ((gen >> x & 1) && !b.count(x)) to_p = false;
            }
            if (to_p) converges = true;
        }
        if (!converges) return false;
    }
    return true;
}

Base slice(const UniformityBase& base, int param) {
    const SoftSet& host = base.host();
    auto elems = host.section(param).indices();
    std::vector<int> compact(host.universe().size(), -1);
    for (size_t i = 0; i < elems.size(); ++i) compact[elems[i]] = int(i);

    Base out;
    out.n = int(elems.size());
    for (int i = 0; i < base.size(); ++i) {
        Rel r;
        const BitMatrix& g = base.member(i).graph(param);
        for (int x : elems)
            g.row(x).for_each([&](int y) { r.insert({compact[x], compact[y]}); });
        bool dup = false;
        for (const auto& existing : out.members)
            if (existing == r) dup = true;
        if (!dup) {
            out.members.push_back(std::move(r));
            out.names.push_back(base.member_name(i));
        }
    }
    return out;
}

std::vector<int> slice_map(const SoftSet& dom, const SoftSet& cod, int param,
                           const std::vector<int>& universe_map) {
    auto dom_elems = dom.section(param).indices();
    auto cod_elems = cod.section(param).indices();
    std::vector<int> cod_compact(cod.universe().size(), -1);
    for (size_t i = 0; i < cod_elems.size(); ++i) cod_compact[cod_elems[i]] = int(i);

    std::vector<int> out;
    out.reserve(dom_elems.size());
    for (int x : dom_elems) {
        int fx = universe_map[x];
        if (fx < 0 || cod_compact[fx] < 0)
            throw std::invalid_argument("slice_map: image escapes the codomain section");
        out.push_back(cod_compact[fx]);
    }
    return out;
}

} // namespace softuni::classical
