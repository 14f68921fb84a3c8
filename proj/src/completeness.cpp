#include "softuni/completeness.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace softuni {

PrincipalFilter::PrincipalFilter(SoftSet host, std::vector<SoftElement> generator)
    : host_(std::move(host)), gen_(std::move(generator)) {
    if (gen_.empty()) throw std::invalid_argument("principal filter needs a nonempty generator");
    for (const auto& x : gen_)
        if (!x.member_of(host_))
            throw std::invalid_argument("generator element escapes the host");
    std::sort(gen_.begin(), gen_.end());
    gen_.erase(std::unique(gen_.begin(), gen_.end()), gen_.end());
}

TotalBoundednessReport is_totally_bounded(const UniformityBase& base, const Limits& limits) {
    if (!base.validated_ok())
        throw std::logic_error("is_totally_bounded requires a validated-valid base");
    TotalBoundednessReport out;
    if (!base.host().is_carrier()) return out; // balls cannot reach an empty section

    SubsetCodec codec(base.host());
    auto elements = enumerate_soft_elements(base.host(), limits);
    out.status = CoverStatus::Bounded;

    for (int m = 0; m < base.size(); ++m) {
        std::vector<std::uint64_t> balls;
        balls.reserve(elements.size());
        for (const auto& x : elements) balls.push_back(codec.ball_mask(base.member(m), x));

        MemberCover cover{m, {}, std::nullopt};

        // greedy: largest uncovered mass first, earliest element on ties
        std::uint64_t covered = 0;
        while (covered != codec.full_mask()) {
            int best = -1, best_gain = 0;
            for (size_t i = 0; i < elements.size(); ++i) {
                int gain = std::popcount(balls[i] & ~covered);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = int(i);
                }
            }
            if (best < 0) {
                out.status = CoverStatus::NotApplicable; // cannot happen on carriers
                return out;
            }
            covered |= balls[best];
            cover.centers.push_back(elements[best]);
        }

        if (int(elements.size()) <= limits.max_exact_cover) {
            int best = int(elements.size());
            for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << elements.size()); ++pick) {
                if (std::popcount(pick) >= best) continue;
                std::uint64_t u = 0;
                for (size_t i = 0; i < elements.size(); ++i)
                    if (pick >> i & 1) u |= balls[i];
                if (u == codec.full_mask()) best = std::popcount(pick);
            }
            cover.exact_minimum = best;
        }
        out.covers.push_back(std::move(cover));
    }
    return out;
}

bool is_cauchy(const UniformityBase& base, const PrincipalFilter& filter) {
    if (!base.validated_ok()) throw std::logic_error("is_cauchy requires a validated-valid base");
    if (!(filter.host() == base.host()))
        throw std::invalid_argument("filter lives on a different host");
    for (int i = 0; i < base.size(); ++i)
        for (const auto& x : filter.generator())
            for (const auto& y : filter.generator())
                if (!pair_in(base.member(i), x, y)) return false;
    return true;
}

bool converges_to(const UniformityBase& base, const PrincipalFilter& filter,
                  const SoftElement& p) {
    if (!base.validated_ok())
        throw std::logic_error("converges_to requires a validated-valid base");
    if (!p.member_of(base.host()))
        throw std::invalid_argument("limit candidate escapes the host");
    for (int i = 0; i < base.size(); ++i)
        for (const auto& x : filter.generator())
            if (!pair_in(base.member(i), p, x)) return false;
    return true;
}

std::vector<SoftElement> cluster_points(const UniformityBase& base, const PrincipalFilter& filter,
                                        const Limits& limits) {
    if (!base.validated_ok())
        throw std::logic_error("cluster_points requires a validated-valid base");
    std::vector<SoftElement> out;
    for (const auto& p : enumerate_soft_elements(base.host(), limits)) {
        bool cluster = true;
        for (int i = 0; i < base.size() && cluster; ++i) {
            bool meets = false;
            for (const auto& x : filter.generator())
                if (pair_in(base.member(i), p, x)) {
                    meets = true;
                    break;
                }
            cluster = meets;
        }
        if (cluster) out.push_back(p);
    }
    return out;
}

CompletenessReport is_complete(const UniformityBase& base, const Limits& limits) {
    if (!base.validated_ok())
        throw std::logic_error("is_complete requires a validated-valid base");
    CompletenessReport out;
    if (!base.host().is_carrier()) return out;

    std::uint64_t count = base.host().soft_element_count();
    if (count > std::uint64_t(limits.max_filter_elements))
        throw CapExceeded("completeness enumeration over " + std::to_string(count) +
                          " soft elements exceeds the cap " +
                          std::to_string(limits.max_filter_elements));

    auto elements = enumerate_soft_elements(base.host(), limits);
    int n = int(elements.size());
    out.applicable = true;

    // closeness mask per element: everything within every member of it
    std::vector<std::uint64_t> close(n, ~std::uint64_t{0} >> (64 - n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool all = true;
            for (int m = 0; m < base.size() && all; ++m)
                if (!pair_in(base.member(m), elements[i], elements[j])) all = false;
            if (!all) close[i] &= ~(std::uint64_t{1} << j);
        }

    out.complete = true;
    for (std::uint64_t gen = 1; gen < (std::uint64_t{1} << n); ++gen) {
        ++out.filters_checked;
        bool cauchy = true;
        for (int i = 0; i < n && cauchy; ++i)
            if ((gen >> i & 1) && (gen & ~close[i])) cauchy = false;
        if (!cauchy) continue;
        ++out.cauchy_count;

        FilterVerdict v;
        for (int i = 0; i < n; ++i)
            if (gen >> i & 1) v.generator.push_back(i);
        v.cauchy = true;
        for (int p = 0; p < n; ++p)
            if ((gen & ~close[p]) == 0) {
                v.limit = p;
                break;
            }
        if (!v.limit) out.complete = false;
        out.cauchy_filters.push_back(std::move(v));
    }
    return out;
}

Thm54Trace thm54_witness(const UniformityBase& base, const PrincipalFilter& filter,
                         const Limits& limits) {
    if (!is_cauchy(base, filter))
        throw std::invalid_argument("thm54_witness needs a Cauchy filter");

    auto clusters = cluster_points(base, filter, limits);
    if (clusters.empty())
        throw std::logic_error("Cauchy filter without a cluster point on a finite host");

    Thm54Trace trace{clusters.front(), {}, true};
    const SoftElement& p = trace.limit;

    for (int i = 0; i < base.size(); ++i) {
        int w = base.square_root_of(i);
        if (w < 0) throw std::logic_error("validated base lacks a square root");
        SoftRelation v = meet(base.member(w), inverse(base.member(w)));

        // the cluster point meets the generator inside the symmetric root
        const SoftElement* x0 = nullptr;
        for (const auto& x : filter.generator())
            if (pair_in(v, p, x)) {
                x0 = &x;
                break;
            }
        if (!x0) throw std::logic_error("cluster point misses the generator in the symmetric root");

        bool verified = true;
        for (const auto& y : filter.generator())
            if (!pair_in(base.member(i), p, y)) verified = false;

        trace.steps.push_back(Thm54Trace::Step{i, w, std::move(v), *x0, verified});
        if (!verified) trace.verified = false;
    }
    if (!converges_to(base, filter, p)) trace.verified = false;
    return trace;
}

} // namespace softuni
