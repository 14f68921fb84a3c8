#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "softuni/classical.hpp"

using namespace softuni;
using namespace testutil;
namespace cl = softuni::classical;

namespace {

cl::Rel diag(int n) {
    cl::Rel r;
    for (int i = 0; i < n; ++i) r.insert({i, i});
    return r;
}

cl::Rel full(int n) {
    cl::Rel r;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.insert({i, j});
    return r;
}

} // namespace

TEST_CASE("classical validator accepts diagonal and full bases") {
    cl::Base d{3, {diag(3)}, {"d"}};
    CHECK(cl::validate_base(d).ok);
    cl::Base f{3, {full(3)}, {"f"}};
    CHECK(cl::validate_base(f).ok);
}

TEST_CASE("classical validator flags the path relation") {
    cl::Rel path = diag(3);
    path.insert({0, 1});
    path.insert({1, 0});
    path.insert({1, 2});
    path.insert({2, 1});
    cl::Base b{3, {path}, {"path"}};
    auto v = cl::validate_base(b);
    CHECK(!v.ok);
    REQUIRE(v.problems.size() == 1);
    CHECK(v.problems.front().find("U4") == 0);
}

TEST_CASE("classical discrete topology is the power set") {
    cl::Base d{3, {diag(3)}, {"d"}};
    CHECK(cl::enumerate_topology(d).size() == 8);
    CHECK(cl::separated(d));
    CHECK(cl::t1(d));
    CHECK(cl::regular(d));
    CHECK(cl::totally_bounded(d));
    CHECK(cl::complete(d));
}

TEST_CASE("classical full base is indiscrete and not separated") {
    cl::Base f{3, {full(3)}, {"f"}};
    auto opens = cl::enumerate_topology(f);
    CHECK(opens == std::vector<cl::Mask>{0, 7});
    CHECK(!cl::separated(f));
    CHECK(!cl::t1(f));
    CHECK(cl::regular(f));
    CHECK(cl::complete(f));
}

TEST_CASE("classical continuity notions on tiny maps") {
    cl::Base disc{2, {diag(2)}, {"d"}};
    cl::Base indisc{2, {full(2)}, {"f"}};
    std::vector<int> id{0, 1};
    std::vector<int> swap{1, 0};
    std::vector<int> crush{0, 0};

    CHECK(cl::continuous(id, disc, disc));
    CHECK(cl::uniformly_continuous(id, disc, disc));
    CHECK(cl::continuous(swap, disc, disc));
    CHECK(cl::uniformly_continuous(crush, indisc, disc)); // constant maps
    CHECK(cl::continuous(id, disc, indisc));              // into indiscrete
    CHECK(cl::uniformly_continuous(id, disc, indisc));
    CHECK(!cl::uniformly_continuous(id, indisc, disc));   // full cannot squeeze below diag
    CHECK(!cl::continuous(id, indisc, disc));
}

TEST_CASE("slice of a soft base gives classical bases that validate") {
    SoftSet f = fixture_host();
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        auto sat = saturate(f, {random_relation(f, rng, true), random_relation(f, rng, true)});
        if (!sat.valid) continue;
        for (int p = 0; p < f.param_count(); ++p) {
            cl::Base s = cl::slice(sat.base, p);
            CHECK(s.n == f.section(p).count());
            CHECK(cl::validate_base(s).ok);
        }
    }
}

TEST_CASE("slice of the discrete soft base is the classical discrete base") {
    SoftSet f = fixture_host();
    UniformityBase disc = discrete_uniformity(f);
    cl::Base s = cl::slice(disc, 0);
    REQUIRE(s.members.size() == 1);
    CHECK(s.members.front() == diag(2));
}

TEST_CASE("a single-parameter soft base slices to itself") {
    auto u = abc_universe();
    SoftSet f(u, params({"e"}), {BitVec::full(3)});
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        auto sat = saturate(f, {random_relation(f, rng, true)});
        cl::Base s = cl::slice(sat.base, 0);
        // same pair count per member modulo dedup
        CHECK(int(s.members.size()) <= sat.base.size());
        int soft_pairs = sat.base.member(0).pair_count();
        CHECK(int(s.members.front().size()) == soft_pairs);
        CHECK(cl::validate_base(s).ok == sat.valid);
    }
}
