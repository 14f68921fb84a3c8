#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "softuni/core.hpp"

using namespace softuni;
using namespace testutil;

TEST_CASE("universe and parameter set reject bad input") {
    CHECK_THROWS_AS(Universe({}), std::invalid_argument);
    CHECK_THROWS_AS(Universe({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(ParameterSet({}), std::invalid_argument);
    Universe u({"a", "b"});
    CHECK(u.index_of("b") == 1);
    CHECK(!u.index_of("z").has_value());
}

TEST_CASE("soft element enumeration is lexicographic and complete") {
    SoftSet f = fixture_host();
    auto elems = enumerate_soft_elements(f);
    REQUIRE(elems.size() == 4);
    CHECK(elems[0] == element(f, {"a", "b"}));
    CHECK(elems[1] == element(f, {"a", "c"}));
    CHECK(elems[2] == element(f, {"b", "b"}));
    CHECK(elems[3] == element(f, {"b", "c"}));
    for (size_t i = 0; i + 1 < elems.size(); ++i) CHECK(elems[i] < elems[i + 1]);
}

TEST_CASE("empty section means no soft elements") {
    SoftSet f = fixture_host();
    SoftSet g = subset(f, {{"a", "b"}, {}});
    CHECK(!g.is_carrier());
    CHECK(enumerate_soft_elements(g).empty());
    CHECK(g.soft_element_count() == 0);
}

TEST_CASE("singleton product has exactly one soft element") {
    auto u = abc_universe();
    SoftSet f(u, params({"e1"}), {bv(*u, {"a"})});
    auto elems = enumerate_soft_elements(f);
    REQUIRE(elems.size() == 1);
    CHECK(elems[0].at(0) == *u->index_of("a"));
}

TEST_CASE("soft element cap guard") {
    auto u = abc_universe();
    SoftSet f(u, params({"e1", "e2", "e3"}),
              {BitVec::full(3), BitVec::full(3), BitVec::full(3)});
    Limits tight;
    tight.max_soft_elements = 10;
    CHECK_THROWS_AS(enumerate_soft_elements(f, tight), CapExceeded);
}

TEST_CASE("soft element construction validates the host") {
    SoftSet f = fixture_host();
    CHECK_THROWS_AS(element(f, {"c", "b"}), std::invalid_argument); // c not in F(e1)
    SoftElement x = element(f, {"a", "b"});
    CHECK(x.member_of(f));
    CHECK(!x.member_of(subset(f, {{"b"}, {"b"}})));
}

TEST_CASE("diagonal is the identity on each section") {
    SoftSet f = fixture_host();
    SoftRelation d = diagonal(f);
    CHECK(d == relation(f, {{{"a", "a"}, {"b", "b"}}, {{"b", "b"}, {"c", "c"}}}));

    SoftSet g = subset(f, {{"a", "b"}, {}});
    CHECK(diagonal(g).graph(1).count() == 0);

    auto props = relation_properties(d);
    CHECK(props.all_reflexive());
    CHECK(props.all_symmetric());
    CHECK(props.all_transitive());
}

TEST_CASE("inverse transposes parameterwise") {
    SoftSet f = fixture_host();
    SoftRelation r = relation(f, {{{"a", "b"}}, {}});
    CHECK(inverse(r) == relation(f, {{{"b", "a"}}, {}}));
    CHECK(inverse(diagonal(f)) == diagonal(f));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        SoftRelation s = random_relation(f, rng);
        CHECK(inverse(inverse(s)) == s);
    }
}

TEST_CASE("composition applies the second argument first") {
    SoftSet f = fixture_host();
    SoftRelation s = relation(f, {{{"a", "b"}}, {}});
    SoftRelation r = relation(f, {{{"b", "b"}}, {}});
    // need a middle element: (a,b) in S, (b,b) in R -> (a,b) in R o S
    CHECK(compose(r, s) == relation(f, {{{"a", "b"}}, {}}));

    // no connecting middle element
    SoftRelation s2 = relation(f, {{{"b", "a"}}, {}});
    SoftRelation r2 = relation(f, {{{"b", "a"}}, {}});
    CHECK(compose(r2, s2).pair_count() == 0);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        SoftRelation t = random_relation(f, rng);
        CHECK(compose(t, diagonal(f)) == t);
        CHECK(compose(diagonal(f), t) == t);
    }
}

TEST_CASE("three-chain composition example") {
    auto u = abc_universe();
    SoftSet f(u, params({"e"}), {BitVec::full(3)});
    SoftRelation s = relation(f, {{{"a", "b"}}});
    SoftRelation r = relation(f, {{{"b", "c"}}});
    CHECK(compose(r, s) == relation(f, {{{"a", "c"}}}));
    // swapped roles: S = {(b,c)}, R = {(a,b)} has no chain
    CHECK(compose(s, r).pair_count() == 0);
}

TEST_CASE("meet join and subrelation are parameterwise lattice operations") {
    SoftSet f = fixture_host();
    std::mt19937_64 rng(13);
    SoftRelation empty = relation(f, {{}, {}});
    for (int i = 0; i < 100; ++i) {
        SoftRelation r = random_relation(f, rng);
        SoftRelation s = random_relation(f, rng);
        CHECK(meet(r, join(r, s)) == r); // absorption
        CHECK(join(r, empty) == r);
        CHECK(is_subrelation(meet(r, s), r));
        CHECK(is_subrelation(r, join(r, s)));
        // diagonal below iff reflexive at every parameter
        CHECK(is_subrelation(diagonal(f), r) == relation_properties(r).all_reflexive());
    }
}

TEST_CASE("host mismatch is rejected") {
    SoftSet f = fixture_host();
    SoftSet g = subset(f, {{"a"}, {"b"}});
    SoftRelation r = relation(f, {{{"a", "a"}}, {}});
    SoftRelation s = relation(g, {{{"a", "a"}}, {}});
    CHECK_THROWS_AS(meet(r, s), std::invalid_argument);
    CHECK_THROWS_AS(compose(r, s), std::invalid_argument);
}

TEST_CASE("relation graphs must stay inside the section square") {
    SoftSet f = fixture_host();
    CHECK_THROWS_AS(relation(f, {{{"a", "c"}}, {}}), std::invalid_argument); // c not in F(e1)
}

TEST_CASE("single off-diagonal pair is transitive but not reflexive or symmetric") {
    auto u = abc_universe();
    SoftSet f(u, params({"e"}), {bv(*u, {"a", "b"})});
    SoftRelation r = relation(f, {{{"a", "b"}}});
    auto props = relation_properties(r);
    CHECK(!props.reflexive[0]);
    CHECK(!props.symmetric[0]);
    CHECK(props.transitive[0]); // R o R is empty, hence below R
}

TEST_CASE("full relation has all three properties") {
    SoftSet f = fixture_host();
    auto props = relation_properties(full_relation(f));
    CHECK(props.all_reflexive());
    CHECK(props.all_symmetric());
    CHECK(props.all_transitive());
}

TEST_CASE("composition is associative and anti-distributes over inverse") {
    SoftSet f = fixture_host();
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        SoftRelation r = random_relation(f, rng);
        SoftRelation s = random_relation(f, rng);
        SoftRelation t = random_relation(f, rng);
        CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
        CHECK(inverse(compose(r, s)) == compose(inverse(s), inverse(r)));
    }
}

TEST_CASE("subrelation is a partial order") {
    SoftSet f = fixture_host();
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        SoftRelation r = random_relation(f, rng);
        SoftRelation s = random_relation(f, rng);
        SoftRelation t = random_relation(f, rng);
        CHECK(is_subrelation(r, r));
        if (is_subrelation(r, s) && is_subrelation(s, r)) CHECK(r == s);
        if (is_subrelation(r, s) && is_subrelation(s, t)) CHECK(is_subrelation(r, t));
    }
}

TEST_CASE("relation properties agree with pairwise membership helpers") {
    SoftSet f = fixture_host();
    std::mt19937_64 rng(23);
    auto elems = enumerate_soft_elements(f);
    for (int i = 0; i < 50; ++i) {
        SoftRelation r = random_relation(f, rng, /*force_reflexive=*/true);
        for (const auto& x : elems) CHECK(pair_in(r, x, x));
    }
}
