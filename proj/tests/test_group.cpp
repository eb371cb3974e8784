#include <doctest.h>

#include "oracles.hpp"
#include "popsum/format.hpp"
#include "popsum/subgroup.hpp"

using namespace popsum;

TEST_CASE("componentwise add and neg") {
    FiniteAbelianGroup z6({6});
    CHECK(z6.add(4, 5) == 3);
    CHECK(z6.add(0, 2) == 2);
    CHECK(z6.neg(2) == 4);

    FiniteAbelianGroup z42({4, 2});
    Element a = z42.from_components({3, 1});
    Element b = z42.from_components({1, 1});
    CHECK(z42.add(a, b) == z42.from_components({0, 0}));
    CHECK(z42.neg(b) == z42.from_components({3, 1}));

    FiniteAbelianGroup z5({5});
    CHECK(z5.neg(0) == 0);
    CHECK_THROWS_AS(z5.add(0, 5), std::out_of_range);
}

TEST_CASE("group axioms exhaustively on small groups") {
    for (const char* spec : {"Z6", "Z4xZ2", "Z12", "Z2xZ2xZ2"}) {
        FiniteAbelianGroup g = parse_group(spec);
        for (Element x = 0; x < g.order(); ++x) {
            CHECK(g.add(x, g.neg(x)) == 0);
            CHECK(g.add(x, 0) == x);
            for (Element y = 0; y < g.order(); ++y) {
                CHECK(g.add(x, y) == g.add(y, x));
                for (Element z = 0; z < g.order(); ++z)
                    CHECK(g.add(g.add(x, y), z) == g.add(x, g.add(y, z)));
            }
        }
    }
}

TEST_CASE("mixed-radix component layout") {
    FiniteAbelianGroup g({4, 2});
    CHECK(g.component(7, 0) == 3);
    CHECK(g.component(7, 1) == 1);
    CHECK(g.from_components({3, 1}) == 7);
    CHECK(g.spec() == "Z4xZ2");
    CHECK(g.element_order(g.from_components({1, 0})) == 4);
    CHECK(parse_group("Z12").max_order_element() == 1);
}

TEST_CASE("subgroup_generated") {
    FiniteAbelianGroup z8({8});
    CHECK(subgroup_generated(z8, {2}).members == GroupSet::of(z8, {0, 2, 4, 6}));

    FiniteAbelianGroup z6({6});
    CHECK(subgroup_generated(z6, std::vector<Element>{}).members == GroupSet::of(z6, {0}));

    FiniteAbelianGroup z22({2, 2});
    Subgroup whole = subgroup_generated(z22, {z22.from_components({1, 0}),
                                              z22.from_components({0, 1})});
    CHECK(whole.order == 4);
}

TEST_CASE("subgroup invariants are enforced") {
    FiniteAbelianGroup z6({6});
    CHECK_THROWS_AS(Subgroup::from_set(GroupSet::of(z6, {0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(Subgroup::from_set(GroupSet::of(z6, {1, 2})), std::invalid_argument);
    CHECK(Subgroup::from_set(GroupSet::of(z6, {0, 2, 4})).order == 3);
}

TEST_CASE("enumerate_subgroups matches the all-subsets oracle") {
    FiniteAbelianGroup z4({4});
    auto subs = enumerate_subgroups(z4);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].members == GroupSet::of(z4, {0}));
    CHECK(subs[1].members == GroupSet::of(z4, {0, 2}));
    CHECK(subs[2].members == GroupSet::full(z4));

    CHECK(enumerate_subgroups(parse_group("Z6")).size() == 4);
    CHECK(enumerate_subgroups(parse_group("Z2xZ2")).size() == 5);

    for (const char* spec : {"Z4", "Z6", "Z8", "Z12", "Z2xZ2", "Z2xZ4", "Z3xZ3"}) {
        FiniteAbelianGroup g = parse_group(spec);
        auto got = enumerate_subgroups(g);
        auto want = oracle::subgroups(g);
        REQUIRE(got.size() == want.size());
        for (const Subgroup& h : got) {
            CHECK(h.members.test(0));
            CHECK(g.order() % h.order == 0);
            CHECK(std::count_if(want.begin(), want.end(),
                                [&](const GroupSet& w) { return w == h.members; }) == 1);
        }
        // Sorted by (order, bitmask), no duplicates, includes {0} and G.
        for (std::size_t i = 1; i < got.size(); ++i) {
            CHECK((got[i - 1].order < got[i].order ||
                   (got[i - 1].order == got[i].order &&
                    got[i - 1].members.bits_less(got[i].members))));
        }
        CHECK(got.front().order == 1);
        CHECK(got.back().order == g.order());
    }
}

TEST_CASE("enumerate_subgroups respects its order limit") {
    CHECK_THROWS_AS(enumerate_subgroups(parse_group("Z32"), 16), std::length_error);
}

TEST_CASE("quotient_map ids are dense and smallest-representative ordered") {
    FiniteAbelianGroup z6({6});
    Subgroup k = Subgroup::from_set(GroupSet::of(z6, {0, 3}));
    CHECK(quotient_map(z6, k, 4) == 1);
    CHECK(quotient_map(z6, k, 0) == 0);

    FiniteAbelianGroup z4({4});
    Subgroup k2 = Subgroup::from_set(GroupSet::of(z4, {0, 2}));
    CHECK(quotient_map(z4, k2, 3) == 1);

    // phi(g) = phi(h)  <=>  g - h in K, over all subgroups of small groups.
    for (const char* spec : {"Z6", "Z8", "Z2xZ4"}) {
        FiniteAbelianGroup g = parse_group(spec);
        for (const Subgroup& k3 : enumerate_subgroups(g)) {
            QuotientMap q(g, k3);
            CHECK(q.coset_count() == g.order() / k3.order);
            for (Element x = 0; x < g.order(); ++x)
                for (Element y = 0; y < g.order(); ++y)
                    CHECK((q(x) == q(y)) == k3.members.test(g.sub(x, y)));
        }
    }
}

TEST_CASE("group set kernels agree with element loops") {
    for (const char* spec : {"Z11", "Z12", "Z4xZ2", "Z2xZ2xZ3"}) {
        FiniteAbelianGroup g = parse_group(spec);
        GroupSet s = GroupSet::of(g, {0, 1});
        s.add(g.order() - 1);
        for (Element e = 0; e < g.order(); ++e) {
            GroupSet translated = s.translated(e);
            GroupSet expect(g);
            for (Element x : s.elements()) expect.add(g.add(e, x));
            CHECK(translated == expect);
        }
        GroupSet negated = s.negated();
        for (Element x = 0; x < g.order(); ++x)
            CHECK(negated.test(x) == s.test(g.neg(x)));
    }
}

TEST_CASE("group spec and set literal grammar") {
    CHECK(parse_group("Z12").spec() == "Z12");
    CHECK(parse_group("z4XZ2").spec() == "Z4xZ2");
    CHECK_THROWS_AS(parse_group("Q8"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group(""), std::invalid_argument);

    FiniteAbelianGroup z6 = parse_group("Z6");
    CHECK(parse_set(z6, "{0,1,4}") == GroupSet::of(z6, {0, 1, 4}));
    CHECK(parse_set(z6, "0x33") == GroupSet::of(z6, {0, 1, 4, 5}));
    CHECK(parse_set(z6, "{}").empty());
    CHECK_THROWS_AS(parse_set(z6, "{0,7}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_set(z6, "0,1"), std::invalid_argument);

    FiniteAbelianGroup z42 = parse_group("Z4xZ2");
    CHECK(parse_set(z42, "{(3,1),(1,1)}") == GroupSet::of(z42, {7, 3}));

    CHECK(expand_group_list("Z2..Z5,Z4xZ2") ==
          std::vector<std::string>{"Z2", "Z3", "Z4", "Z5", "Z4xZ2"});
}
