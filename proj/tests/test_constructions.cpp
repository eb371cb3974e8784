#include <doctest.h>

#include "oracles.hpp"
#include "popsum/constructions.hpp"
#include "popsum/format.hpp"
#include "popsum/theorems.hpp"
#include "popsum/witness.hpp"

using namespace popsum;

namespace {

Subgroup sub(const FiniteAbelianGroup& g, std::initializer_list<Element> elems) {
    return Subgroup::from_set(GroupSet::of(g, elems));
}

}  // namespace

TEST_CASE("minus_self worked instance and the printed-form discrepancy") {
    FiniteAbelianGroup z8({8});
    ConstructionResult r = gen_minus_self(z8, sub(z8, {0, 4}), 1, 1);
    CHECK(r.t == 3);
    CHECK(r.A == std::vector<Element>{0, 1, 4, 5});
    CHECK(r.B == std::vector<Element>{0, 3, 4, 7});
    CHECK(r.predicted_sum == 14);
    CHECK(r.direct_sum == 14);
    CHECK(r.matches);
    REQUIRE(r.printed_alternative.has_value());
    CHECK(*r.printed_alternative == 23);
    CHECK(*r.printed_alternative - r.direct_sum == static_cast<long long>(r.t) * r.t);

    // |A| = (s+1)|H| by construction.
    CHECK(static_cast<int>(r.A.size()) == (r.s + 1) * 2);

    // Oracle confirmation, independent of the popular-sum kernel.
    GroupSet a = GroupSet::from_elements(z8, r.A);
    GroupSet b = GroupSet::from_elements(z8, r.B);
    CHECK(oracle::popular_sum(a, b, r.t) == 14);
    CHECK(oracle::stabilizer(a) == GroupSet::of(z8, {0, 4}));
}

TEST_CASE("minus_self with u = 2") {
    FiniteAbelianGroup z12({12});
    ConstructionResult r = gen_minus_self(z12, sub(z12, {0, 4, 8}), 1, 2);
    CHECK(r.t == 5);
    CHECK(r.A.size() == 6);
    CHECK(r.predicted_sum == 33);  // 36 - 1*3
    CHECK(r.direct_sum == 33);
    CHECK(r.matches);
}

TEST_CASE("minus_self parameter validation") {
    FiniteAbelianGroup z8({8});
    CHECK_THROWS_AS(gen_minus_self(z8, sub(z8, {0, 4}), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_minus_self(z8, sub(z8, {0, 4}), 1, 2), std::invalid_argument);
    // Z4 with H = {0,2}: both 2-coset unions are periodic beyond H.
    FiniteAbelianGroup z4({4});
    CHECK_THROWS_AS(gen_minus_self(z4, sub(z4, {0, 2}), 1, 1), std::invalid_argument);
}

TEST_CASE("kneser_pair worked instance") {
    FiniteAbelianGroup z12({12});
    ConstructionResult r = gen_kneser_pair(z12, sub(z12, {0, 4, 8}), 2, 2, 1);
    CHECK(r.A == std::vector<Element>{0, 1, 4, 5, 8, 9});
    CHECK(r.B == std::vector<Element>{0, 4, 8});
    CHECK(r.predicted_sum == 12);
    CHECK(r.direct_sum == 12);
    CHECK(r.matches);

    // Single cosets: A = B = H and the sum collapses to t|H|.
    ConstructionResult one = gen_kneser_pair(z12, sub(z12, {0, 4, 8}), 2, 1, 1);
    CHECK(one.A == std::vector<Element>{0, 4, 8});
    CHECK(one.direct_sum == 2 * 3);
    CHECK(one.matches);

    // |H| <= t rejected.
    CHECK_THROWS_AS(gen_kneser_pair(z12, sub(z12, {0, 4, 8}), 3, 2, 1), std::invalid_argument);
}

TEST_CASE("kneser_pair instances meet the structure bound chain with equality at ell=rho=0") {
    struct Case {
        const char* group;
        std::initializer_list<Element> h;
        int t, na, nb;
    };
    const Case cases[] = {
        {"Z12", {0, 4, 8}, 2, 2, 1},
        {"Z16", {0, 4, 8, 12}, 2, 2, 2},
        {"Z16", {0, 4, 8, 12}, 3, 1, 2},
        {"Z20", {0, 5, 10, 15}, 3, 2, 2},
    };
    for (const Case& c : cases) {
        FiniteAbelianGroup g = parse_group(c.group);
        ConstructionResult r = gen_kneser_pair(g, Subgroup::from_set(GroupSet::from_elements(
                                                      g, std::vector<Element>(c.h))),
                                               c.t, c.na, c.nb);
        REQUIRE(r.matches);
        GroupSet a = GroupSet::from_elements(g, r.A);
        GroupSet b = GroupSet::from_elements(g, r.B);
        BoundReport rep = check_theorem_new(a, b, c.t);
        CHECK(rep.verdict == Verdict::holds);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->ell == 0);
        CHECK(rep.witness->rho == 0);
        // Both chain inequalities are equalities: sum = t|A|+t|B|-t|H|.
        long long weak = static_cast<long long>(c.t) * (a.size() + b.size()) -
                         static_cast<long long>(c.t) * rep.witness->H.size();
        CHECK(rep.lhs == weak);
        CHECK(rep.rhs == weak);
    }
}

TEST_CASE("ap_cosets worked instances") {
    FiniteAbelianGroup z12({12});
    ConstructionResult r = gen_ap_cosets(z12, sub(z12, {0, 4, 8}), 0, 2, 2, 2);
    CHECK(r.t == 2);
    CHECK(r.A == std::vector<Element>{0, 1, 4, 5, 8, 9});
    CHECK(r.B == r.A);
    CHECK(r.predicted_sum == 18);
    CHECK(r.direct_sum == 18);
    CHECK(r.matches);

    FiniteAbelianGroup z18({18});
    ConstructionResult r2 = gen_ap_cosets(z18, sub(z18, {0, 6, 12}), 1, 1, 3, 3);
    CHECK(r2.t == 4);
    CHECK(r2.predicted_sum == 54);
    CHECK(r2.direct_sum == 54);
    CHECK(r2.matches);

    GroupSet a = GroupSet::from_elements(z18, r2.A);
    CHECK(oracle::popular_sum(a, GroupSet::from_elements(z18, r2.B), 4) == 54);

    CHECK_THROWS_AS(gen_ap_cosets(z12, sub(z12, {0, 4, 8}), 1, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("minus_self and ap_cosets attain the conjecture bound with equality") {
    FiniteAbelianGroup z8({8});
    ConstructionResult ms = gen_minus_self(z8, sub(z8, {0, 4}), 1, 1);
    BoundReport cms = check_conjecture(GroupSet::from_elements(z8, ms.A),
                                       GroupSet::from_elements(z8, ms.B), ms.t);
    CHECK(cms.verdict == Verdict::holds);
    CHECK(cms.detail.at("equality") == true);

    FiniteAbelianGroup z12({12});
    ConstructionResult ap = gen_ap_cosets(z12, sub(z12, {0, 4, 8}), 0, 2, 2, 2);
    BoundReport cap = check_conjecture(GroupSet::from_elements(z12, ap.A),
                                       GroupSet::from_elements(z12, ap.B), ap.t);
    CHECK(cap.verdict == Verdict::holds);
    CHECK(cap.detail.at("equality") == true);
}

TEST_CASE("find_inner_pair returns the smallest valid pair") {
    FiniteAbelianGroup z8({8});
    auto inner = find_inner_pair(z8, sub(z8, {0, 4}), 1);
    REQUIRE(inner.has_value());
    CHECK(inner->first == GroupSet::of(z8, {0, 4}));
    CHECK(inner->second == GroupSet::of(z8, {0, 4}));

    FiniteAbelianGroup z16({16});
    auto inner2 = find_inner_pair(z16, sub(z16, {0, 4, 8, 12}), 1);
    REQUIRE(inner2.has_value());
    CHECK(inner2->first.size() + inner2->second.size() == 4);
    CHECK(inner2->first == GroupSet::of(z16, {0, 8}));
    CHECK(inner2->second == GroupSet::of(z16, {0, 8}));
}

TEST_CASE("recursive_1 degenerates to minus_self at A0 = B0 = K") {
    FiniteAbelianGroup z8({8});
    Subgroup k = sub(z8, {0, 4});
    ConstructionResult base = gen_minus_self(z8, k, 1, 1);
    ConstructionResult r = gen_recursive_1(z8, k, 1, 1, k.members, k.members);
    CHECK(r.predicted_sum == base.predicted_sum);
    CHECK(r.direct_sum == base.direct_sum);
    CHECK(r.A == base.A);
    CHECK(r.B == base.B);
    CHECK(r.matches);
}

TEST_CASE("recursive_1 nested instances") {
    // Z16, K = {0,4,8,12}, s=1, u=1: inner pair {0,8} is a proper subgroup.
    FiniteAbelianGroup z16({16});
    Subgroup k = sub(z16, {0, 4, 8, 12});
    GroupSet inner = GroupSet::of(z16, {0, 8});
    ConstructionResult r = gen_recursive_1(z16, k, 1, 1, inner, inner);
    CHECK(r.t == 5);
    CHECK(r.predicted_sum == 34);
    CHECK(r.matches);
    long long target = 5ll * (r.A.size() + r.B.size()) - 25;
    CHECK(r.predicted_sum < target);

    // Same base, u = 2 with an asymmetric inner pair.
    ConstructionResult r2 =
        gen_recursive_1(z16, k, 1, 2, k.members, GroupSet::of(z16, {0, 4, 8}));
    CHECK(r2.t == 6);
    CHECK(r2.matches);
    CHECK(r2.predicted_sum <
          static_cast<long long>(r2.t) * (r2.A.size() + r2.B.size()) -
              static_cast<long long>(r2.t) * r2.t);

    // Inner pair violating its precondition is rejected.
    CHECK_THROWS_AS(gen_recursive_1(z16, k, 1, 1, GroupSet::of(z16, {0}),
                                    GroupSet::of(z16, {0})),
                    std::invalid_argument);
}

TEST_CASE("recursive_2 from a single-coset base") {
    FiniteAbelianGroup z16({16});
    Subgroup k = sub(z16, {0, 4, 8, 12});
    ConstructionResult base = gen_kneser_pair(z16, k, 2, 1, 1);
    GroupSet base_a = GroupSet::from_elements(z16, base.A);
    GroupSet base_b = GroupSet::from_elements(z16, base.B);

    // Degenerate splice: A0 = B0 = K reproduces the base pair.
    ConstructionResult r0 = gen_recursive_2(base_a, base_b, k, 2, k.members, k.members);
    CHECK(r0.A == base.A);
    CHECK(r0.B == base.B);
    CHECK(r0.predicted_sum == base.predicted_sum);
    CHECK(r0.matches);

    // Proper inner pair found by exhaustive search inside K.
    ConstructionResult r = gen_recursive_2(base_a, base_b, k, 2, k.members,
                                           GroupSet::of(z16, {0, 4, 8}));
    CHECK(r.matches);
    CHECK(r.predicted_sum <
          static_cast<long long>(r.t) * (r.A.size() + r.B.size()) -
              static_cast<long long>(r.t) * r.t);

    // A two-coset base has two unique-expression cosets and is rejected.
    ConstructionResult wide = gen_kneser_pair(z16, k, 2, 2, 1);
    CHECK_THROWS_AS(gen_recursive_2(GroupSet::from_elements(z16, wide.A),
                                    GroupSet::from_elements(z16, wide.B), k, 2, k.members,
                                    k.members),
                    std::invalid_argument);
}

TEST_CASE("generated instances satisfy the conjecture hypothesis") {
    // Every family lands strictly below t|A|+t|B|-t^2.
    FiniteAbelianGroup z12({12});
    for (const ConstructionResult& r :
         {gen_minus_self(z12, sub(z12, {0, 4, 8}), 1, 2),
          gen_kneser_pair(z12, sub(z12, {0, 4, 8}), 2, 2, 1),
          gen_ap_cosets(z12, sub(z12, {0, 4, 8}), 0, 1, 2, 2)}) {
        long long cap = static_cast<long long>(r.t) * (r.A.size() + r.B.size()) -
                        static_cast<long long>(r.t) * r.t;
        CHECK(r.direct_sum < cap);
        CHECK(r.matches);
    }
}
