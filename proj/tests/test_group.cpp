#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hlgt/group.hpp"

#include <stdexcept>

using namespace hlgt;

TEST_CASE("cyclic groups") {
    const FiniteGroup z4 = FiniteGroup::cyclic(4);
    CHECK(z4.order() == 4);
    CHECK(z4.identity() == 0);
    CHECK(z4.mul(1, 3) == 0);
    CHECK(z4.mul(3, 3) == 2);
    CHECK(z4.inv(1) == 3);
    CHECK(z4.inv(0) == 0);
    CHECK(z4.pow(1, 2) == 2);
    CHECK(z4.pow(1, -1) == 3);
    CHECK(z4.pow(3, 0) == 0);
    CHECK(z4.is_abelian());
    CHECK(z4.validate().empty());

    CHECK(element_order(z4, 0) == 1);
    CHECK(element_order(z4, 1) == 4);
    CHECK(element_order(z4, 2) == 2);

    const FiniteGroup z6 = FiniteGroup::cyclic(6);
    CHECK(element_order(z6, 2) == 3);
    CHECK(element_order(z6, 3) == 2);

    CHECK(FiniteGroup().order() == 1);
    CHECK(FiniteGroup::trivial().validate().empty());
    CHECK_THROWS_AS(FiniteGroup::cyclic(0), std::invalid_argument);
}

TEST_CASE("dihedral group of order 8") {
    // element (r, s) lives at index r + 4 s
    const FiniteGroup d4 = FiniteGroup::dihedral(4);
    CHECK(d4.order() == 8);
    CHECK_FALSE(d4.is_abelian());
    CHECK(d4.validate().empty());

    CHECK(d4.mul(1, 4) == 5);  // r . s
    CHECK(d4.mul(4, 1) == 7);  // s . r = r^-1 s
    CHECK(d4.inv(4) == 4);
    CHECK(d4.inv(1) == 3);
    CHECK(d4.conj(4, 1) == 3);  // s r s^-1 = r^-1

    CHECK(element_order(d4, 1) == 4);
    CHECK(element_order(d4, 2) == 2);
    CHECK(element_order(d4, 4) == 2);
    CHECK(element_order(d4, 5) == 2);
}

TEST_CASE("table construction and validation failures") {
    CHECK_THROWS_AS(FiniteGroup(std::vector<std::vector<int>>{}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup({{0, 2}, {1, 0}}), std::invalid_argument);

    // shape-valid table that is not a group: row 1 repeats an element
    const FiniteGroup broken({{0, 1}, {1, 1}});
    const ValidationReport report = broken.validate();
    REQUIRE_FALSE(report.empty());
    bool saw_closure = false;
    for (const Issue& issue : report) saw_closure |= issue.axiom == "closure";
    CHECK(saw_closure);
    CHECK_FALSE(report_to_string(report).empty());

    // latin square that is not associative: the identity row/column are fine
    // but (1,1,2) fails; validate() must name associativity
    const FiniteGroup nonassoc({{0, 1, 2, 3, 4},
                                {1, 0, 3, 4, 2},
                                {2, 4, 0, 1, 3},
                                {3, 2, 4, 0, 1},
                                {4, 3, 1, 2, 0}});
    bool saw_assoc = false;
    for (const Issue& issue : nonassoc.validate()) saw_assoc |= issue.axiom == "associativity";
    CHECK(saw_assoc);
}

TEST_CASE("subgroups of the dihedral group") {
    const FiniteGroup d4 = FiniteGroup::dihedral(4);

    const Subgroup z = center(d4);
    CHECK(z.members() == std::vector<int>{0, 2});
    CHECK(z.is_normal());
    CHECK(z.contains(2));
    CHECK_FALSE(z.contains(1));
    CHECK(z.index_of(2) == 1);
    CHECK_THROWS_AS(z.index_of(1), std::out_of_range);

    CHECK(centralizer(d4, {1}).members() == std::vector<int>{0, 1, 2, 3});
    CHECK(centralizer(d4, {4}).members() == std::vector<int>{0, 2, 4, 6});
    CHECK(centralizer(d4, {}).size() == 8);

    CHECK(generated_subgroup(d4, {2, 4}).members() == std::vector<int>{0, 2, 4, 6});
    CHECK(generated_subgroup(d4, {1, 4}).size() == 8);
    CHECK(generated_subgroup(d4, {}).members() == std::vector<int>{0});

    const Subgroup meet = intersect(centralizer(d4, {1}), centralizer(d4, {4}));
    CHECK(meet.members() == z.members());

    // reflections generate order-2 subgroups that fail normality
    const Subgroup refl(d4, {0, 4});
    CHECK_FALSE(refl.is_normal());

    CHECK_THROWS_AS(Subgroup(d4, {0, 1}), std::invalid_argument);   // not closed
    CHECK_THROWS_AS(Subgroup(d4, {4}), std::invalid_argument);      // missing identity
    CHECK_THROWS_AS(Subgroup(d4, {0, 99}), std::invalid_argument);  // out of range

    CHECK(Subgroup(d4, {0, 2}).as_group() == FiniteGroup::cyclic(2));
}

TEST_CASE("quotient groups") {
    const FiniteGroup z4 = FiniteGroup::cyclic(4);
    const QuotientGroup q(z4, Subgroup(z4, {0, 2}));
    CHECK(q.order() == 2);
    CHECK(q.project(0) == 0);
    CHECK(q.project(1) == 1);
    CHECK(q.project(2) == 0);
    CHECK(q.representative(1) == 1);
    CHECK(q.mul(1, 1) == 0);
    CHECK(q.as_group() == FiniteGroup::cyclic(2));

    const FiniteGroup d4 = FiniteGroup::dihedral(4);
    const QuotientGroup k4(d4, center(d4));
    CHECK(k4.order() == 4);
    // cosets are sorted by minimal element: {0,2} {1,3} {4,6} {5,7}
    CHECK(k4.project(3) == 1);
    CHECK(k4.project(6) == 2);
    CHECK(k4.representative(3) == 5);
    // every nonidentity coset squares to the identity: the Klein four-group
    for (int c = 0; c < 4; ++c) CHECK(k4.mul(c, c) == 0);
    CHECK(abelian_invariant_factors(k4.as_group()) == std::vector<int>{2, 2});

    CHECK_THROWS_AS(QuotientGroup(d4, Subgroup(d4, {0, 4})), std::invalid_argument);
}

TEST_CASE("abelian invariant factors") {
    CHECK(abelian_invariant_factors(FiniteGroup::trivial()).empty());
    CHECK(abelian_invariant_factors(FiniteGroup::cyclic(2)) == std::vector<int>{2});
    CHECK(abelian_invariant_factors(FiniteGroup::cyclic(4)) == std::vector<int>{4});
    CHECK(abelian_invariant_factors(FiniteGroup::cyclic(6)) == std::vector<int>{6});
    CHECK_THROWS_AS(abelian_invariant_factors(FiniteGroup::dihedral(4)), std::invalid_argument);
}
