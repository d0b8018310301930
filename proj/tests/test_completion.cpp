#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "residua/completion.hpp"
#include "residua/dsl.hpp"
#include "residua/errors.hpp"

using namespace residua;
using fixtures::named;

namespace {

Ideal gen(const Ring& r, Elem a) { return ideal_generated(r, std::span<const Elem>(&a, 1)); }

}  // namespace

TEST(IdealPowers, Examples) {
    const Ring z8 = zmod(8);
    EXPECT_EQ(ideal_power(z8, gen(z8, 2), 2).members, (ElemSet{0, 4}));
    const Ring cube = evaluate("GF(2)[x]/(x^3)");
    EXPECT_EQ(ideal_power(cube, gen(cube, named(cube, "x")), 3), zero_ideal(cube));
    EXPECT_THROW(ideal_power(z8, gen(z8, 2), 0), InvalidInput);
    const Ring f2f2 = evaluate("prod(GF(2),GF(2))");
    const Ideal left = gen(f2f2, named(f2f2, "(1,0)"));
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(ideal_power(f2f2, left, n), left);
}

TEST(IdealPowers, StableIndex) {
    const Ring z8 = zmod(8);
    EXPECT_EQ(stable_index(z8, gen(z8, 2)), 3u);
    EXPECT_EQ(stable_index(z8, zero_ideal(z8)), 1u);
    const Ring f2f2 = evaluate("prod(GF(2),GF(2))");
    EXPECT_EQ(stable_index(f2f2, gen(f2f2, named(f2f2, "(1,0)"))), 1u);
}

TEST(InverseLimit, Examples) {
    const Ring z8 = zmod(8);
    const auto lim = inverse_limit(z8, gen(z8, 2));
    EXPECT_TRUE(find_isomorphism(lim.ring, z8).has_value());
    EXPECT_TRUE(is_injective(lim.natural, lim.ring.order()) && is_surjective(lim.natural, lim.ring.order()));
    EXPECT_TRUE(lim.stabilizes);

    const Ring f2f2 = evaluate("prod(GF(2),GF(2))");
    const auto split = inverse_limit(f2f2, gen(f2f2, named(f2f2, "(1,0)")));
    EXPECT_TRUE(find_isomorphism(split.ring, evaluate("GF(2)")).has_value());

    const Ring r = evaluate("prod(GF(3),Z/4)");
    EXPECT_TRUE(find_isomorphism(inverse_limit(r, zero_ideal(r)).ring, r).has_value());
}

TEST(InverseLimit, TowerTransitionsAreHomomorphisms) {
    const Ring r = evaluate("GF(2)[x]/(x^4)");
    const auto tower = build_tower(r, gen(r, named(r, "x")), 4);
    ASSERT_EQ(tower.levels.size(), 4u);
    for (std::size_t n = 0; n + 1 < tower.levels.size(); ++n) {
        EXPECT_TRUE(is_homomorphism(tower.levels[n + 1].ring, tower.levels[n].ring, tower.transitions[n]));
        EXPECT_EQ(tower.levels[n].ring.order(), std::size_t{1} << (n + 1));
    }
}

TEST(Completeness, Examples) {
    const Ring z8 = zmod(8);
    EXPECT_TRUE(is_complete(z8, gen(z8, 2)));
    const Ring f2f2 = evaluate("prod(GF(2),GF(2))");
    EXPECT_FALSE(is_complete(f2f2, gen(f2f2, named(f2f2, "(1,0)"))));
    EXPECT_FALSE(is_complete(f2f2, unit_ideal(f2f2)));
    EXPECT_TRUE(inverse_limit(f2f2, unit_ideal(f2f2)).ring.is_zero_ring());
}

TEST(Dichotomy, Examples) {
    const Ring f2f2 = evaluate("prod(GF(2),GF(2))");
    const auto idem = dichotomy_check(f2f2, gen(f2f2, named(f2f2, "(1,0)")));
    EXPECT_TRUE(idem.idempotent);
    EXPECT_FALSE(idem.complete);
    EXPECT_TRUE(idem.passes());

    const Ring z8 = zmod(8);
    const auto nil = dichotomy_check(z8, gen(z8, 2));
    EXPECT_TRUE(nil.nilpotent);
    EXPECT_TRUE(nil.complete);
    EXPECT_TRUE(nil.passes());

    const auto zero = dichotomy_check(z8, zero_ideal(z8));
    EXPECT_TRUE(zero.idempotent && zero.nilpotent && zero.is_zero && zero.complete && zero.passes());
}

TEST(Dichotomy, HoldsForEveryIdealOfSmallRings) {
    for (const auto& r : fixtures::small_rings(16))
        for (const auto& ideal : all_ideals(r)) EXPECT_TRUE(dichotomy_check(r, ideal).passes()) << r.label();
}

TEST(Survey, LocalPolynomialQuotientsAndSquareZeroProductsAreComplete) {
    const auto rings = fixtures::small_rings(27);
    const auto survey = complete_local_survey(rings);
    EXPECT_TRUE(survey.counterexamples.empty());
    std::size_t local = 0, semidirect = 0;
    for (const auto& r : rings) local += is_local(r) ? 1 : 0;
    for (const auto& row : survey.rows) semidirect += row.semidirect ? 1 : 0;
    EXPECT_EQ(survey.rows.size(), local);
    EXPECT_GT(semidirect, 0u);
    EXPECT_TRUE(complete_local_survey({}).rows.empty());
}
