#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "residua/errors.hpp"
#include "residua/poly_algebra.hpp"
#include "residua/poly_gf.hpp"

using namespace residua;

namespace {

PrimePoly poly(std::uint32_t p, std::vector<std::uint32_t> c) { return PrimePoly::make(p, std::move(c)); }

PrimePoly random_poly(std::mt19937& rng, std::uint32_t p, int max_degree) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : c) x = coeff(rng);
    return poly(p, c);
}

}  // namespace

TEST(PolyArith, Examples) {
    EXPECT_EQ(poly_arith(PolyOp::mul, poly(2, {1, 1}), poly(2, {1, 1})), poly(2, {1, 0, 1}));
    EXPECT_EQ(poly_arith(PolyOp::mod, poly(2, {0, 0, 1}), poly(2, {1, 1, 1})), poly(2, {1, 1}));
    EXPECT_EQ(poly_arith(PolyOp::sub, poly(3, {1}), poly(3, {2})), poly(3, {2}));
    EXPECT_EQ(poly_arith(PolyOp::gcd, poly(3, {2, 0, 1}), poly(3, {1, 1})), poly(3, {1, 1}));
}

TEST(PolyArith, Errors) {
    EXPECT_THROW(poly_arith(PolyOp::gcd, poly(2, {1, 1}), poly(2, {})), DivisionByZeroPoly);
    EXPECT_THROW(poly_arith(PolyOp::mod, poly(2, {1, 1}), poly(2, {})), DivisionByZeroPoly);
    EXPECT_THROW(poly_arith(PolyOp::add, poly(2, {1}), poly(3, {1})), ModulusMismatch);
}

TEST(PolyArith, TextForm) {
    EXPECT_EQ(to_string(poly(2, {1, 1, 1})), "x^2+x+1");
    EXPECT_EQ(to_string(poly(3, {1, 2})), "2*x+1");
    EXPECT_EQ(to_string(poly(5, {})), "0");
}

TEST(PolyArith, RingAxiomsOnRandomPolynomials) {
    std::mt19937 rng(20240611);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_poly(rng, p, 6), b = random_poly(rng, p, 6), c = random_poly(rng, p, 6);
            auto op = [](PolyOp o, const PrimePoly& x, const PrimePoly& y) { return poly_arith(o, x, y); };
            EXPECT_EQ(op(PolyOp::add, a, b), op(PolyOp::add, b, a));
            EXPECT_EQ(op(PolyOp::mul, a, b), op(PolyOp::mul, b, a));
            EXPECT_EQ(op(PolyOp::mul, op(PolyOp::mul, a, b), c), op(PolyOp::mul, a, op(PolyOp::mul, b, c)));
            EXPECT_EQ(op(PolyOp::mul, a, op(PolyOp::add, b, c)),
                      op(PolyOp::add, op(PolyOp::mul, a, b), op(PolyOp::mul, a, c)));
            EXPECT_TRUE(op(PolyOp::sub, a, a).is_zero());
            if (b.is_zero()) continue;
            PolyOps<PrimeField> ops{PrimeField{p}};
            std::vector<Elem> av(a.coeffs.begin(), a.coeffs.end()), bv(b.coeffs.begin(), b.coeffs.end());
            const auto [q, r] = ops.divmod(av, bv);
            EXPECT_LT(ops.degree(r), ops.degree(bv));
            EXPECT_EQ(ops.add(ops.mul(q, bv), r), ops.trim(av));
            const auto g = op(PolyOp::gcd, a, b);
            EXPECT_TRUE(op(PolyOp::mod, a, g).is_zero());
            EXPECT_TRUE(op(PolyOp::mod, b, g).is_zero());
            EXPECT_EQ(g.coeffs.back(), 1u);
        }
    }
}

TEST(Irreducible, Examples) {
    EXPECT_TRUE(is_irreducible(poly(2, {1, 1, 1})));
    EXPECT_FALSE(is_irreducible(poly(2, {1, 0, 1})));
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t a = 0; a < p; ++a) EXPECT_TRUE(is_irreducible(poly(p, {a, 1})));
    EXPECT_THROW(is_irreducible(poly(3, {2})), DegreeZero);
}

TEST(Irreducible, Enumeration) {
    const auto linear = enumerate_irreducibles(2, 1);
    ASSERT_EQ(linear.size(), 2u);
    EXPECT_EQ(linear[0], poly(2, {0, 1}));
    EXPECT_EQ(linear[1], poly(2, {1, 1}));
    EXPECT_EQ(enumerate_irreducibles(2, 2), (std::vector<PrimePoly>{poly(2, {1, 1, 1})}));
    EXPECT_EQ(enumerate_irreducibles(3, 1).size(), 3u);
    EXPECT_THROW(enumerate_irreducibles(4, 1), InvalidInput);
}

TEST(Irreducible, CountsMatchNecklaceFormula) {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int d = 1; d <= 6 && std::pow(p, d) <= 20000; ++d)
            EXPECT_EQ(static_cast<std::int64_t>(enumerate_irreducibles(p, static_cast<std::size_t>(d)).size()),
                      oracle::irreducible_count(p, d))
                << p << "^" << d;
    for (std::uint64_t q : {4u, 8u, 9u})
        for (int d = 1; d <= 3; ++d)
            EXPECT_EQ(static_cast<std::int64_t>(enumerate_irreducibles_gf(q, static_cast<std::size_t>(d)).size()),
                      oracle::irreducible_count(static_cast<std::int64_t>(q), d))
                << q << "^" << d;
}

TEST(Irreducible, EveryEnumeratedPolynomialHasNoRoots) {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::size_t d = 2; d <= 3; ++d)
            for (const auto& f : enumerate_irreducibles(p, d))
                EXPECT_EQ(oracle::root_count(p, std::vector<Elem>(f.coeffs.begin(), f.coeffs.end())), 0u);
}

TEST(FiniteFields, Construction) {
    EXPECT_TRUE(find_isomorphism(gf_ring(2), zmod(2)).has_value());
    const Ring f4 = gf_ring(4);
    EXPECT_EQ(f4.order(), 4u);
    EXPECT_EQ(units(f4).members.size(), 3u);
    EXPECT_EQ(characteristic(f4), 2u);
    EXPECT_THROW(gf_ring(6), NotPrimePower);
    EXPECT_THROW(gf_ring(1), NotPrimePower);
}

TEST(FiniteFields, TablesSatisfyEveryAxiomAndFormAField) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u}) {
        const Ring f = gf_ring(q);
        EXPECT_FALSE(find_axiom_violation(f.order(), f.add_table(), f.mul_table(), f.zero(), f.one()).has_value())
            << q;
        EXPECT_EQ(oracle::units(f).size(), q - 1) << q;
        EXPECT_EQ(characteristic(f), prime_power(q)->first);
    }
}

TEST(FiniteFields, PrimePowerDetection) {
    EXPECT_EQ(prime_power(8), (std::pair<std::uint32_t, std::uint32_t>{2, 3}));
    EXPECT_EQ(prime_power(49), (std::pair<std::uint32_t, std::uint32_t>{7, 2}));
    EXPECT_FALSE(prime_power(12).has_value());
    EXPECT_FALSE(prime_power(1).has_value());
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(91));
}

TEST(QuotientRings, Examples) {
    const Ring dual = poly_quotient_ring(2, GfPoly{2, {0, 0, 1}});
    ASSERT_TRUE(is_local(dual));
    EXPECT_EQ(local_maximal_ideal(dual)->size(), 2u);
    EXPECT_TRUE(find_isomorphism(poly_quotient_ring(2, GfPoly{2, {0, 1, 1}}), product(zmod(2), zmod(2))));
    const Ring f4 = poly_quotient_ring(2, GfPoly{2, {1, 1, 1}});
    EXPECT_TRUE(is_field(f4));
    EXPECT_TRUE(find_isomorphism(f4, gf_ring(4)).has_value());
    EXPECT_THROW(poly_quotient_ring(2, GfPoly{2, {1}}), DegreeZero);
}

TEST(QuotientRings, TablesSatisfyEveryAxiom) {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const Ring field = gf_ring(q);
        PolyOps<TableField> ops{TableField(field)};
        for (std::size_t i = 0; i < q * q; ++i) {
            const Ring r = poly_quotient_ring(q, GfPoly{q, ops.monic_from_index(2, i)});
            EXPECT_FALSE(find_axiom_violation(r.order(), r.add_table(), r.mul_table(), r.zero(), r.one()));
        }
    }
}

TEST(Spectrum, Examples) {
    const auto one = polyring_max_spectrum(2, 1);
    ASSERT_EQ(one.size(), 2u);
    for (const auto& e : one) EXPECT_EQ(e.residue_order, 2u);
    const auto two = polyring_max_spectrum(2, 2);
    ASSERT_EQ(two.size(), 3u);
    EXPECT_EQ(two.back().residue_order, 4u);
    EXPECT_EQ(to_string(two.back().f), "x^2+x+1");
}

TEST(Spectrum, RationalPointsNumberQ) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u})
        for (std::size_t dmax = 1; dmax <= 3; ++dmax) {
            const auto s = polyring_max_spectrum(q, dmax);
            EXPECT_EQ(std::count_if(s.begin(), s.end(), [&](const SpectrumEntry& e) { return e.residue_order == q; }),
                      static_cast<std::ptrdiff_t>(q));
        }
}
