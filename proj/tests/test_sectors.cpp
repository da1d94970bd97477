#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace omk;
using namespace omk::testing;

using Mult = std::vector<std::size_t>;

TEST(ExponentMultiplicities, Examples) {
    EXPECT_EQ(exponent_multiplicities(CycMatrix::identity(3, 1)), (Mult{3}));
    EXPECT_EQ(exponent_multiplicities(diag_zeta(4, {1, 3})), (Mult{1, 0, 1, 0}));
    EXPECT_EQ(exponent_multiplicities(quaternion_i(4)), (Mult{1, 0, 1, 0}));
    EXPECT_EQ(exponent_multiplicities(quaternion_j(4)), (Mult{1, 0, 1, 0}));
    // element order 3 inside Q(zeta_6)
    EXPECT_EQ(exponent_multiplicities(diag_zeta(6, {2, 0})), (Mult{1, 0, 1}));
}

TEST(ExponentMultiplicities, MatchNumericEigenvalues) {
    std::mt19937 rng(11);
    std::vector<CycMatrix> samples;
    for (const auto& f : group_fixtures()) {
        const auto G = close_group(f.generators);
        for (const auto& g : G.elements()) samples.push_back(g);
    }
    for (std::size_t r : {3, 5, 7, 8}) {
        const auto g = random_conjugate(diag_zeta(r, {1, 2}), rng);
        const auto G = close_group({g});
        for (const auto& h : G.elements()) samples.push_back(h);
    }
    for (const auto& g : samples) {
        const auto exact = exponent_multiplicities(g);
        EXPECT_EQ(exact, numeric_exponent_multiplicities(g, element_order(g))) << g.key();
    }
}

TEST(Age, Examples) {
    EXPECT_EQ(age(diag_zeta(3, {1, 1, 1})), 1);
    EXPECT_EQ(age(CycMatrix::identity(4, 1)), 0);
    EXPECT_EQ(age(diag_zeta(5, {1, 4})), 1);
    EXPECT_EQ(age(diag_zeta(5, {1, 2})), rational(3, 5));
}

TEST(Age, MatchesBruteForceOnCyclicGroups) {
    const std::vector<std::pair<long, std::vector<long>>> cases{
        {5, {1, 2}}, {7, {1, 2, 4}}, {6, {1, 1}}, {9, {1, 3, 5}}, {12, {1, 5, 6}}};
    for (const auto& [r, w] : cases) {
        const auto expected = brute_force_cyclic_ages(r, w);
        std::vector<long long> wl(w.begin(), w.end());
        const auto g = diag_zeta(static_cast<std::size_t>(r), wl);
        for (long k = 1; k < r; ++k)
            EXPECT_EQ(age(power(g, static_cast<unsigned long long>(k))), expected[static_cast<std::size_t>(k - 1)])
                << r << " k=" << k;
    }
}

TEST(Shift, Examples) {
    EXPECT_EQ(shift(CycMatrix::identity(3, 1)), 0);
    EXPECT_EQ(shift(diag_zeta(2, {1, 1})), 1);
    EXPECT_EQ(shift(diag_zeta(3, {1, 0})), rational(2, 3));
}

TEST(FixedDim, Examples) {
    EXPECT_EQ(fixed_dim(CycMatrix::identity(3, 1)), 3u);
    EXPECT_EQ(fixed_dim(diag_zeta(2, {1, 1})), 0u);
    EXPECT_EQ(fixed_dim(diag_zeta(2, {0, 1})), 1u);
}

TEST(Sectors, ElementIdentities) {
    std::size_t elements = 0;
    for (const auto& f : group_fixtures()) {
        const auto G = close_group(f.generators);
        const bool sl = is_subgroup_of_SL(G);
        const auto d = static_cast<long>(G.degree());
        for (const auto& g : G.elements()) {
            ++elements;
            const auto m = exponent_multiplicities(g);
            std::size_t total = 0;
            for (auto x : m) total += x;
            EXPECT_EQ(total, G.degree());
            const Rational a = age_from_multiplicities(m);
            EXPECT_EQ(shift_from_multiplicities(m) + a + static_cast<long>(fixed_dim_from_multiplicities(m)), d)
                << f.name << " " << g.key();
            EXPECT_EQ(a + age(*inverse(g)), d - static_cast<long>(fixed_dim_from_multiplicities(m)));
            EXPECT_EQ(is_integer(a), determinant(g).is_one()) << f.name << " " << g.key();
            if (sl) {
                EXPECT_TRUE(is_integer(a));
            }
            if (!g.is_identity()) {
                EXPECT_GT(a, 0);
            }
        }
    }
    EXPECT_GE(elements, 500u);
}

TEST(Sectors, ClassConstancyMemberByMember) {
    for (const auto& f : group_fixtures()) {
        const auto G = close_group(f.generators);
        const auto sectors = inertia_decomposition(G);
        for (std::size_t i = 0; i < G.size(); ++i) {
            const auto& s = sectors[G.class_of(i)];
            const auto m = exponent_multiplicities(G.element(i));
            EXPECT_EQ(m, s.exponent_mult) << f.name;
            EXPECT_EQ(age_from_multiplicities(m), s.age);
            EXPECT_EQ(shift_from_multiplicities(m), s.shift);
            EXPECT_EQ(fixed_dim_from_multiplicities(m), s.fixed_dim);
        }
    }
}

TEST(InertiaDecomposition, Trivial) {
    const auto sectors = inertia_decomposition(close_group({CycMatrix::identity(3, 1)}));
    ASSERT_EQ(sectors.size(), 1u);
    EXPECT_EQ(sectors[0].age, 0);
    EXPECT_EQ(sectors[0].shift, 0);
    EXPECT_EQ(sectors[0].fixed_dim, 3u);
}

TEST(InertiaDecomposition, PlusMinusIdentity) {
    const auto sectors = inertia_decomposition(close_group({diag_zeta(2, {1, 1})}));
    ASSERT_EQ(sectors.size(), 2u);
    EXPECT_EQ(sectors[0].age, 0);
    EXPECT_EQ(sectors[0].shift, 0);
    EXPECT_EQ(sectors[0].fixed_dim, 2u);
    EXPECT_EQ(sectors[1].age, 1);
    EXPECT_EQ(sectors[1].shift, 1);
    EXPECT_EQ(sectors[1].fixed_dim, 0u);
}

TEST(InertiaDecomposition, Q8) {
    const auto G = close_group(q8_generators());
    const auto sectors = inertia_decomposition(G);
    ASSERT_EQ(sectors.size(), 5u);
    EXPECT_TRUE(G.element(sectors[0].representative).is_identity());
    EXPECT_EQ(sectors[0].age, 0);
    std::size_t minus_identity = 0, order_four = 0;
    for (std::size_t c = 1; c < 5; ++c) {
        EXPECT_EQ(sectors[c].age, 1);
        EXPECT_EQ(sectors[c].fixed_dim, 0u);
        const auto numeric = numeric_exponent_multiplicities(G.element(sectors[c].representative), sectors[c].order);
        EXPECT_EQ(numeric, sectors[c].exponent_mult);
        if (sectors[c].order == 2) {
            ++minus_identity;
            EXPECT_EQ(sectors[c].centralizer_order, 8u);
        } else {
            ++order_four;
            EXPECT_EQ(sectors[c].centralizer_order, 4u);
        }
    }
    EXPECT_EQ(minus_identity, 1u);
    EXPECT_EQ(order_four, 3u);
}

TEST(InertiaDecomposition, DiagonalExponents) {
    const auto G = close_group({diag_zeta(4, {1, 0, 3})});
    const auto sectors = inertia_decomposition(G);
    for (const auto& s : sectors) {
        const auto e = diagonal_exponents(s);
        ASSERT_EQ(e.size(), 3u);
        EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
        Rational sh = 0;
        for (auto a : e) sh += rational(static_cast<long>(s.order - a), static_cast<long>(s.order));
        EXPECT_EQ(sh, s.shift);
        EXPECT_EQ(static_cast<std::size_t>(std::count(e.begin(), e.end(), s.order)), s.fixed_dim);
    }
}
