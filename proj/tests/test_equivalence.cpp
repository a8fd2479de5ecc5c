#include "ccn/equivalence.hpp"
#include "ccn/errors.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ccn;
using namespace ccn::testing;

TEST(OdeEquivalence, NetworkOperationsPreserveTheClass) {
    const auto g = Network::from_rows({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    EXPECT_TRUE(are_ode_equivalent(g, add_loops(g, 5)));
    EXPECT_TRUE(are_ode_equivalent(g, split_edges(g, 4)));
    EXPECT_TRUE(are_ode_equivalent(chain_network_1(), chain_network_3()));
    EXPECT_TRUE(are_ode_equivalent(chain_network_2(), chain_network_3()));
}

TEST(OdeEquivalence, DistinctMinimalNetworksAreNotEquivalent) {
    EXPECT_FALSE(are_ode_equivalent(two_cycle(), loop_feeder()));
    EXPECT_FALSE(are_ode_equivalent(two_cycle(), Network::from_rows({{1}})));
    // Relabeling is allowed.
    EXPECT_TRUE(are_ode_equivalent(loop_feeder(), Network::from_rows({{0, 2}, {0, 2}})));
}

TEST(OdeEquivalence, TotientFamilyIsPairwiseDistinct) {
    for (std::uint32_t r = 2; r <= 8; ++r) {
        for (std::uint32_t k1 = 1; k1 <= r; ++k1) {
            for (std::uint32_t k2 = 1; k2 <= r; ++k2) {
                if (std::gcd(k1, r) != 1 || std::gcd(k2, r) != 1) continue;
                EXPECT_EQ(are_ode_equivalent(totient_network(r, k1), totient_network(r, k2)), k1 == k2);
            }
        }
    }
}

TEST(LinearOracle, Examples) {
    const auto g = chain_network_1();
    EXPECT_TRUE(linear_equiv_oracle(g, g));

    const auto doubled = Network::from_rows({{0, 2}, {2, 0}});
    const auto witness = find_linear_equivalence(doubled, two_cycle());
    ASSERT_TRUE(witness.has_value());
    EXPECT_EQ(witness->forward.offset, 0);
    EXPECT_EQ(witness->forward.scale, Rational(1, 2));
    EXPECT_EQ(witness->backward.scale, 2);

    EXPECT_FALSE(linear_equiv_oracle(two_cycle(), Network::from_rows({{0, 1}, {0, 1}})));
}

TEST(LinearOracle, LoopAdjoiningShiftsTheOffset) {
    // A + Id = offset*Id + scale*A with offset = 1, scale = 1.
    const auto g = chain_network_1();
    const auto coeffs = solve_in_pencil(add_loops(g, 1), g);
    ASSERT_TRUE(coeffs.has_value());
    EXPECT_EQ(coeffs->offset, 1);
    EXPECT_EQ(coeffs->scale, 1);
}

TEST(LinearOracle, ScalarPencils) {
    const auto a = Network::from_rows({{2, 0}, {0, 2}});
    const auto b = Network::from_rows({{5, 0}, {0, 5}});
    EXPECT_TRUE(linear_equiv_oracle(a, b));
    EXPECT_FALSE(linear_equiv_oracle(a, two_cycle()));
    EXPECT_FALSE(linear_equiv_oracle(two_cycle(), a));
    EXPECT_TRUE(are_ode_equivalent(a, b));
    EXPECT_TRUE(linear_equiv_oracle(Network::from_rows({{3}}), Network::from_rows({{7}})));
}

TEST(LinearOracle, Errors) {
    EXPECT_THROW(linear_equiv_oracle(two_cycle(), Network::from_rows({{1}})), DomainError);
    std::mt19937_64 rng(3);
    const auto big = random_network(rng, 9, 1);
    EXPECT_THROW(linear_equiv_oracle(big, big), UnsupportedSize);
    EXPECT_THROW(are_ode_equivalent(big, big), UnsupportedSize);
}

// The deciders must agree on every ordered pair of labeled networks with two
// cells and degree <= 4.
TEST(DeciderAgreement, ExhaustiveTwoCells) {
    std::vector<Network> all;
    for (std::uint32_t r = 1; r <= 4; ++r) {
        auto omega = brute_force_omega(2, r);
        all.insert(all.end(), omega.begin(), omega.end());
    }
    for (const auto& a : all)
        for (const auto& b : all) EXPECT_EQ(are_ode_equivalent(a, b), linear_equiv_oracle(a, b));
}

TEST(DeciderAgreement, RandomFourCells) {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::uint32_t> r_dist(1, 3), k_dist(1, 3);
    int equivalent = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_network(rng, 4, r_dist(rng));
        Network b = random_network(rng, 4, r_dist(rng));
        if (trial % 2 == 0) {
            // Build a relative of a so both verdicts get exercised.
            const auto gm = reduce(a).network;
            b = relabel(add_loops(split_edges(gm, k_dist(rng)), k_dist(rng) - 1), random_permutation(rng, 4));
        }
        const bool verdict = are_ode_equivalent(a, b);
        EXPECT_EQ(verdict, linear_equiv_oracle(a, b));
        equivalent += verdict ? 1 : 0;
    }
    EXPECT_GE(equivalent, 100);
}
