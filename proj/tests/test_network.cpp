#include "ccn/equivalence.hpp"
#include "ccn/errors.hpp"
#include "ccn/network.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ccn;
using namespace ccn::testing;

TEST(Network, Degree) {
    EXPECT_EQ(Network::from_rows({{3}}).degree(), 3u);
    EXPECT_EQ(Network::from_rows({{0, 2}, {2, 0}}).degree(), 2u);
    for (std::uint32_t r = 1; r <= 6; ++r)
        for (std::uint32_t k = 0; k <= r; ++k) EXPECT_EQ(totient_network(r, k).degree(), r);
}

TEST(Network, RejectsMalformedInput) {
    EXPECT_THROW(Network::from_rows({{0, 2}, {1, 0}}), MalformedNetwork);
    EXPECT_THROW(Network::from_rows({{0, 1}, {1}}), MalformedNetwork);
    EXPECT_THROW(Network::from_rows({}), MalformedNetwork);
    EXPECT_THROW(Network(2, {1, 0, 1}), MalformedNetwork);
    EXPECT_THROW(Network::from_rows({{0, 0}, {0, 0}}), MalformedNetwork);
    EXPECT_NO_THROW(Network::from_rows({{0, 0}, {0, 0}}, true));
    EXPECT_THROW(common_row_sum(2, std::vector<std::uint32_t>{1, 1, 2, 1}), MalformedNetwork);
}

TEST(Network, AddLoops) {
    const auto g = two_cycle();
    EXPECT_EQ(add_loops(g, 0), g);
    EXPECT_EQ(add_loops(g, 1), Network::from_rows({{1, 1}, {1, 1}}));
    EXPECT_EQ(add_loops(g, 4).degree(), 5u);
}

TEST(Network, SplitEdges) {
    const auto g = two_cycle();
    EXPECT_EQ(split_edges(g, 1), g);
    EXPECT_EQ(split_edges(g, 3), Network::from_rows({{0, 3}, {3, 0}}));
    EXPECT_THROW(split_edges(g, 0), DomainError);
}

TEST(Network, TransformChain) {
    EXPECT_EQ(split_edges(chain_network_1(), 3), chain_network_2());
    EXPECT_EQ(add_loops(chain_network_2(), 2), chain_network_3());
    EXPECT_TRUE(is_reduced(chain_network_1()));
    const auto [reduced, trace] = reduce(chain_network_3());
    EXPECT_EQ(reduced, chain_network_1());
    EXPECT_EQ(trace, (ReductionTrace{2, 3}));
}

TEST(Reduce, Examples) {
    const auto g = two_cycle();
    auto r0 = reduce(g);
    EXPECT_EQ(r0.network, g);
    EXPECT_EQ(r0.trace, (ReductionTrace{0, 1}));

    const auto ones = Network::from_rows({{1, 1}, {1, 1}});
    auto r1 = reduce(ones);
    EXPECT_EQ(r1.network, g);
    EXPECT_EQ(r1.trace, (ReductionTrace{1, 1}));
    EXPECT_TRUE(linear_equiv_oracle(ones, r1.network));

    for (std::uint32_t r = 1; r <= 5; ++r) {
        auto single = reduce(Network::from_rows({{r}}));
        EXPECT_EQ(single.network, Network::from_rows({{0}}, true));
        EXPECT_EQ(single.network.degree(), 0u);
        EXPECT_EQ(single.trace, (ReductionTrace{r, 1}));
    }
}

TEST(Reduce, DegreeZeroIsAFixedPoint) {
    const auto zero = Network::from_rows({{0, 0}, {0, 0}}, true);
    const auto rz = reduce(zero);
    EXPECT_EQ(rz.network, zero);
    EXPECT_EQ(rz.trace, (ReductionTrace{0, 1}));
}

TEST(IsReduced, Examples) {
    EXPECT_TRUE(is_reduced(two_cycle()));
    EXPECT_FALSE(is_reduced(Network::from_rows({{0, 2}, {2, 0}})));
    EXPECT_FALSE(is_reduced(Network::from_rows({{1, 1}, {1, 1}})));
    EXPECT_TRUE(is_reduced(Network::from_rows({{0}}, true)));
    // Loop entries count toward the gcd.
    EXPECT_TRUE(is_reduced(Network::from_rows({{0, 2}, {1, 1}})));
}

TEST(IsConnected, Examples) {
    EXPECT_TRUE(is_connected(two_cycle()));
    EXPECT_FALSE(is_connected(Network::from_rows({{1, 0}, {0, 1}})));
    EXPECT_TRUE(is_connected(Network::from_rows({{5}})));
    // Direction is ignored.
    EXPECT_TRUE(is_connected(Network::from_rows({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}})));
    EXPECT_FALSE(is_connected(Network::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})));
}

TEST(Relabel, PermutesRowsAndColumnsTogether) {
    const auto g = Network::from_rows({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    const std::vector<std::uint32_t> perm{2, 0, 1};
    const auto h = relabel(g, perm);
    for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t j = 0; j < 3; ++j) EXPECT_EQ(h.at(i, j), g.at(perm[i], perm[j]));
    EXPECT_THROW(relabel(g, std::vector<std::uint32_t>{0, 0, 1}), DomainError);
    EXPECT_THROW(relabel(g, std::vector<std::uint32_t>{0, 1}), DomainError);
}

// Exhaustive over n <= 4, r <= 3.
TEST(ReduceProperties, ExhaustiveSmall) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
        for (std::uint32_t r = 1; r <= 3; ++r) {
            for (const auto& g : brute_force_omega(n, r)) {
                const auto [gm, trace] = reduce(g);
                EXPECT_TRUE(is_reduced(gm));
                const auto again = reduce(gm);
                EXPECT_EQ(again.network, gm);
                EXPECT_EQ(again.trace, (ReductionTrace{0, 1}));
                EXPECT_EQ(add_loops(split_edges(gm, trace.divisor), trace.loops_removed), g);
                if (gm.degree() >= 1) EXPECT_EQ(is_connected(g), is_connected(gm));
                if (!is_reduced(g)) EXPECT_LT(gm.degree(), g.degree());
            }
        }
    }
}

TEST(ReduceProperties, CommutationOfSplittingAndLoops) {
    for (std::uint32_t n = 1; n <= 3; ++n)
        for (std::uint32_t r = 1; r <= 3; ++r)
            for (const auto& g : brute_force_omega(n, r))
                for (std::uint32_t k = 1; k <= 5; ++k)
                    EXPECT_EQ(split_edges(add_loops(g, 1), k), add_loops(split_edges(g, k), k));
}

TEST(ReduceProperties, RandomLarger) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::uint32_t> n_dist(4, 8), r_dist(1, 9), k_dist(1, 6), s_dist(0, 5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = random_network(rng, n_dist(rng), r_dist(rng));
        const auto [gm, trace] = reduce(g);
        EXPECT_TRUE(is_reduced(gm));
        EXPECT_EQ(reduce(gm).network, gm);
        EXPECT_EQ(add_loops(split_edges(gm, trace.divisor), trace.loops_removed), g);

        // Building up from a reduced network and reducing again recovers it.
        const auto k = k_dist(rng), s = s_dist(rng);
        const auto built = add_loops(split_edges(gm, k), s);
        if (gm.degree() > 0) {
            EXPECT_EQ(reduce(built).network, gm);
            EXPECT_EQ(reduce(built).trace, (ReductionTrace{s, k}));
        }
    }
}
