#include "oracle.hpp"

#include "trib/errors.hpp"
#include "trib/sequence.hpp"

#include <gtest/gtest.h>

using namespace trib;

TEST(Sequence, OpeningTerms)
{
    const std::vector<long> t{0, 1, 1, 2, 4, 7, 13, 24, 44, 81};
    const std::vector<long> k{3, 1, 3, 7, 11, 21, 39, 71, 131, 241};
    const std::vector<long> h{3, 0, 2, 5, 7, 14, 26, 47, 87, 160};
    for (Index n = 0; n < 10; ++n) {
        EXPECT_EQ(seq_value(SeqId::T, n), t[n]) << n;
        EXPECT_EQ(seq_value(SeqId::K, n), k[n]) << n;
        EXPECT_EQ(seq_value(SeqId::H, n), h[n]) << n;
    }
}

TEST(Sequence, NegativeIndices)
{
    EXPECT_EQ(seq_value(SeqId::H, -1), -1);
    EXPECT_EQ(seq_value(SeqId::H, -2), -2);
    EXPECT_EQ(seq_value(SeqId::H, -3), 6);
    EXPECT_EQ(seq_value(SeqId::T, -1), 0);
    EXPECT_EQ(seq_value(SeqId::T, -2), 1);
    EXPECT_EQ(seq_value(SeqId::T, -3), -1);
    EXPECT_EQ(seq_value(SeqId::K, -1), -1);
    EXPECT_EQ(seq_value(SeqId::K, -2), -1);
    EXPECT_EQ(seq_value(SeqId::K, -3), 5);
}

TEST(Sequence, LargeValues)
{
    EXPECT_EQ(seq_value(SeqId::T, 100).get_str(), "98079530178586034536500564");
    EXPECT_EQ(decimal_digits(seq_value(SeqId::H, 1000)), 265u);
}

TEST(Sequence, MatchesOracleOnSignedRange)
{
    const Index lo = -300;
    const Index hi = 1200;
    auto t = oracle::t_values(lo, hi);
    auto k = oracle::k_values(lo, hi);
    auto h = oracle::h_values(lo, hi);
    auto rt = seq_range(SeqId::T, lo, hi);
    auto rk = seq_range(SeqId::K, lo, hi);
    auto rh = seq_range(SeqId::H, lo, hi);
    ASSERT_EQ(rh.size(), h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        ASSERT_EQ(rt[i].get_str(), t[i].str()) << lo + Index(i);
        ASSERT_EQ(rk[i].get_str(), k[i].str()) << lo + Index(i);
        ASSERT_EQ(rh[i].get_str(), h[i].str()) << lo + Index(i);
    }
}

TEST(Sequence, RandomPointQueriesAgreeWithRange)
{
    auto gen = oracle::rng(1);
    std::uniform_int_distribution<Index> pick(-500, 2000);
    auto h = oracle::h_values(-500, 2000);
    for (int i = 0; i < 60; ++i) {
        Index n = pick(gen);
        EXPECT_EQ(seq_value(SeqId::H, n).get_str(), h[n + 500].str()) << n;
    }
}

TEST(Sequence, RangeSingleAndInvalid)
{
    auto one = seq_range(SeqId::K, 5, 5);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], 21);
    EXPECT_THROW(seq_range(SeqId::T, 3, 2), InvalidRange);
}

TEST(Sequence, ParseAndPrintIds)
{
    for (SeqId id : all_sequences)
        EXPECT_EQ(parse_seq_id(to_string(id)), id);
    EXPECT_FALSE(parse_seq_id("X").has_value());
    EXPECT_FALSE(parse_seq_id("").has_value());
}

TEST(Sequence, StencilLayout)
{
    Stencil s = stencil(SeqId::H, 5);
    EXPECT_EQ(s.next, 26);
    EXPECT_EQ(s.cur, 14);
    EXPECT_EQ(s.prev1, 7);
    EXPECT_EQ(s.prev2, 5);
    EXPECT_EQ(s.prev3, 2);
    EXPECT_EQ(stencil_from_state({seq_value(SeqId::H, 7), seq_value(SeqId::H, 6), seq_value(SeqId::H, 5)}), s);
}

TEST(Sequence, StateAdvance)
{
    StateVector s = initial_state();
    EXPECT_EQ(s, (StateVector{2, 0, 3}));
    for (int i = 0; i < 5; ++i)
        s = advance_state(s);
    EXPECT_EQ(s, (StateVector{47, 26, 14}));
}

TEST(Sequence, HIsKMinusT)
{
    for (Index n = -60; n <= 200; ++n)
        ASSERT_EQ(h_from_k_t(n), seq_value(SeqId::H, n)) << n;
}

TEST(Sequence, HFromTribonacci)
{
    EXPECT_EQ(h_from_t(1), 0);
    EXPECT_EQ(h_from_t(7), 47);
    for (Index n = 1; n <= 300; ++n)
        ASSERT_EQ(h_from_t(n), seq_value(SeqId::H, n)) << n;
    EXPECT_THROW(h_from_t(0), DomainError);
    EXPECT_THROW(h_from_t(-4), DomainError);
}

TEST(Sequence, K41Relation)
{
    EXPECT_EQ(k41_numerator(2, 0, 3), 41 * 3);
    EXPECT_EQ(k41_numerator(5, 2, 0), 41 * 1);
    for (Index n = -100; n <= 400; ++n)
        ASSERT_EQ(k_from_h(n), seq_value(SeqId::K, n)) << n;
}

TEST(Sequence, PrincipalMinorSumIsKAtNegativeIndex)
{
    // brute force through the oracle: sum of principal 2x2 minors of G^n
    auto powers = oracle::generator_powers(51);
    auto k = oracle::k_values(-50, 0);
    for (Index n = 1; n <= 50; ++n) {
        const auto& m = powers[n];
        oracle::BigInt minors = (m[0] * m[4] - m[1] * m[3]) + (m[0] * m[8] - m[2] * m[6]) + (m[4] * m[8] - m[5] * m[7]);
        ASSERT_EQ(r_value(n).get_str(), minors.str()) << n;
        if (n >= 3)
            ASSERT_EQ(minors, k[50 - n]) << n;
    }
}
