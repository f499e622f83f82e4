#include "oracle.hpp"

#include "trib/binet.hpp"
#include "trib/errors.hpp"

#include <gtest/gtest.h>

using namespace trib;

namespace {

APNum from_oracle(const oracle::Float& f, mpfr_prec_t bits)
{
    return APNum(f.str(70, std::ios_base::scientific), bits);
}

APComplex one(mpfr_prec_t bits) { return APComplex(APNum(1, bits), APNum(0, bits)); }

} // namespace

TEST(Roots, RealRootMatchesBisection)
{
    RootSet r = compute_roots(Precision(192));
    APNum expected = from_oracle(oracle::alpha(), 192);
    EXPECT_LT(abs(r.alpha - expected), exp2_int(-180, 192));
    EXPECT_EQ(r.alpha.to_fixed(16), "1.839286755214161");
}

TEST(Roots, SymmetricFunctions)
{
    for (long bits : {64L, 128L, 256L, 512L}) {
        RootSet r = compute_roots(Precision(bits));
        APNum tol = exp2_int(-bits / 2, bits);
        APComplex a(r.alpha, APNum(0, bits));
        APComplex e1 = a + r.omega1 + r.omega2 - one(bits);
        APComplex e2 = a * r.omega1 + a * r.omega2 + r.omega1 * r.omega2 + one(bits);
        APComplex e3 = a * r.omega1 * r.omega2 - one(bits);
        EXPECT_LT(abs(e1), tol) << bits;
        EXPECT_LT(abs(e2), tol) << bits;
        EXPECT_LT(abs(e3), tol) << bits;
        EXPECT_LT(r.residual_bound, tol) << bits;
        EXPECT_LT(r.method_gap, tol) << bits;
        EXPECT_TRUE(r.omega2.re() == r.omega1.re());
        EXPECT_TRUE(r.omega2.im() == -r.omega1.im());
        EXPECT_GT(r.omega1.im().sign(), 0);
    }
}

TEST(Roots, NewtonIndependentOfRadicals)
{
    APNum n = newton_real_root(Precision(256));
    APNum expected = from_oracle(oracle::alpha(), 256);
    EXPECT_LT(abs(n - expected), exp2_int(-190, 256));
}

TEST(Binet, SmallValues)
{
    EXPECT_EQ(binet_t(0, Precision(128)).nearest, 0);
    EXPECT_EQ(binet_t(1, Precision(128)).nearest, 1);
    EXPECT_EQ(binet_t(10, Precision(128)).nearest, 149);
    EXPECT_EQ(binet_h(7, Precision(128), BinetForm::PowerSum).nearest, 47);
    EXPECT_EQ(binet_h(7, Precision(128), BinetForm::Diagonalization).nearest, 47);
    EXPECT_THROW(binet_t(-1, Precision(128)), DomainError);
}

TEST(Binet, AdaptivePrecisionPolicy)
{
    EXPECT_EQ(adaptive_precision(0).bits(), 64);
    EXPECT_EQ(adaptive_precision(100).bits(), 88 + 64);
    EXPECT_EQ(adaptive_precision(500).bits(), 440 + 64);
    EXPECT_EQ(magnitude_bits(1000), 880);
}

TEST(Binet, LowPrecisionIsRefused)
{
    // 64 bits cannot carry T(200) (about 176 bits)
    EXPECT_THROW(binet_t(200, Precision(64)), PrecisionError);
}

TEST(Binet, RoundsToOracleOverFullRange)
{
    auto t = oracle::t_values(0, 500);
    auto h = oracle::h_values(0, 500);
    APNum quarter(mpq_class(1, 4), 64);
    for (Index n = 0; n <= 500; ++n) {
        RoundedValue bt = binet_t_adaptive(n);
        RoundedValue ps = binet_h_adaptive(n, BinetForm::PowerSum);
        RoundedValue dg = binet_h_adaptive(n, BinetForm::Diagonalization);
        ASSERT_EQ(bt.nearest.get_str(), t[n].str()) << n;
        ASSERT_EQ(ps.nearest.get_str(), h[n].str()) << n;
        ASSERT_EQ(dg.nearest.get_str(), h[n].str()) << n;
        ASSERT_LT(bt.margin, quarter) << n;
        ASSERT_LT(ps.margin, quarter) << n;
        ASSERT_LT(dg.margin, quarter) << n;
    }
}

TEST(Binet, QuadraticApproximation)
{
    Precision p(256);
    for (Index n = 2; n <= 120; ++n) {
        QuadraticResidual q = quadratic_approx_check(n, p);
        ASSERT_LT(q.max(), numeric_tolerance(256, magnitude_bits(n))) << n;
    }
    EXPECT_THROW(quadratic_approx_check(1, p), DomainError);
}

TEST(Binet, QuadraticApproximationRejectsWrongInput)
{
    RootSet r = compute_roots(Precision(256));
    QuadraticResidual q = quadratic_approx_check(30, seq_value(SeqId::T, 30) + 1, seq_value(SeqId::T, 29),
                                                 seq_value(SeqId::T, 28), r);
    EXPECT_GT(q.max(), APNum(1, 64));
}

TEST(Diagonalization, ReconstructionShrinksWithPrecision)
{
    APNum e128 = diagonalize(Precision(128)).reconstruction_error();
    APNum e256 = diagonalize(Precision(256)).reconstruction_error();
    APNum e512 = diagonalize(Precision(512)).reconstruction_error();
    EXPECT_LT(e128, exp2_int(-64, 128));
    EXPECT_LT(e256, exp2_int(-128, 256));
    EXPECT_LT(e512, exp2_int(-256, 512));
    // each doubling of precision wins at least 2^(bits/2) more
    EXPECT_LT(e256, e128 * exp2_int(-64, 128) + exp2_int(-200, 256));
    EXPECT_LT(e512, e256 * exp2_int(-128, 256) + exp2_int(-400, 512));
}

TEST(Diagonalization, PowerMatchesExactMatrix)
{
    Diagonalization d = diagonalize(Precision(256));
    for (Index n : {0, 1, 5, 40, 100}) {
        Mat3 exact = mat_pow(generating_matrix(), n);
        CMat3 approx = d.power(n);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                ASSERT_EQ(approx(r, c).re().round(), exact(r, c)) << n;
                ASSERT_LT(abs(approx(r, c).im()), APNum(mpq_class(1, 4), 64)) << n;
            }
    }
}

TEST(Cardano, SmallIndices)
{
    CardanoRoots c1 = cardano_roots(1, Precision(128));
    EXPECT_EQ(c1.k, 1);
    EXPECT_EQ(c1.r, -1);
    RootSet roots = compute_roots(Precision(128));
    EXPECT_LT(abs(c1.y1 - roots.alpha), exp2_int(-100, 128));

    CardanoRoots c3 = cardano_roots(3, Precision(128));
    EXPECT_EQ(c3.k, 7);
    EXPECT_EQ(c3.r, 5);
    EXPECT_EQ(c3.delta_exact, mpq_class(11, 27));
    EXPECT_THROW(cardano_roots(0, Precision(128)), DomainError);
}

TEST(Cardano, AgainstDirectPowers)
{
    for (long bits : {128L, 256L}) {
        Precision p(bits);
        RootSet roots = compute_roots(p);
        APNum rel_tol = exp2_int(-bits / 4, bits);
        for (Index n = 1; n <= 50; ++n) {
            CardanoRoots c = cardano_roots(n, cardano_precision(n, p));
            APNum an = pow(roots.alpha, static_cast<unsigned long>(n));
            ASSERT_LT(abs(c.y1 - an) / an, rel_tol) << n;
            ASSERT_GT(c.delta_exact, 0) << n;
            ASSERT_TRUE(c.a_n.is_finite() && c.b_n.is_finite()) << n;
            // trace consistency
            APComplex sum = c.y2 + c.y3 + c.y1;
            APNum k(seq_value(SeqId::K, n), bits);
            ASSERT_LT(abs(sum.re() - k) / 3, numeric_tolerance(bits, magnitude_bits(n))) << n;
            ASSERT_LT(c.pairing_residual(), numeric_tolerance(bits, 2 * magnitude_bits(n))) << n;
            // the conjugate pair matches omega^n
            APComplex w = pow(roots.omega1, static_cast<unsigned long>(n));
            APNum direct = max(abs(c.y2 - w), abs(c.y3 - conj(w)));
            APNum swapped = max(abs(c.y3 - w), abs(c.y2 - conj(w)));
            APNum gap = direct < swapped ? direct : swapped;
            ASSERT_LT(gap, exp2_int(-bits / 4, bits)) << n;
        }
    }
}

TEST(Cardano, RejectsNonPositiveDiscriminant)
{
    // y^3 - 3y^2 + 3y - 1 = (y - 1)^3
    EXPECT_THROW(cardano_roots_from(3, 3, Precision(128)), DomainError);
}

TEST(Ratio, Examples)
{
    Precision p(256);
    EXPECT_TRUE(ratio_limit(2, p) == APNum(mpq_class(5, 2), 256));
    RootSet roots = compute_roots(p);
    EXPECT_LT(abs(ratio_limit(40, p) - roots.alpha), APNum("1e-10", 256));
    EXPECT_LT(abs(ratio_limit(90, p) - roots.alpha), APNum("1e-12", 256));
    EXPECT_THROW(ratio_limit(1, p), DomainError);
    EXPECT_THROW(ratio_limit(0, p), DomainError);
}

TEST(Ratio, EnvelopeBoundsGap)
{
    Precision p(512);
    RootSet roots = compute_roots(p);
    for (Index n = 2; n <= 200; ++n) {
        Zint h = seq_value(SeqId::H, n);
        APNum gap = abs(ratio_limit(n, p) - roots.alpha);
        APNum env = ratio_envelope(n, h, roots);
        ASSERT_LE(gap, env * APNum("1.0000001", 512) + exp2_int(-400, 512)) << n;
    }
}

TEST(LimitGrid, RationalPoints)
{
    EXPECT_EQ(limit_determinant(0), 1681);
    EXPECT_EQ(limit_determinant(1), 6724);
    EXPECT_EQ(limit_determinant(-1), 1681 * 4);
    EXPECT_EQ(limit_determinant(2), 1681);
    EXPECT_EQ(limit_determinant(mpq_class(1, 2)), limit_factorization(mpq_class(1, 2)));
    auto gen = oracle::rng(4);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
    for (int i = 0; i < 100; ++i) {
        mpq_class x(num(gen), den(gen));
        x.canonicalize();
        ASSERT_EQ(limit_determinant(x), limit_factorization(x)) << x.get_str();
    }
}

TEST(LimitGrid, VanishesAtAlpha)
{
    CharEqLimitResult r = char_eq_limit_check(Precision(128));
    EXPECT_TRUE(r.polynomial_identity_holds);
    EXPECT_EQ(r.sample_points.size(), 10u);
    EXPECT_LT(r.residual, exp2_int(-50, 128));
}
