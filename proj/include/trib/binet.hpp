#pragma once

/**
 * @file binet.hpp
 * @brief Numeric layer over the roots of x^3 - x^2 - x - 1.
 *
 * Roots come from the radical form
 *
 *   alpha  = 1/3 + A + B
 *   omega1 = 1/3 + eps A + eps^2 B,     A, B = cbrt(19/27 +- sqrt(11/27)),
 *   omega2 = conj(omega1)               eps = -1/2 + i sqrt(3)/2,
 *
 * and are cross-checked against Newton iteration on the cubic. Everything
 * else (Binet evaluations, diagonalization of the generating matrix, Cardano
 * roots of the characteristic polynomial of H^n) is built on a RootSet.
 *
 * Tolerances scale with the working precision. A value of magnitude about
 * 2^m computed at b bits is accepted when its residual is below
 * 2^(-(b - m)/2), see numeric_tolerance().
 */

#include "trib/apnum.hpp"
#include "trib/matrix.hpp"
#include "trib/zint.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace trib {

/// log2 of the real root, for sizing precision.
inline constexpr double log2_alpha = 0.87914642160663817;

/// 2^(-(bits - magnitude_bits)/2).
APNum numeric_tolerance(mpfr_prec_t bits, long magnitude_bits);

/// ceil(n log2 alpha): bit length of alpha^n, 0 for n <= 0.
long magnitude_bits(Index n);

struct RootSet {
    APNum alpha;
    APComplex omega1;
    APComplex omega2;
    /// max |r^3 - r^2 - r - 1| over the three roots
    APNum residual_bound;
    /// Newton-refined real root, independent of the radical form
    APNum newton_alpha;
    /// |alpha - newton_alpha|
    APNum method_gap;

    mpfr_prec_t bits() const { return alpha.bits(); }
};

/// Real root of x^3 - x^2 - x - 1 by Newton iteration from 1.8.
APNum newton_real_root(Precision p);

/// Throws PrecisionError when the radical and Newton roots differ by more
/// than 2^(-bits/2).
RootSet compute_roots(Precision p);

/// Binet evaluation together with its nearest integer.
struct RoundedValue {
    APNum value;
    Zint nearest;
    /// |value - nearest|
    APNum margin;
    mpfr_prec_t bits;
};

/// Starting precision for index n: max(64, ceil(n log2 alpha) + 64).
Precision adaptive_precision(Index n);
Precision adaptive_precision(Index n, Precision floor);

/// Tribonacci number from the root form. PrecisionError when the rounding
/// margin reaches 1/4 or the precision leaves under 16 fractional bits;
/// DomainError for n < 0.
RoundedValue binet_t(Index n, const RootSet& roots);
RoundedValue binet_t(Index n, Precision p);

enum class BinetForm {
    /// (alpha^n + omega1^n + omega2^n) minus the Tribonacci Binet form
    PowerSum,
    /// third row of P D^n P^-1 applied to (H(2), H(1), H(0)), in closed form over lambda
    Diagonalization,
};

RoundedValue binet_h(Index n, const RootSet& roots, BinetForm form);
RoundedValue binet_h(Index n, Precision p, BinetForm form);

/// Runs binet_t / binet_h starting at adaptive_precision(n, floor) and doubling
/// the precision while the rounding margin is too wide.
RoundedValue binet_t_adaptive(Index n, Precision floor = Precision(64));
RoundedValue binet_h_adaptive(Index n, BinetForm form, Precision floor = Precision(64));

struct QuadraticResidual {
    /// max over roots r of |r^(n+1) - (T(n) r^2 + (T(n-1) + T(n-2)) r + T(n-1))|
    APNum quadratic;
    /// |alpha T(n) + (1 + omega1 omega2) T(n-1) + T(n-2) - alpha^n|
    APNum linear;

    APNum max() const { return trib::max(quadratic, linear); }
};

/// DomainError for n < 2.
QuadraticResidual quadratic_approx_check(Index n, Precision p);
/// Same, with caller-supplied T(n), T(n-1), T(n-2).
QuadraticResidual quadratic_approx_check(Index n, const Zint& t_n, const Zint& t_n1, const Zint& t_n2,
                                         const RootSet& roots);

struct CMat3 {
    std::array<APComplex, 9> entries;

    APComplex& operator()(std::size_t r, std::size_t c) { return entries[r * 3 + c]; }
    const APComplex& operator()(std::size_t r, std::size_t c) const { return entries[r * 3 + c]; }
};

CMat3 operator*(const CMat3& a, const CMat3& b);

/// P D P^-1 with P the Vandermonde matrix of eigenvectors (r^2, r, 1).
struct Diagonalization {
    CMat3 p;
    CMat3 d;
    CMat3 p_inverse;
    APComplex lambda; // (alpha - omega1)(alpha - omega2)(omega1 - omega2)

    /// P D^n P^-1.
    CMat3 power(Index n) const;
    /// max entrywise |P D P^-1 - H|.
    APNum reconstruction_error() const;
    /// Third row of P D^n P^-1 applied to (H(2), H(1), H(0)).
    APComplex h_from_third_row(Index n) const;
};

/// PrecisionError when lambda is numerically zero.
Diagonalization diagonalize(const RootSet& roots);
Diagonalization diagonalize(Precision p);

/// Roots of y^3 - K y^2 + R y - 1 by Cardano's formula.
struct CardanoRoots {
    APNum y1;
    APComplex y2;
    APComplex y3;
    APNum a_n;
    APNum b_n;
    APNum delta_n;
    mpq_class delta_exact;
    Zint k;
    Zint r;

    /// |a_n b_n - (K^2/9 - R/3)|
    APNum pairing_residual() const;
};

/// Precision needed for the complex pair to survive cancellation at index n.
Precision cardano_precision(Index n, Precision floor);

/// Uses exact K(n), R(n). DomainError for n < 1 or when Delta(n) <= 0.
CardanoRoots cardano_roots(Index n, Precision p);
CardanoRoots cardano_roots_from(const Zint& k, const Zint& r, Precision p);

/// H(n+1) / H(n). DomainError for n < 1 or H(n) = 0.
APNum ratio_limit(Index n, Precision p);
APNum ratio_of(const Zint& h_next, const Zint& h_cur, Precision p);

/// Exact bound on |H(n+1)/H(n) - alpha|: the alpha term cancels in
/// H(n+1) - alpha H(n), leaving |2 Re(b (omega1 - alpha) omega1^n)| / |H(n)|
/// where b is the omega1 coefficient of the H Binet form.
APNum ratio_envelope(Index n, const Zint& h_cur, const RootSet& roots);

/// Grid of quadratics (x^2, x, 1 coefficients) whose determinant is
/// 1681 (x^3 - x^2 - x - 1)^2; it is the large-n limit of 41 H^n / H(n-1)
/// after reducing powers of alpha.
inline constexpr std::array<std::array<long, 3>, 9> limit_grid_coefficients{{
    {10, 16, 7}, {16, 1, 3}, {7, 3, 9},
    {7, 3, 9}, {3, 13, -2}, {9, -2, -6},
    {9, -2, -6}, {-2, 5, 15}, {-6, 15, 4},
}};

template<typename S>
std::array<S, 9> limit_grid(const S& x)
{
    auto entry = [&x](std::size_t i) {
        const auto& c = limit_grid_coefficients[i];
        S inner = x * c[0];
        inner = inner + c[1];
        S full = x * inner;
        return S(full + c[2]);
    };
    return {entry(0), entry(1), entry(2), entry(3), entry(4), entry(5), entry(6), entry(7), entry(8)};
}

mpq_class limit_determinant(const mpq_class& x);
/// 1681 (x^3 - x^2 - x - 1)^2
mpq_class limit_factorization(const mpq_class& x);

struct CharEqLimitResult {
    /// |det(limit_grid(alpha))|
    APNum residual;
    std::vector<mpq_class> sample_points;
    bool polynomial_identity_holds;
};

/// Numeric residual at alpha plus the exact identity at {0, 1, -1, 2, 1/2}
/// and five seeded random rationals.
CharEqLimitResult char_eq_limit_check(Precision p, std::uint64_t seed = 0x7269'6269'6e61'6363ULL);

} // namespace trib
