#pragma once

/**
 * @file matrix.hpp
 * @brief Exact 3x3 integer matrices: powering of the generating matrix
 *        and its closed forms.
 *
 * The generating matrix
 *
 *        [1 1 1]
 *   H =  [1 0 0]
 *        [0 1 0]
 *
 * is also the Tribonacci companion matrix Q. Its powers carry shifted
 * sequence values in fixed positions, which gives two closed forms for H^n:
 * one in Tribonacci numbers and one in the generalized sequence scaled by 1/41.
 */

#include "trib/sequence.hpp"
#include "trib/zint.hpp"

#include <array>
#include <cstddef>
#include <string>

namespace trib {

/// Determinant of a row-major 3x3 grid by cofactor expansion along row 0.
template<typename S>
S det3(const std::array<S, 9>& m)
{
    S minor0 = m[4] * m[8] - m[5] * m[7];
    S minor1 = m[3] * m[8] - m[5] * m[6];
    S minor2 = m[3] * m[7] - m[4] * m[6];
    return m[0] * minor0 - m[1] * minor1 + m[2] * minor2;
}

class Mat3 {
public:
    Mat3() = default;
    explicit Mat3(std::array<Zint, 9> entries) : entries_(std::move(entries)) {}
    Mat3(long a00, long a01, long a02,
         long a10, long a11, long a12,
         long a20, long a21, long a22)
        : entries_{Zint(a00), Zint(a01), Zint(a02),
                   Zint(a10), Zint(a11), Zint(a12),
                   Zint(a20), Zint(a21), Zint(a22)}
    {}

    static Mat3 identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

    Zint& operator()(std::size_t row, std::size_t col) { return entries_[row * 3 + col]; }
    const Zint& operator()(std::size_t row, std::size_t col) const { return entries_[row * 3 + col]; }

    const std::array<Zint, 9>& entries() const { return entries_; }

    bool operator==(const Mat3&) const = default;

    /// [[a,b,c],[d,e,f],[g,h,i]]
    std::string to_string() const;

private:
    std::array<Zint, 9> entries_{};
};

/// numerator / denominator, entrywise.
struct ScaledMat3 {
    Mat3 numerator;
    Zint denominator{1};

    /// The represented matrix when it is integral; throws InconsistencyError
    /// if the denominator fails to divide some entry.
    Mat3 canonical() const;
};

/// Generating matrix of H; identical to the Tribonacci companion matrix Q.
Mat3 generating_matrix();
inline Mat3 companion_matrix() { return generating_matrix(); }

Mat3 mat_mul(const Mat3& a, const Mat3& b);
inline Mat3 operator*(const Mat3& a, const Mat3& b) { return mat_mul(a, b); }

/// m^n by square-and-multiply, most significant bit first. DomainError for n < 0.
Mat3 mat_pow(const Mat3& m, Index n);

/// m * (top, mid, bot)^T.
StateVector apply(const Mat3& m, const StateVector& v);

Zint determinant(const Mat3& m);
Zint trace(const Mat3& m);
Zint principal_minor_sum(const Mat3& m);

/// Q^n written in Tribonacci numbers T(n+1) .. T(n-3).
Mat3 q_power_closed(Index n);
Mat3 q_power_closed(const Stencil& t);

/// 41 * H^n written in H(n+1) .. H(n-3), over denominator 41.
ScaledMat3 h_power_closed(Index n);
ScaledMat3 h_power_closed(const Stencil& h);

/// X(n-1)^3 + X(n-2)^2 X(n+1) + X(n-3) X(n)^2 - 2 X(n-2) X(n-1) X(n) - X(n-3) X(n-1) X(n+1).
/// Equals det(Q^n) = 1 over T and 41 det(H^n) = 41 over H.
Zint cubic_form(const Stencil& x);

Zint cassini_t(Index n);
Zint cubic_identity_h(Index n);

/// H^n (H(2), H(1), H(0)) = (H(n+2), H(n+1), H(n)). DomainError for n < 0.
StateVector propagate(Index n);

/// Monic characteristic polynomial y^3 + c2 y^2 + c1 y + c0 of H^n.
struct CharPoly {
    Zint c2;
    Zint c1;
    Zint c0;

    bool operator==(const CharPoly&) const = default;
};

CharPoly char_poly(const Mat3& m);
CharPoly char_poly_coeffs(Index n);

/// H(n) by doubling on the 1/41 closed form: the state at 2m is the closed-form
/// H^m applied to the state at m. Uses no matrix-matrix products.
Zint h_by_closed_doubling(Index n);

} // namespace trib
