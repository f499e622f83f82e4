#include "trib/matrix.hpp"

#include "trib/errors.hpp"

#include <bit>
#include <string>

namespace trib {

Mat3 ScaledMat3::canonical() const
{
    if (denominator <= 0)
        throw InconsistencyError("ScaledMat3: denominator must be positive");
    Mat3 out;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            const Zint& e = numerator(r, c);
            if (!mpz_divisible_p(e.get_mpz_t(), denominator.get_mpz_t()))
                throw InconsistencyError("ScaledMat3: entry (" + std::to_string(r) + "," + std::to_string(c) +
                                         ") = " + e.get_str() + " not divisible by " + denominator.get_str());
            mpz_divexact(out(r, c).get_mpz_t(), e.get_mpz_t(), denominator.get_mpz_t());
        }
    }
    return out;
}

std::string Mat3::to_string() const
{
    std::string out = "[";
    for (std::size_t r = 0; r < 3; ++r) {
        out += r == 0 ? "[" : ",[";
        for (std::size_t c = 0; c < 3; ++c) {
            if (c != 0)
                out += ',';
            out += (*this)(r, c).get_str();
        }
        out += ']';
    }
    return out + "]";
}

Mat3 generating_matrix()
{
    return {1, 1, 1,
            1, 0, 0,
            0, 1, 0};
}

Mat3 mat_mul(const Mat3& a, const Mat3& b)
{
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Zint& acc = out(i, j);
            acc = a(i, 0) * b(0, j);
            acc += a(i, 1) * b(1, j);
            acc += a(i, 2) * b(2, j);
        }
    }
    return out;
}

Mat3 mat_pow(const Mat3& m, Index n)
{
    if (n < 0)
        throw DomainError("mat_pow: negative exponent " + std::to_string(n));
    Mat3 result = Mat3::identity();
    if (n == 0)
        return result;
    auto bits = static_cast<std::uint64_t>(n);
    int top = std::bit_width(bits) - 1;
    result = m;
    for (int k = top - 1; k >= 0; --k) {
        result = result * result;
        if ((bits >> k) & 1u)
            result = result * m;
    }
    return result;
}

StateVector apply(const Mat3& m, const StateVector& v)
{
    StateVector out;
    Zint* rows[3] = {&out.top, &out.mid, &out.bot};
    for (std::size_t i = 0; i < 3; ++i) {
        Zint& acc = *rows[i];
        acc = m(i, 0) * v.top;
        acc += m(i, 1) * v.mid;
        acc += m(i, 2) * v.bot;
    }
    return out;
}

Zint determinant(const Mat3& m)
{
    return det3(m.entries());
}

Zint trace(const Mat3& m)
{
    return m(0, 0) + m(1, 1) + m(2, 2);
}

Zint principal_minor_sum(const Mat3& m)
{
    Zint s = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    s += m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    s += m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    return s;
}

Mat3 q_power_closed(const Stencil& t)
{
    return Mat3({t.next, t.cur + t.prev1, t.cur,
                 t.cur, t.prev1 + t.prev2, t.prev1,
                 t.prev1, t.prev2 + t.prev3, t.prev2});
}

Mat3 q_power_closed(Index n)
{
    return q_power_closed(stencil(SeqId::T, n));
}

ScaledMat3 h_power_closed(const Stencil& h)
{
    const Zint& p1 = h.next;
    const Zint& z = h.cur;
    const Zint& m1 = h.prev1;
    const Zint& m2 = h.prev2;
    const Zint& m3 = h.prev3;
    Mat3 num({Zint(10 * p1 + 16 * z + 7 * m1), Zint(10 * z + 26 * m1 + 23 * m2 + 7 * m3), Zint(10 * z + 16 * m1 + 7 * m2),
              Zint(7 * p1 + 3 * z + 9 * m1),   Zint(7 * z + 10 * m1 + 12 * m2 + 9 * m3),  Zint(7 * z + 3 * m1 + 9 * m2),
              Zint(9 * p1 - 2 * z - 6 * m1),   Zint(9 * z + 7 * m1 - 8 * m2 - 6 * m3),    Zint(9 * z - 2 * m1 - 6 * m2)});
    return {std::move(num), Zint(41)};
}

ScaledMat3 h_power_closed(Index n)
{
    return h_power_closed(stencil(SeqId::H, n));
}

Zint cubic_form(const Stencil& x)
{
    Zint acc = x.prev1 * x.prev1 * x.prev1;
    acc += x.prev2 * x.prev2 * x.next;
    acc += x.prev3 * x.cur * x.cur;
    acc -= 2 * x.prev2 * x.prev1 * x.cur;
    acc -= x.prev3 * x.prev1 * x.next;
    return acc;
}

Zint cassini_t(Index n)
{
    return cubic_form(stencil(SeqId::T, n));
}

Zint cubic_identity_h(Index n)
{
    return cubic_form(stencil(SeqId::H, n));
}

StateVector propagate(Index n)
{
    return apply(mat_pow(generating_matrix(), n), initial_state());
}

CharPoly char_poly(const Mat3& m)
{
    return {-trace(m), principal_minor_sum(m), -determinant(m)};
}

CharPoly char_poly_coeffs(Index n)
{
    if (n < 1)
        throw DomainError("char_poly_coeffs: requires n >= 1, got " + std::to_string(n));
    return char_poly(mat_pow(generating_matrix(), n));
}

Zint h_by_closed_doubling(Index n)
{
    if (n < 0)
        throw DomainError("h_by_closed_doubling: requires n >= 0, got " + std::to_string(n));
    StateVector state = initial_state();
    if (n == 0)
        return state.bot;
    auto bits = static_cast<std::uint64_t>(n);
    for (int k = std::bit_width(bits) - 1; k >= 0; --k) {
        Mat3 half_power = h_power_closed(stencil_from_state(state)).canonical();
        state = apply(half_power, state);
        if ((bits >> k) & 1u)
            state = advance_state(state);
    }
    return state.bot;
}

} // namespace trib
