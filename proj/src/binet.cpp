#include "trib/binet.hpp"

#include "trib/errors.hpp"
#include "trib/sequence.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace trib {

namespace {

APComplex cubic_residual(const APComplex& r)
{
    APComplex r2 = r * r;
    APComplex r3 = r2 * r;
    APComplex out = r3 - r2 - r;
    return out + APNum(-1, r.bits());
}

APNum cubic_residual(const APNum& r)
{
    return ((r - 1) * r - 1) * r - 1;
}

// eps = -1/2 + i sqrt(3)/2
APComplex cube_root_of_unity(mpfr_prec_t bits)
{
    APNum half_sqrt3 = sqrt(APNum(3, bits)) / 2;
    return {APNum(mpq_class(-1, 2), bits), std::move(half_sqrt3)};
}

RoundedValue rounded(APNum value, mpfr_prec_t bits, const char* what)
{
    if (!value.is_finite())
        throw PrecisionError(std::string(what) + ": non-finite evaluation");
    // with fewer fractional bits than this the margin says nothing about the error
    constexpr long fraction_guard = 16;
    if (value.exponent() > static_cast<long>(bits) - fraction_guard)
        throw PrecisionError(std::string(what) + ": " + std::to_string(bits) + " bits cannot resolve a value of " +
                             std::to_string(value.exponent()) + " bits");
    Zint nearest = value.round();
    APNum margin = abs(value - APNum(nearest, bits));
    if (margin >= APNum(mpq_class(1, 4), bits))
        throw PrecisionError(std::string(what) + ": rounding margin " + margin.to_sci(6) + " at " +
                             std::to_string(bits) + " bits");
    return {std::move(value), std::move(nearest), std::move(margin), bits};
}

template<typename Eval>
RoundedValue with_adaptive_precision(Index n, Precision floor, Eval&& eval)
{
    mpfr_prec_t bits = adaptive_precision(n, floor).bits();
    for (int attempt = 0; attempt < 8; ++attempt, bits *= 2) {
        try {
            return eval(Precision(bits));
        } catch (const PrecisionError&) {
        }
    }
    throw PrecisionError("adaptive precision exhausted at index " + std::to_string(n));
}

APNum tribonacci_binet_sum(Index n, const RootSet& roots)
{
    const APNum& a = roots.alpha;
    const APComplex& w1 = roots.omega1;
    const APComplex& w2 = roots.omega2;
    auto e = static_cast<unsigned long>(n + 1);

    APComplex a_w1 = a - w1;
    APComplex a_w2 = a - w2;
    APComplex w1_w2 = w1 - w2;

    APComplex sum = APComplex(pow(a, e)) / (a_w1 * a_w2);
    sum -= pow(w1, e) / (a_w1 * w1_w2);
    sum += pow(w2, e) / (a_w2 * w1_w2);
    return sum.re();
}

} // namespace

APNum numeric_tolerance(mpfr_prec_t bits, long magnitude)
{
    long exponent = -(static_cast<long>(bits) - magnitude) / 2;
    return exp2_int(exponent, bits);
}

long magnitude_bits(Index n)
{
    if (n <= 0)
        return 0;
    return static_cast<long>(std::ceil(static_cast<double>(n) * log2_alpha));
}

APNum newton_real_root(Precision p)
{
    mpfr_prec_t bits = p.bits();
    APNum x(std::string("1.8"), bits);
    APNum stop = exp2_int(-static_cast<long>(bits), bits);
    for (int i = 0; i < 200; ++i) {
        APNum f = cubic_residual(x);
        APNum fp = (3 * x - 2) * x - 1;
        APNum step = f / fp;
        x -= step;
        if (abs(step) <= stop)
            break;
    }
    return x;
}

RootSet compute_roots(Precision p)
{
    mpfr_prec_t bits = p.bits();
    APNum s = sqrt(APNum(mpq_class(11, 27), bits));
    APNum c(mpq_class(19, 27), bits);
    APNum a_t = cbrt(c + s);
    APNum b_t = cbrt(c - s);
    APNum third(mpq_class(1, 3), bits);

    APComplex eps = cube_root_of_unity(bits);
    APComplex eps2 = conj(eps);

    APNum alpha = third + a_t + b_t;
    APComplex omega1 = third + (eps * a_t + eps2 * b_t);
    APComplex omega2 = conj(omega1);

    APNum newton = newton_real_root(p);
    APNum gap = abs(alpha - newton);
    if (gap > numeric_tolerance(bits, 0))
        throw PrecisionError("compute_roots: radical and Newton roots disagree by " + gap.to_sci(6));

    APNum residual = max(abs(cubic_residual(alpha)), abs(cubic_residual(omega1)));
    residual = max(residual, abs(cubic_residual(omega2)));

    return {std::move(alpha), std::move(omega1), std::move(omega2), std::move(residual), std::move(newton),
            std::move(gap)};
}

Precision adaptive_precision(Index n)
{
    return adaptive_precision(n, Precision(Precision::min_bits));
}

Precision adaptive_precision(Index n, Precision floor)
{
    long needed = magnitude_bits(n) + 64;
    return Precision(std::max<mpfr_prec_t>(floor.bits(), needed));
}

RoundedValue binet_t(Index n, const RootSet& roots)
{
    if (n < 0)
        throw DomainError("binet_t: requires n >= 0, got " + std::to_string(n));
    return rounded(tribonacci_binet_sum(n, roots), roots.bits(), "binet_t");
}

RoundedValue binet_t(Index n, Precision p)
{
    return binet_t(n, compute_roots(p));
}

RoundedValue binet_h(Index n, const RootSet& roots, BinetForm form)
{
    if (n < 0)
        throw DomainError("binet_h: requires n >= 0, got " + std::to_string(n));
    const APNum& a = roots.alpha;
    const APComplex& w1 = roots.omega1;
    const APComplex& w2 = roots.omega2;
    auto un = static_cast<unsigned long>(n);

    if (form == BinetForm::PowerSum) {
        APComplex power_sum = APComplex(pow(a, un)) + pow(w1, un) + pow(w2, un);
        APNum value = power_sum.re() - tribonacci_binet_sum(n, roots);
        return rounded(std::move(value), roots.bits(), "binet_h");
    }

    APComplex w1_w2 = w1 - w2;
    APComplex a_w2 = a - w2;
    APComplex a_w1 = a - w1;
    APComplex lambda = a_w1 * a_w2 * w1_w2;

    // weights of alpha^k, omega1^k, omega2^k for k = n+2, n+1, n are (3, -3, -1) times
    // (w1 - w2, -(a - w2), a - w1)
    auto column = [&](unsigned long k) {
        APComplex term = w1_w2 * APComplex(pow(a, k));
        term -= a_w2 * pow(w1, k);
        term += a_w1 * pow(w2, k);
        return term;
    };
    APComplex sum = 3 * column(un + 2);
    sum -= 3 * column(un + 1);
    sum -= column(un);
    sum /= lambda;
    return rounded(sum.re(), roots.bits(), "binet_h");
}

RoundedValue binet_h(Index n, Precision p, BinetForm form)
{
    return binet_h(n, compute_roots(p), form);
}

RoundedValue binet_t_adaptive(Index n, Precision floor)
{
    return with_adaptive_precision(n, floor, [n](Precision p) { return binet_t(n, p); });
}

RoundedValue binet_h_adaptive(Index n, BinetForm form, Precision floor)
{
    return with_adaptive_precision(n, floor, [n, form](Precision p) { return binet_h(n, p, form); });
}

QuadraticResidual quadratic_approx_check(Index n, Precision p)
{
    if (n < 2)
        throw DomainError("quadratic_approx_check: requires n >= 2, got " + std::to_string(n));
    auto t = seq_range(SeqId::T, n - 2, n);
    return quadratic_approx_check(n, t[2], t[1], t[0], compute_roots(p));
}

QuadraticResidual quadratic_approx_check(Index n, const Zint& t_n, const Zint& t_n1, const Zint& t_n2,
                                         const RootSet& roots)
{
    if (n < 2)
        throw DomainError("quadratic_approx_check: requires n >= 2, got " + std::to_string(n));
    mpfr_prec_t bits = roots.bits();
    APNum tn(t_n, bits);
    APNum tn1(t_n1, bits);
    APNum tn2(t_n2, bits);
    APNum middle = tn1 + tn2;
    auto e = static_cast<unsigned long>(n + 1);

    APNum real_side = pow(roots.alpha, e) - ((tn * roots.alpha + middle) * roots.alpha + tn1);
    APNum quadratic = abs(real_side);
    for (const APComplex* w : {&roots.omega1, &roots.omega2}) {
        APComplex rhs = (tn * *w + middle) * *w + tn1;
        quadratic = max(quadratic, abs(pow(*w, e) - rhs));
    }

    APNum w1w2 = (roots.omega1 * roots.omega2).re();
    APNum lhs = roots.alpha * tn + (1 + w1w2) * tn1 + tn2;
    APNum linear = abs(lhs - pow(roots.alpha, static_cast<unsigned long>(n)));
    return {std::move(quadratic), std::move(linear)};
}

CMat3 operator*(const CMat3& a, const CMat3& b)
{
    mpfr_prec_t bits = a(0, 0).bits();
    CMat3 out{{APComplex(bits), APComplex(bits), APComplex(bits), APComplex(bits), APComplex(bits),
               APComplex(bits), APComplex(bits), APComplex(bits), APComplex(bits)}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return out;
}

CMat3 Diagonalization::power(Index n) const
{
    if (n < 0)
        throw DomainError("Diagonalization::power: requires n >= 0");
    CMat3 dn = d;
    auto un = static_cast<unsigned long>(n);
    for (std::size_t i = 0; i < 3; ++i)
        dn(i, i) = trib::pow(d(i, i), un);
    return p * dn * p_inverse;
}

APNum Diagonalization::reconstruction_error() const
{
    CMat3 h = power(1);
    Mat3 exact = generating_matrix();
    mpfr_prec_t bits = h(0, 0).bits();
    APNum worst(bits);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            worst = max(worst, abs(h(r, c) - APComplex(APNum(exact(r, c), bits))));
    return worst;
}

APComplex Diagonalization::h_from_third_row(Index n) const
{
    CMat3 m = power(n);
    StateVector start = initial_state();
    mpfr_prec_t bits = m(0, 0).bits();
    APComplex out = m(2, 0) * APNum(start.top, bits);
    out += m(2, 1) * APNum(start.mid, bits);
    out += m(2, 2) * APNum(start.bot, bits);
    return out;
}

Diagonalization diagonalize(const RootSet& roots)
{
    mpfr_prec_t bits = roots.bits();
    APComplex a(roots.alpha);
    const APComplex& w1 = roots.omega1;
    const APComplex& w2 = roots.omega2;
    APComplex one(APNum(1, bits));
    APComplex zero(bits);

    APComplex w1_w2 = w1 - w2;
    APComplex a_w2 = a - w2;
    APComplex a_w1 = a - w1;
    APComplex lambda = a_w1 * a_w2 * w1_w2;
    if (abs(lambda) < numeric_tolerance(bits, 0))
        throw PrecisionError("diagonalize: eigenvector matrix is numerically singular");

    CMat3 p{{a * a, w1 * w1, w2 * w2,
             a, w1, w2,
             one, one, one}};
    CMat3 d{{a, zero, zero,
             zero, w1, zero,
             zero, zero, w2}};
    CMat3 inv{{w1_w2, -((w1 + w2) * w1_w2), w1 * w2 * w1_w2,
               -a_w2, (a + w2) * a_w2, -(a * w2 * a_w2),
               a_w1, -((a + w1) * a_w1), a * w1 * a_w1}};
    for (auto& e : inv.entries)
        e /= lambda;
    return {std::move(p), std::move(d), std::move(inv), std::move(lambda)};
}

Diagonalization diagonalize(Precision p)
{
    return diagonalize(compute_roots(p));
}

APNum CardanoRoots::pairing_residual() const
{
    mpq_class pairing = mpq_class(k) * mpq_class(k) / 9 - mpq_class(r) / 3;
    pairing.canonicalize();
    return abs(a_n * b_n - APNum(pairing, a_n.bits()));
}

Precision cardano_precision(Index n, Precision floor)
{
    return Precision(std::max<mpfr_prec_t>(floor.bits(), 3 * magnitude_bits(n) + 64));
}

CardanoRoots cardano_roots(Index n, Precision p)
{
    if (n < 1)
        throw DomainError("cardano_roots: requires n >= 1, got " + std::to_string(n));
    return cardano_roots_from(seq_value(SeqId::K, n), r_value(n), p);
}

CardanoRoots cardano_roots_from(const Zint& k, const Zint& r, Precision p)
{
    mpfr_prec_t bits = p.bits();
    mpq_class kq(k);
    mpq_class rq(r);
    mpq_class k2 = kq * kq;
    mpq_class k3 = k2 * kq;

    mpq_class shift = k3 / 27 - kq * rq / 6 + mpq_class(1, 2);
    mpq_class delta = k3 / 27 - k2 * rq * rq / 108 - kq * rq / 6 + rq * rq * rq / 27 + mpq_class(1, 4);
    mpq_class pairing = k2 / 9 - rq / 3;
    shift.canonicalize();
    delta.canonicalize();
    pairing.canonicalize();

    if (sgn(delta) <= 0)
        throw DomainError("cardano_roots: Delta = " + delta.get_str() + " <= 0 (three real roots)");
    // (c + sqrt D)(c - sqrt D) = c^2 - D = pairing^3
    mpq_class product = shift * shift - delta;
    if (product != pairing * pairing * pairing)
        throw InconsistencyError("cardano_roots: c^2 - Delta differs from (K^2/9 - R/3)^3");

    // evaluate the cube-root argument away from cancellation, recover the other from the product
    APNum root_delta = sqrt(APNum(delta, bits));
    APNum shift_num(shift, bits);
    APNum product_num(product, bits);
    APNum a_n(bits);
    APNum b_n(bits);
    if (sgn(shift) >= 0) {
        APNum big = shift_num + root_delta;
        a_n = cbrt(big);
        b_n = cbrt(product_num / big);
    } else {
        APNum big = shift_num - root_delta;
        b_n = cbrt(big);
        a_n = cbrt(product_num / big);
    }

    APNum k_third(mpq_class(kq / 3), bits);
    APComplex eps = cube_root_of_unity(bits);
    APComplex eps2 = conj(eps);

    CardanoRoots out{k_third + a_n + b_n,
                     k_third + (eps * a_n + eps2 * b_n),
                     k_third + (eps2 * a_n + eps * b_n),
                     a_n,
                     b_n,
                     APNum(delta, bits),
                     delta,
                     k,
                     r};

    APNum scale = max(APNum(1, bits), abs(APNum(pairing, bits)));
    if (out.pairing_residual() > numeric_tolerance(bits, 0) * scale)
        throw InconsistencyError("cardano_roots: cube-root branches violate A B = K^2/9 - R/3");
    return out;
}

APNum ratio_of(const Zint& h_next, const Zint& h_cur, Precision p)
{
    if (h_cur == 0)
        throw DomainError("ratio: H(n) = 0");
    return APNum(h_next, p.bits()) / APNum(h_cur, p.bits());
}

APNum ratio_limit(Index n, Precision p)
{
    if (n < 1)
        throw DomainError("ratio_limit: requires n >= 1, got " + std::to_string(n));
    auto h = seq_range(SeqId::H, n, n + 1);
    if (h[0] == 0)
        throw DomainError("ratio_limit: H(" + std::to_string(n) + ") = 0, ratio undefined");
    return ratio_of(h[1], h[0], p);
}

APNum ratio_envelope(Index n, const Zint& h_cur, const RootSet& roots)
{
    if (h_cur == 0)
        throw DomainError("ratio_envelope: H(n) = 0");
    mpfr_prec_t bits = roots.bits();
    const APNum& a = roots.alpha;
    const APComplex& w1 = roots.omega1;
    const APComplex& w2 = roots.omega2;
    // omega1 coefficient of H(n) = sum of coefficient * root^n
    APComplex coefficient = -((3 * (a * w2) + APNum(2, bits)) / ((a - w1) * (w1 - w2)));
    APNum bound = 2 * abs(coefficient) * abs(a - w1) * pow(abs(w1), static_cast<unsigned long>(n < 0 ? 0 : n));
    return bound / abs(APNum(h_cur, bits));
}

mpq_class limit_determinant(const mpq_class& x)
{
    return det3(limit_grid(x));
}

mpq_class limit_factorization(const mpq_class& x)
{
    mpq_class cubic = x * x * x - x * x - x - 1;
    return 1681 * cubic * cubic;
}

CharEqLimitResult char_eq_limit_check(Precision p, std::uint64_t seed)
{
    RootSet roots = compute_roots(p);
    APNum residual = abs(det3(limit_grid(roots.alpha)));

    std::vector<mpq_class> points{mpq_class(0), mpq_class(1), mpq_class(-1), mpq_class(2), mpq_class(1, 2)};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> numerator(-50, 50);
    std::uniform_int_distribution<long> denominator(1, 20);
    for (int i = 0; i < 5; ++i) {
        mpq_class q(numerator(rng), denominator(rng));
        q.canonicalize();
        points.push_back(q);
    }
    bool holds = true;
    for (const auto& x : points)
        holds = holds && limit_determinant(x) == limit_factorization(x);
    return {std::move(residual), std::move(points), holds};
}

} // namespace trib
