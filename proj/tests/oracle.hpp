#pragma once

// Reference implementations for the tests. Everything here is deliberately
// naive and built on boost::multiprecision so that it shares no code and no
// arithmetic library with the implementation under test.

#include "trib/zint.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

inline std::string str(const BigInt& v) { return v.str(); }
inline std::string str(const trib::Zint& v) { return v.get_str(); }

/// x(lo..hi) by stepping the recurrence from the three seeds, backwards
/// for negative indices. Indexed by n - lo.
inline std::vector<BigInt> sequence(std::array<long, 3> seeds, std::int64_t lo, std::int64_t hi)
{
    std::map<std::int64_t, BigInt> v;
    v[0] = seeds[0];
    v[1] = seeds[1];
    v[2] = seeds[2];
    for (std::int64_t n = 3; n <= hi; ++n)
        v[n] = v[n - 1] + v[n - 2] + v[n - 3];
    for (std::int64_t n = -1; n >= lo; --n)
        v[n] = v[n + 3] - v[n + 2] - v[n + 1];
    std::vector<BigInt> out;
    for (std::int64_t n = lo; n <= hi; ++n)
        out.push_back(v[n]);
    return out;
}

inline std::vector<BigInt> t_values(std::int64_t lo, std::int64_t hi) { return sequence({0, 1, 1}, lo, hi); }
inline std::vector<BigInt> k_values(std::int64_t lo, std::int64_t hi) { return sequence({3, 1, 3}, lo, hi); }
inline std::vector<BigInt> h_values(std::int64_t lo, std::int64_t hi) { return sequence({3, 0, 2}, lo, hi); }

inline BigInt h(std::int64_t n) { return h_values(std::min<std::int64_t>(n, 0), std::max<std::int64_t>(n, 2))[n - std::min<std::int64_t>(n, 0)]; }
inline BigInt t(std::int64_t n) { return t_values(std::min<std::int64_t>(n, 0), std::max<std::int64_t>(n, 2))[n - std::min<std::int64_t>(n, 0)]; }
inline BigInt k(std::int64_t n) { return k_values(std::min<std::int64_t>(n, 0), std::max<std::int64_t>(n, 2))[n - std::min<std::int64_t>(n, 0)]; }

using Mat = std::array<BigInt, 9>;

inline Mat mul(const Mat& a, const Mat& b)
{
    Mat c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            BigInt s = 0;
            for (int l = 0; l < 3; ++l)
                s += a[i * 3 + l] * b[l * 3 + j];
            c[i * 3 + j] = s;
        }
    return c;
}

/// Generator powers [0, count) by repeated multiplication.
inline std::vector<Mat> generator_powers(int count)
{
    const Mat g{1, 1, 1, 1, 0, 0, 0, 1, 0};
    std::vector<Mat> out;
    Mat m{1, 0, 0, 0, 1, 0, 0, 0, 1};
    for (int i = 0; i < count; ++i) {
        out.push_back(m);
        m = mul(m, g);
    }
    return out;
}

inline BigInt det(const Mat& m)
{
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

/// Real root of x^3 - x^2 - x - 1 by bisection on [1, 2].
inline Float alpha()
{
    Float lo = 1, hi = 2;
    for (int i = 0; i < 220; ++i) {
        Float mid = (lo + hi) / 2;
        if (mid * mid * mid - mid * mid - mid - 1 > 0)
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / 2;
}

/// Seeded generator for property tests.
inline std::mt19937_64 rng(std::uint64_t salt = 0)
{
    return std::mt19937_64(0x5eed'0000'0000'0001ULL ^ salt);
}

} // namespace oracle
