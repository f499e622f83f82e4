#pragma once

// Arbitrary-precision real and complex values over MPFR.
//
// Every value carries its own precision in bits. Binary operations produce a
// result at the larger of the two operand precisions, rounded to nearest.

#include "trib/zint.hpp"

#include <cstdio>
#include <mpfr.h>

#include <string>

namespace trib {

/// Working precision in binary digits; at least 64.
class Precision {
public:
    static constexpr mpfr_prec_t min_bits = 64;

    explicit Precision(mpfr_prec_t bits);

    mpfr_prec_t bits() const { return bits_; }

    bool operator==(const Precision&) const = default;

private:
    mpfr_prec_t bits_;
};

class APNum {
public:
    explicit APNum(mpfr_prec_t bits);
    APNum(long value, mpfr_prec_t bits);
    APNum(const Zint& value, mpfr_prec_t bits);
    APNum(const mpq_class& value, mpfr_prec_t bits);
    /// Decimal or scientific literal, e.g. "1.839286755214161".
    APNum(const std::string& literal, mpfr_prec_t bits);

    APNum(const APNum& other);
    APNum(APNum&& other) noexcept;
    APNum& operator=(const APNum& other);
    APNum& operator=(APNum&& other) noexcept;
    ~APNum();

    mpfr_prec_t bits() const { return mpfr_get_prec(value_); }

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    APNum& operator+=(const APNum& rhs);
    APNum& operator-=(const APNum& rhs);
    APNum& operator*=(const APNum& rhs);
    APNum& operator/=(const APNum& rhs);
    APNum& operator*=(long rhs);
    APNum& operator/=(long rhs);
    APNum& operator+=(long rhs);
    APNum& operator-=(long rhs);

    APNum operator-() const;

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    /// Nearest integer (ties away from zero).
    Zint round() const;
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Binary exponent e with 2^(e-1) <= |x| < 2^e; large negative for zero.
    long exponent() const;

    /// Fixed-point decimal with the given number of significant digits.
    std::string to_fixed(std::size_t significant_digits) const;
    /// d.ddde±xx with the given number of significant digits.
    std::string to_sci(std::size_t significant_digits) const;

private:
    mpfr_t value_;
};

APNum operator+(APNum lhs, const APNum& rhs);
APNum operator-(APNum lhs, const APNum& rhs);
APNum operator*(APNum lhs, const APNum& rhs);
APNum operator/(APNum lhs, const APNum& rhs);
APNum operator*(APNum lhs, long rhs);
APNum operator*(long lhs, APNum rhs);
APNum operator/(APNum lhs, long rhs);
APNum operator+(APNum lhs, long rhs);
APNum operator+(long lhs, APNum rhs);
APNum operator-(APNum lhs, long rhs);
APNum operator-(long lhs, const APNum& rhs);

int compare(const APNum& a, const APNum& b);
inline bool operator<(const APNum& a, const APNum& b) { return compare(a, b) < 0; }
inline bool operator>(const APNum& a, const APNum& b) { return compare(a, b) > 0; }
inline bool operator<=(const APNum& a, const APNum& b) { return compare(a, b) <= 0; }
inline bool operator>=(const APNum& a, const APNum& b) { return compare(a, b) >= 0; }
inline bool operator==(const APNum& a, const APNum& b) { return compare(a, b) == 0; }

APNum abs(APNum x);
APNum sqrt(APNum x);
/// Real cube root; defined for negative arguments.
APNum cbrt(APNum x);
APNum pow(APNum base, unsigned long exponent);
APNum log2(APNum x);
APNum max(const APNum& a, const APNum& b);
/// 2^e at the given precision.
APNum exp2_int(long e, mpfr_prec_t bits);

class APComplex {
public:
    explicit APComplex(mpfr_prec_t bits) : re_(bits), im_(bits) {}
    APComplex(APNum re, APNum im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit APComplex(APNum re);

    const APNum& re() const { return re_; }
    const APNum& im() const { return im_; }
    mpfr_prec_t bits() const { return std::max(re_.bits(), im_.bits()); }

    APComplex& operator+=(const APComplex& rhs);
    APComplex& operator-=(const APComplex& rhs);
    APComplex& operator*=(const APComplex& rhs);
    APComplex& operator/=(const APComplex& rhs);
    APComplex& operator*=(const APNum& rhs);
    APComplex& operator*=(long rhs);
    APComplex operator-() const { return {-re_, -im_}; }

    /// "re + im i" with the given significant digits per component.
    std::string to_string(std::size_t significant_digits) const;

private:
    APNum re_;
    APNum im_;
};

APComplex operator+(APComplex lhs, const APComplex& rhs);
APComplex operator-(APComplex lhs, const APComplex& rhs);
APComplex operator*(APComplex lhs, const APComplex& rhs);
APComplex operator/(APComplex lhs, const APComplex& rhs);
APComplex operator*(APComplex lhs, const APNum& rhs);
APComplex operator*(const APNum& lhs, APComplex rhs);
APComplex operator*(APComplex lhs, long rhs);
APComplex operator*(long lhs, APComplex rhs);
APComplex operator+(APComplex lhs, const APNum& rhs);
APComplex operator+(const APNum& lhs, APComplex rhs);
APComplex operator-(const APNum& lhs, const APComplex& rhs);

APComplex conj(const APComplex& z);
/// |z|^2
APNum norm(const APComplex& z);
APNum abs(const APComplex& z);
APComplex pow(const APComplex& base, unsigned long exponent);

} // namespace trib
