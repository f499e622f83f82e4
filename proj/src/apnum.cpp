#include "trib/apnum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace trib {

namespace {

constexpr mpfr_rnd_t rnd = MPFR_RNDN;

mpfr_prec_t wider(const APNum& a, const APNum& b)
{
    return std::max(a.bits(), b.bits());
}

// Promotes lhs to the precision of rhs when rhs is wider.
void widen(APNum& lhs, const APNum& rhs)
{
    if (rhs.bits() > lhs.bits())
        mpfr_prec_round(lhs.get(), rhs.bits(), rnd);
}

struct DecimalDigits {
    std::string digits;
    mpfr_exp_t exponent = 0; // value = 0.digits * 10^exponent
    bool negative = false;
};

DecimalDigits decimal_digits_of(mpfr_srcptr x, std::size_t n)
{
    DecimalDigits out;
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, std::max<std::size_t>(n, 2), x, rnd);
    std::string s(raw);
    mpfr_free_str(raw);
    if (!s.empty() && s[0] == '-') {
        out.negative = true;
        s.erase(0, 1);
    }
    out.digits = s.substr(0, std::max<std::size_t>(n, 1));
    out.exponent = exp;
    return out;
}

} // namespace

Precision::Precision(mpfr_prec_t bits) : bits_(bits)
{
    if (bits < min_bits)
        throw std::invalid_argument("precision must be at least 64 bits, got " + std::to_string(bits));
}

APNum::APNum(mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

APNum::APNum(long value, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, value, rnd);
}

APNum::APNum(const Zint& value, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

APNum::APNum(const mpq_class& value, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

APNum::APNum(const std::string& literal, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    if (mpfr_set_str(value_, literal.c_str(), 10, rnd) != 0) {
        mpfr_clear(value_);
        throw std::invalid_argument("not a decimal number: " + literal);
    }
}

APNum::APNum(const APNum& other)
{
    mpfr_init2(value_, other.bits());
    mpfr_set(value_, other.value_, rnd);
}

APNum::APNum(APNum&& other) noexcept
{
    // leave `other` valid (2-bit zero) so its destructor stays trivial to reason about
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

APNum& APNum::operator=(const APNum& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.bits());
        mpfr_set(value_, other.value_, rnd);
    }
    return *this;
}

APNum& APNum::operator=(APNum&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

APNum::~APNum()
{
    mpfr_clear(value_);
}

APNum& APNum::operator+=(const APNum& rhs)
{
    widen(*this, rhs);
    mpfr_add(value_, value_, rhs.value_, rnd);
    return *this;
}

APNum& APNum::operator-=(const APNum& rhs)
{
    widen(*this, rhs);
    mpfr_sub(value_, value_, rhs.value_, rnd);
    return *this;
}

APNum& APNum::operator*=(const APNum& rhs)
{
    widen(*this, rhs);
    mpfr_mul(value_, value_, rhs.value_, rnd);
    return *this;
}

APNum& APNum::operator/=(const APNum& rhs)
{
    widen(*this, rhs);
    mpfr_div(value_, value_, rhs.value_, rnd);
    return *this;
}

APNum& APNum::operator*=(long rhs)
{
    mpfr_mul_si(value_, value_, rhs, rnd);
    return *this;
}

APNum& APNum::operator/=(long rhs)
{
    mpfr_div_si(value_, value_, rhs, rnd);
    return *this;
}

APNum& APNum::operator+=(long rhs)
{
    mpfr_add_si(value_, value_, rhs, rnd);
    return *this;
}

APNum& APNum::operator-=(long rhs)
{
    mpfr_sub_si(value_, value_, rhs, rnd);
    return *this;
}

APNum APNum::operator-() const
{
    APNum out(*this);
    mpfr_neg(out.value_, out.value_, rnd);
    return out;
}

Zint APNum::round() const
{
    if (!is_finite())
        throw std::domain_error("APNum::round: value is not finite");
    APNum r(bits());
    mpfr_round(r.value_, value_);
    Zint out;
    mpfr_get_z(out.get_mpz_t(), r.value_, rnd);
    return out;
}

long APNum::exponent() const
{
    if (mpfr_zero_p(value_))
        return MPFR_EMIN_DEFAULT;
    return static_cast<long>(mpfr_get_exp(value_));
}

std::string APNum::to_fixed(std::size_t significant_digits) const
{
    if (mpfr_zero_p(value_))
        return "0";
    if (!is_finite())
        return mpfr_nan_p(value_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    DecimalDigits d = decimal_digits_of(value_, significant_digits);
    std::string out = d.negative ? "-" : "";
    auto len = static_cast<mpfr_exp_t>(d.digits.size());
    if (d.exponent <= 0) {
        out += "0.";
        out.append(static_cast<std::size_t>(-d.exponent), '0');
        out += d.digits;
    } else if (d.exponent >= len) {
        out += d.digits;
        out.append(static_cast<std::size_t>(d.exponent - len), '0');
    } else {
        out += d.digits.substr(0, static_cast<std::size_t>(d.exponent));
        out += '.';
        out += d.digits.substr(static_cast<std::size_t>(d.exponent));
    }
    return out;
}

std::string APNum::to_sci(std::size_t significant_digits) const
{
    if (mpfr_zero_p(value_))
        return "0";
    if (!is_finite())
        return to_fixed(1);
    DecimalDigits d = decimal_digits_of(value_, significant_digits);
    std::string out = d.negative ? "-" : "";
    out += d.digits[0];
    if (d.digits.size() > 1) {
        out += '.';
        out += d.digits.substr(1);
    }
    long e = static_cast<long>(d.exponent) - 1;
    out += (e < 0 ? "e-" : "e+");
    out += std::to_string(e < 0 ? -e : e);
    return out;
}

APNum operator+(APNum lhs, const APNum& rhs) { return lhs += rhs; }
APNum operator-(APNum lhs, const APNum& rhs) { return lhs -= rhs; }
APNum operator*(APNum lhs, const APNum& rhs) { return lhs *= rhs; }
APNum operator/(APNum lhs, const APNum& rhs) { return lhs /= rhs; }
APNum operator*(APNum lhs, long rhs) { return lhs *= rhs; }
APNum operator*(long lhs, APNum rhs) { return rhs *= lhs; }
APNum operator/(APNum lhs, long rhs) { return lhs /= rhs; }
APNum operator+(APNum lhs, long rhs) { return lhs += rhs; }
APNum operator+(long lhs, APNum rhs) { return rhs += lhs; }
APNum operator-(APNum lhs, long rhs) { return lhs -= rhs; }

APNum operator-(long lhs, const APNum& rhs)
{
    APNum out(lhs, rhs.bits());
    return out -= rhs;
}

int compare(const APNum& a, const APNum& b)
{
    return mpfr_cmp(a.get(), b.get());
}

APNum abs(APNum x)
{
    mpfr_abs(x.get(), x.get(), rnd);
    return x;
}

APNum sqrt(APNum x)
{
    mpfr_sqrt(x.get(), x.get(), rnd);
    return x;
}

APNum cbrt(APNum x)
{
    mpfr_cbrt(x.get(), x.get(), rnd);
    return x;
}

APNum pow(APNum base, unsigned long exponent)
{
    mpfr_pow_ui(base.get(), base.get(), exponent, rnd);
    return base;
}

APNum log2(APNum x)
{
    mpfr_log2(x.get(), x.get(), rnd);
    return x;
}

APNum max(const APNum& a, const APNum& b)
{
    return a < b ? b : a;
}

APNum exp2_int(long e, mpfr_prec_t bits)
{
    APNum out(1, bits);
    mpfr_mul_2si(out.get(), out.get(), e, rnd);
    return out;
}

APComplex::APComplex(APNum re) : re_(std::move(re)), im_(re_.bits()) {}

APComplex& APComplex::operator+=(const APComplex& rhs)
{
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

APComplex& APComplex::operator-=(const APComplex& rhs)
{
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

APComplex& APComplex::operator*=(const APComplex& rhs)
{
    APNum re = re_ * rhs.re_ - im_ * rhs.im_;
    APNum im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

APComplex& APComplex::operator/=(const APComplex& rhs)
{
    APNum den = norm(rhs);
    APNum re = (re_ * rhs.re_ + im_ * rhs.im_) / den;
    APNum im = (im_ * rhs.re_ - re_ * rhs.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

APComplex& APComplex::operator*=(const APNum& rhs)
{
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

APComplex& APComplex::operator*=(long rhs)
{
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

std::string APComplex::to_string(std::size_t significant_digits) const
{
    std::string out = re_.to_fixed(significant_digits);
    if (im_.sign() < 0)
        out += " - " + abs(im_).to_fixed(significant_digits) + "i";
    else
        out += " + " + im_.to_fixed(significant_digits) + "i";
    return out;
}

APComplex operator+(APComplex lhs, const APComplex& rhs) { return lhs += rhs; }
APComplex operator-(APComplex lhs, const APComplex& rhs) { return lhs -= rhs; }
APComplex operator*(APComplex lhs, const APComplex& rhs) { return lhs *= rhs; }
APComplex operator/(APComplex lhs, const APComplex& rhs) { return lhs /= rhs; }
APComplex operator*(APComplex lhs, const APNum& rhs) { return lhs *= rhs; }
APComplex operator*(const APNum& lhs, APComplex rhs) { return rhs *= lhs; }
APComplex operator*(APComplex lhs, long rhs) { return lhs *= rhs; }
APComplex operator*(long lhs, APComplex rhs) { return rhs *= lhs; }

APComplex operator+(APComplex lhs, const APNum& rhs)
{
    return {lhs.re() + rhs, lhs.im()};
}

APComplex operator+(const APNum& lhs, APComplex rhs)
{
    return std::move(rhs) + lhs;
}

APComplex operator-(const APNum& lhs, const APComplex& rhs)
{
    return {lhs - rhs.re(), -rhs.im()};
}

APComplex conj(const APComplex& z)
{
    return {z.re(), -z.im()};
}

APNum norm(const APComplex& z)
{
    return z.re() * z.re() + z.im() * z.im();
}

APNum abs(const APComplex& z)
{
    APNum out(wider(z.re(), z.im()));
    mpfr_hypot(out.get(), z.re().get(), z.im().get(), rnd);
    return out;
}

APComplex pow(const APComplex& base, unsigned long exponent)
{
    APComplex result(APNum(1, base.bits()));
    APComplex square = base;
    while (exponent != 0) {
        if (exponent & 1u)
            result *= square;
        exponent >>= 1;
        if (exponent != 0)
            square *= square;
    }
    return result;
}

} // namespace trib
