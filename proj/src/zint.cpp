#include "trib/zint.hpp"

#include "trib/errors.hpp"

#include <string>

namespace trib {

std::size_t decimal_digits(const Zint& z)
{
    // mpz_sizeinbase may overshoot by one for base 10
    std::size_t digits = mpz_sizeinbase(z.get_mpz_t(), 10);
    if (digits > 1) {
        Zint magnitude = abs(z);
        Zint bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), 10, digits - 1);
        if (magnitude < bound)
            --digits;
    }
    return digits;
}

Zint exact_quotient(const Zint& n, long d, const char* what)
{
    if (!mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d < 0 ? -d : d)))
        throw InconsistencyError(std::string(what) + ": " + n.get_str() + " is not divisible by " +
                                 std::to_string(d));
    Zint q;
    mpz_divexact_ui(q.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d < 0 ? -d : d));
    if (d < 0)
        q = -q;
    return q;
}

} // namespace trib
