#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace trib {

/// Arbitrary-precision signed integer used for every exact value.
using Zint = mpz_class;

/// Signed sequence index.
using Index = std::int64_t;

inline std::string to_string(const Zint& z) { return z.get_str(); }

/// Number of decimal digits of |z| (0 has one digit).
std::size_t decimal_digits(const Zint& z);

/// Exact division by d; throws InconsistencyError when d does not divide n.
Zint exact_quotient(const Zint& n, long d, const char* what);

} // namespace trib
