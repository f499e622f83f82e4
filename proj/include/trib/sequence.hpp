#pragma once

/**
 * @file sequence.hpp
 * @brief Exact values of the Tribonacci family over all integer indices.
 *
 * Three sequences share the recurrence X(n) = X(n-1) + X(n-2) + X(n-3):
 *
 *   T  Tribonacci          0, 1, 1, 2, 4, 7, 13, ...
 *   K  Tribonacci-Lucas    3, 1, 3, 7, 11, 21, ...   (power sums of the roots)
 *   H  generalized         3, 0, 2, 5, 7, 14, 26, 47, ...
 *
 * Negative indices use the reversed recurrence X(n-1) = X(n+2) - X(n+1) - X(n),
 * giving for example H(-1) = -1, H(-2) = -2, H(-3) = 6.
 */

#include "trib/zint.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace trib {

enum class SeqId { T, K, H };

inline constexpr std::array<SeqId, 3> all_sequences{SeqId::T, SeqId::K, SeqId::H};

std::string_view to_string(SeqId id);
std::optional<SeqId> parse_seq_id(std::string_view text);

/// X(0), X(1), X(2).
std::array<long, 3> initial_terms(SeqId id);

/// Column (X(n+2), X(n+1), X(n)).
struct StateVector {
    Zint top;
    Zint mid;
    Zint bot;

    bool operator==(const StateVector&) const = default;
};

/// Five consecutive values X(n+1) .. X(n-3), the reach of the quadratic and
/// cubic forms over the sequence.
struct Stencil {
    Zint next;
    Zint cur;
    Zint prev1;
    Zint prev2;
    Zint prev3;

    bool operator==(const Stencil&) const = default;
};

Zint seq_value(SeqId id, Index n);

/// Values X(lo) .. X(hi) in a single linear pass. Throws InvalidRange if lo > hi.
std::vector<Zint> seq_range(SeqId id, Index lo, Index hi);

Stencil stencil(SeqId id, Index n);

/// Stencil at n recovered from the state (X(n+2), X(n+1), X(n)).
Stencil stencil_from_state(const StateVector& s);

/// One application of the generating matrix: (top+mid+bot, top, mid).
StateVector advance_state(const StateVector& v);

/// (H(2), H(1), H(0)).
StateVector initial_state();

/// K(n) - T(n).
Zint h_from_k_t(Index n);

/// 3T(n+1) - 3T(n) - T(n-1); defined for n >= 1 only (DomainError otherwise).
Zint h_from_t(Index n);

/// 9H(n+2) - 2H(n+1) + 35H(n), always a multiple of 41.
Zint k41_numerator(const Zint& h_n2, const Zint& h_n1, const Zint& h_n);

/// K(n) recovered as k41_numerator(...) / 41.
Zint k_from_h(Index n);

/// Numerator of R(n): the quadratic form in H(n+1) .. H(n-3) whose quotient
/// by 41 is the sum of principal 2x2 minors of H^n.
Zint r_numerator(const Stencil& h);

/// R(n) = r_numerator(stencil(H, n)) / 41.
Zint r_value(Index n);

} // namespace trib
