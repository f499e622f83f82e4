#pragma once

/**
 * @file identities.hpp
 * @brief Registry of every identity over T, K and H as a range-parameterized check.
 *
 * Each identity evaluates, at every index of a range, a relation between the
 * sequence values and an independent route (matrix powers, closed forms, the
 * root-based numeric layer). Sequence values are read from a SequenceTable so
 * that a single value can be perturbed in a sandboxed run; a correct suite must
 * notice.
 *
 * Identities have heterogeneous index domains. A requested range is clamped to
 * the identity's domain and the clamping is recorded in the report note. An
 * empty clamped range passes vacuously with checked = 0 and hi = lo - 1.
 */

#include "trib/apnum.hpp"
#include "trib/sequence.hpp"
#include "trib/zint.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trib {

enum class IdentityId : std::uint8_t {
    TribRecurrence,
    QPowerClosed,
    CassiniT,
    BinetT,
    QuadraticApprox,
    HRecurrence,
    HEqKMinusT,
    HFromT,
    K41Relation,
    HPowerClosed,
    CubicIdentity41,
    StatePropagation,
    BinetHDiag,
    CardanoRoots,
    CharPolyHn,
    RatioLimit,
    CharEqLimit,
};

inline constexpr std::size_t identity_count = 17;

struct IdentityInfo {
    IdentityId id;
    std::string_view name;
    /// smallest index the identity is checked at; unbounded below when absent
    std::optional<Index> min_index;
    bool numeric;
    std::string_view checks;
};

inline constexpr std::array<IdentityInfo, identity_count> identity_registry{{
    {IdentityId::TribRecurrence, "trib-recurrence", std::nullopt, false,
     "T(n) = T(n-1) + T(n-2) + T(n-3) with T(0..2) = 0, 1, 1"},
    {IdentityId::QPowerClosed, "q-power-closed", 0, false,
     "Q^n by binary powering equals its closed form in T(n+1) .. T(n-3)"},
    {IdentityId::CassiniT, "cassini-t", 3, false,
     "cubic form in T(n+1) .. T(n-3) equals det(Q^n) = 1"},
    {IdentityId::BinetT, "binet-t", 0, true,
     "root-form Tribonacci value rounds to T(n) with margin < 1/4"},
    {IdentityId::QuadraticApprox, "quadratic-approx", 2, true,
     "r^(n+1) = T(n) r^2 + (T(n-1) + T(n-2)) r + T(n-1) for each root, and the alpha-linear relation"},
    {IdentityId::HRecurrence, "h-recurrence", std::nullopt, false,
     "H(n) = H(n-1) + H(n-2) + H(n-3) with H(0..2) = 3, 0, 2"},
    {IdentityId::HEqKMinusT, "h-eq-k-minus-t", std::nullopt, false,
     "H(n) = K(n) - T(n)"},
    {IdentityId::HFromT, "h-from-t", 1, false,
     "H(n) = 3T(n+1) - 3T(n) - T(n-1)"},
    {IdentityId::K41Relation, "k41-relation", std::nullopt, false,
     "9H(n+2) - 2H(n+1) + 35H(n) = 41 K(n)"},
    {IdentityId::HPowerClosed, "h-power-closed", 0, false,
     "H^n by binary powering equals the 1/41 closed form in H(n+1) .. H(n-3)"},
    {IdentityId::CubicIdentity41, "cubic-identity-41", 3, false,
     "cubic form in H(n+1) .. H(n-3) equals 41"},
    {IdentityId::StatePropagation, "state-propagation", 0, false,
     "H^n (H(2), H(1), H(0)) = (H(n+2), H(n+1), H(n))"},
    {IdentityId::BinetHDiag, "binet-h-diag", 0, true,
     "diagonalization and power-sum root forms both round to H(n) and agree"},
    {IdentityId::CardanoRoots, "cardano-roots", 1, true,
     "Cardano roots of y^3 - K(n) y^2 + R(n) y - 1 are alpha^n, omega1^n, omega2^n"},
    {IdentityId::CharPolyHn, "char-poly-hn", 1, false,
     "trace(H^n) = K(n), principal minor sum = R(n), det(H^n) = 1"},
    {IdentityId::RatioLimit, "ratio-limit", 2, true,
     "|H(n+1)/H(n) - alpha| stays under the geometric envelope in |omega1|^n"},
    {IdentityId::CharEqLimit, "char-eq-limit", std::nullopt, true,
     "det of the limit grid equals 1681 (x^3 - x^2 - x - 1)^2 at x = n, and vanishes at alpha"},
}};

namespace detail {
constexpr bool registry_is_ordered()
{
    for (std::size_t i = 0; i < identity_registry.size(); ++i)
        if (static_cast<std::size_t>(identity_registry[i].id) != i)
            return false;
    return static_cast<std::size_t>(IdentityId::CharEqLimit) + 1 == identity_count;
}
} // namespace detail

static_assert(detail::registry_is_ordered(), "identity registry must list every IdentityId once, in order");

inline const IdentityInfo& info(IdentityId id)
{
    return identity_registry[static_cast<std::size_t>(id)];
}

inline std::string_view to_string(IdentityId id)
{
    return info(id).name;
}

std::optional<IdentityId> parse_identity(std::string_view name);

enum class Status { Pass, Fail };

std::string_view to_string(Status s);

struct Failure {
    Index n = 0;
    std::string expected;
    std::string actual;

    bool operator==(const Failure&) const = default;
};

struct VerificationReport {
    IdentityId id = IdentityId::TribRecurrence;
    Index lo = 0;
    Index hi = 0;
    std::optional<long> bits;
    Status status = Status::Pass;
    std::uint64_t checked = 0;
    std::optional<Failure> first_failure;
    std::string note;

    bool operator==(const VerificationReport&) const = default;
};

/// Adds delta to one sequence value inside a verification run.
struct Perturbation {
    SeqId seq = SeqId::H;
    Index index = 0;
    long delta = 1;
};

/// Values of T, K, H over [lo, hi], optionally with one value perturbed.
class SequenceTable {
public:
    SequenceTable(Index lo, Index hi, const std::optional<Perturbation>& perturbation = std::nullopt);

    Index lo() const { return lo_; }
    Index hi() const { return hi_; }

    /// Throws std::out_of_range outside [lo, hi].
    const Zint& at(SeqId id, Index n) const;
    Stencil stencil(SeqId id, Index n) const;

private:
    Index lo_;
    Index hi_;
    std::array<std::vector<Zint>, 3> values_;
};

/// Extra indices the suite reads on either side of a verified range.
inline constexpr Index table_margin = 4;

struct VerifyOptions {
    /// floor for numeric identities; 128 bits when absent
    std::optional<Precision> precision;
    std::optional<Perturbation> perturbation;
};

/// Throws InvalidRange when lo > hi.
VerificationReport verify(IdentityId id, Index lo, Index hi, const VerifyOptions& options = {});
/// Throws std::invalid_argument for an unknown name.
VerificationReport verify(std::string_view name, Index lo, Index hi, const VerifyOptions& options = {});

/// Same check against a caller-built table covering [lo - 4, hi + 4].
VerificationReport verify_with_table(IdentityId id, Index lo, Index hi, Precision precision,
                                     const SequenceTable& table);

/// Every identity over its clamped share of [lo, hi], in registry order.
/// Identities run concurrently; the result does not depend on scheduling.
std::vector<VerificationReport> verify_all(Index lo, Index hi, Precision precision,
                                           const std::optional<Perturbation>& perturbation = std::nullopt);

bool all_pass(const std::vector<VerificationReport>& reports);

} // namespace trib
