#include "trib/identities.hpp"

#include "trib/binet.hpp"
#include "trib/errors.hpp"
#include "trib/matrix.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace trib {

namespace {

struct Outcome {
    std::uint64_t checked = 0;
    std::optional<Failure> failure;
    long bits = 0;
};

using Check = std::function<std::optional<Failure>(Index)>;

// Runs `check` at every index until the first failure.
Outcome run_each(Index lo, Index hi, const Check& check)
{
    Outcome out;
    for (Index n = lo; n <= hi; ++n) {
        ++out.checked;
        if (auto f = check(n)) {
            out.failure = std::move(f);
            break;
        }
    }
    return out;
}

std::optional<Failure> expect_equal(Index n, const Zint& expected, const Zint& actual)
{
    if (expected == actual)
        return std::nullopt;
    return Failure{n, expected.get_str(), actual.get_str()};
}

std::optional<Failure> expect_equal(Index n, const Mat3& expected, const Mat3& actual)
{
    if (expected == actual)
        return std::nullopt;
    return Failure{n, expected.to_string(), actual.to_string()};
}

std::string state_string(const StateVector& v)
{
    return "(" + v.top.get_str() + "," + v.mid.get_str() + "," + v.bot.get_str() + ")";
}

constexpr std::size_t shown_digits = 20;

std::optional<Failure> expect_below(Index n, const APNum& value, const APNum& bound, const std::string& what)
{
    if (value <= bound)
        return std::nullopt;
    return Failure{n, what + " <= " + bound.to_sci(shown_digits), value.to_sci(shown_digits)};
}

mpfr_prec_t round_up_64(long bits)
{
    return static_cast<mpfr_prec_t>((bits + 63) / 64 * 64);
}

// Root sets keyed by precision, computed on first use.
class RootCache {
public:
    const RootSet& at(mpfr_prec_t bits)
    {
        auto it = cache_.find(bits);
        if (it == cache_.end())
            it = cache_.emplace(bits, compute_roots(Precision(bits))).first;
        return it->second;
    }

private:
    std::map<mpfr_prec_t, RootSet> cache_;
};

// Running power base^n for increasing n.
class PowerWalk {
public:
    PowerWalk(Mat3 base, Index start) : base_(std::move(base)), power_(mat_pow(base_, start)), n_(start) {}

    const Mat3& at(Index n)
    {
        while (n_ < n) {
            power_ = power_ * base_;
            ++n_;
        }
        return power_;
    }

private:
    Mat3 base_;
    Mat3 power_;
    Index n_;
};

Outcome run_trib_recurrence(const SequenceTable& t, Index lo, Index hi)
{
    auto init = initial_terms(SeqId::T);
    return run_each(lo, hi, [&](Index n) -> std::optional<Failure> {
        if (n >= 0 && n <= 2)
            if (auto f = expect_equal(n, Zint(init[static_cast<std::size_t>(n)]), t.at(SeqId::T, n)))
                return f;
        Zint sum = t.at(SeqId::T, n - 1) + t.at(SeqId::T, n - 2) + t.at(SeqId::T, n - 3);
        return expect_equal(n, sum, t.at(SeqId::T, n));
    });
}

Outcome run_h_recurrence(const SequenceTable& t, Index lo, Index hi)
{
    auto init = initial_terms(SeqId::H);
    return run_each(lo, hi, [&](Index n) -> std::optional<Failure> {
        if (n >= 0 && n <= 2)
            if (auto f = expect_equal(n, Zint(init[static_cast<std::size_t>(n)]), t.at(SeqId::H, n)))
                return f;
        Zint sum = t.at(SeqId::H, n - 1) + t.at(SeqId::H, n - 2) + t.at(SeqId::H, n - 3);
        return expect_equal(n, sum, t.at(SeqId::H, n));
    });
}

Outcome run_q_power_closed(const SequenceTable& t, Index lo, Index hi)
{
    if (lo > hi)
        return {};
    PowerWalk walk(companion_matrix(), lo);
    return run_each(lo, hi, [&](Index n) {
        return expect_equal(n, walk.at(n), q_power_closed(t.stencil(SeqId::T, n)));
    });
}

Outcome run_cassini_t(const SequenceTable& t, Index lo, Index hi)
{
    return run_each(lo, hi, [&](Index n) { return expect_equal(n, Zint(1), cubic_form(t.stencil(SeqId::T, n))); });
}

Outcome run_cubic_identity(const SequenceTable& t, Index lo, Index hi)
{
    return run_each(lo, hi, [&](Index n) { return expect_equal(n, Zint(41), cubic_form(t.stencil(SeqId::H, n))); });
}

Outcome run_h_eq_k_minus_t(const SequenceTable& t, Index lo, Index hi)
{
    return run_each(lo, hi, [&](Index n) {
        return expect_equal(n, Zint(t.at(SeqId::K, n) - t.at(SeqId::T, n)), t.at(SeqId::H, n));
    });
}

Outcome run_h_from_t(const SequenceTable& t, Index lo, Index hi)
{
    return run_each(lo, hi, [&](Index n) {
        Zint v = 3 * t.at(SeqId::T, n + 1) - 3 * t.at(SeqId::T, n) - t.at(SeqId::T, n - 1);
        return expect_equal(n, v, t.at(SeqId::H, n));
    });
}

Outcome run_k41(const SequenceTable& t, Index lo, Index hi)
{
    return run_each(lo, hi, [&](Index n) -> std::optional<Failure> {
        Zint num = k41_numerator(t.at(SeqId::H, n + 2), t.at(SeqId::H, n + 1), t.at(SeqId::H, n));
        if (!mpz_divisible_ui_p(num.get_mpz_t(), 41))
            return Failure{n, "multiple of 41", num.get_str()};
        Zint q = num / 41;
        return expect_equal(n, t.at(SeqId::K, n), q);
    });
}

Outcome run_h_power_closed(const SequenceTable& t, Index lo, Index hi)
{
    if (lo > hi)
        return {};
    PowerWalk walk(generating_matrix(), lo);
    return run_each(lo, hi, [&](Index n) -> std::optional<Failure> {
        ScaledMat3 closed = h_power_closed(t.stencil(SeqId::H, n));
        try {
            return expect_equal(n, walk.at(n), closed.canonical());
        } catch (const InconsistencyError&) {
            return Failure{n, "numerator divisible by 41", closed.numerator.to_string()};
        }
    });
}

Outcome run_state_propagation(const SequenceTable& t, Index lo, Index hi)
{
    if (lo > hi)
        return {};
    PowerWalk walk(generating_matrix(), lo);
    StateVector start = initial_state();
    return run_each(lo, hi, [&](Index n) -> std::optional<Failure> {
        StateVector propagated = apply(walk.at(n), start);
        StateVector table{t.at(SeqId::H, n + 2), t.at(SeqId::H, n + 1), t.at(SeqId::H, n)};
        if (propagated == table)
            return std::nullopt;
        return Failure{n, state_string(propagated), state_string(table)};
    });
}

Outcome run_char_poly(const SequenceTable& t, Index lo, Index hi)
{
    if (lo > hi)
        return {};
    PowerWalk walk(generating_matrix(), lo);
    return run_each(lo, hi, [&](Index n) -> std::optional<Failure> {
        CharPoly poly = char_poly(walk.at(n));
        Zint r_num = r_numerator(t.stencil(SeqId::H, n));
        if (!mpz_divisible_ui_p(r_num.get_mpz_t(), 41))
            return Failure{n, "R numerator divisible by 41", r_num.get_str()};
        CharPoly expected{-t.at(SeqId::K, n), r_num / 41, Zint(-1)};
        if (poly == expected)
            return std::nullopt;
        auto show = [](const CharPoly& p) {
            return "(" + p.c2.get_str() + "," + p.c1.get_str() + "," + p.c0.get_str() + ")";
        };
        return Failure{n, show(expected), show(poly)};
    });
}

Outcome run_binet_t(const SequenceTable& t, Index lo, Index hi, Precision floor)
{
    RootCache roots;
    long used = 0;
    Outcome out = run_each(lo, hi, [&](Index n) -> std::optional<Failure> {
        mpfr_prec_t bits = round_up_64(adaptive_precision(n, floor).bits());
        for (int attempt = 0;; ++attempt, bits *= 2) {
            try {
                RoundedValue v = binet_t(n, roots.at(bits));
                used = std::max<long>(used, bits);
                return expect_equal(n, t.at(SeqId::T, n), v.nearest);
            } catch (const PrecisionError& e) {
                if (attempt == 4)
                    return Failure{n, t.at(SeqId::T, n).get_str(), e.what()};
            }
        }
    });
    out.bits = used;
    return out;
}

Outcome run_binet_h(const SequenceTable& t, Index lo, Index hi, Precision floor)
{
    RootCache roots;
    long used = 0;
    Outcome out = run_each(lo, hi, [&](Index n) -> std::optional<Failure> {
        mpfr_prec_t bits = round_up_64(adaptive_precision(n, floor).bits());
        for (int attempt = 0;; ++attempt, bits *= 2) {
            try {
                const RootSet& r = roots.at(bits);
                RoundedValue diag = binet_h(n, r, BinetForm::Diagonalization);
                RoundedValue sum = binet_h(n, r, BinetForm::PowerSum);
                used = std::max<long>(used, bits);
                if (auto f = expect_equal(n, t.at(SeqId::H, n), diag.nearest))
                    return f;
                if (auto f = expect_equal(n, t.at(SeqId::H, n), sum.nearest))
                    return f;
                return expect_below(n, abs(diag.value - sum.value), numeric_tolerance(bits, magnitude_bits(n)),
                                    "|diagonalization - power sum|");
            } catch (const PrecisionError& e) {
                if (attempt == 4)
                    return Failure{n, t.at(SeqId::H, n).get_str(), e.what()};
            }
        }
    });
    out.bits = used;
    return out;
}

Outcome run_quadratic(const SequenceTable& t, Index lo, Index hi, Precision floor)
{
    RootCache roots;
    long used = 0;
    Outcome out = run_each(lo, hi, [&](Index n) {
        mpfr_prec_t bits = round_up_64(adaptive_precision(n, floor).bits());
        used = std::max<long>(used, bits);
        QuadraticResidual res = quadratic_approx_check(n, t.at(SeqId::T, n), t.at(SeqId::T, n - 1),
                                                       t.at(SeqId::T, n - 2), roots.at(bits));
        return expect_below(n, res.max(), numeric_tolerance(bits, magnitude_bits(n + 2)), "residual");
    });
    out.bits = used;
    return out;
}

Outcome run_cardano(const SequenceTable& t, Index lo, Index hi, Precision floor)
{
    RootCache roots;
    long used = 0;
    Outcome out = run_each(lo, hi, [&](Index n) -> std::optional<Failure> {
        mpfr_prec_t bits = round_up_64(cardano_precision(n, floor).bits());
        used = std::max<long>(used, bits);
        Zint r_num = r_numerator(t.stencil(SeqId::H, n));
        if (!mpz_divisible_ui_p(r_num.get_mpz_t(), 41))
            return Failure{n, "R numerator divisible by 41", r_num.get_str()};
        const Zint& k = t.at(SeqId::K, n);
        std::optional<CardanoRoots> c;
        try {
            c = cardano_roots_from(k, r_num / 41, Precision(bits));
        } catch (const std::exception& e) {
            return Failure{n, "Delta(n) > 0 and consistent cube-root branches", e.what()};
        }
        const RootSet& rs = roots.at(bits);
        auto un = static_cast<unsigned long>(n);
        APNum alpha_n = pow(rs.alpha, un);
        long mag = magnitude_bits(n);
        APNum relative = abs(c->y1 - alpha_n) / alpha_n;
        if (auto f = expect_below(n, relative, exp2_int(-static_cast<long>(bits) / 4, bits), "|y1 - alpha^n| / alpha^n"))
            return f;
        APComplex sum = c->y2 + c->y3;
        sum = sum + c->y1;
        if (auto f = expect_below(n, abs(sum - APComplex(APNum(k, bits))), numeric_tolerance(bits, mag),
                                  "|y1 + y2 + y3 - K(n)|"))
            return f;
        APComplex product = c->y2 * c->y3;
        product *= c->y1;
        APComplex one(APNum(1, bits));
        APNum tol = numeric_tolerance(bits, 3 * mag);
        if (auto f = expect_below(n, abs(product - one), tol, "|y1 y2 y3 - 1|"))
            return f;
        APComplex w1n = pow(rs.omega1, un);
        APComplex w2n = pow(rs.omega2, un);
        APNum pair_err = max(abs(c->y2 - w1n), abs(c->y3 - w2n));
        APNum swapped_err = max(abs(c->y2 - w2n), abs(c->y3 - w1n));
        const APNum& best = pair_err < swapped_err ? pair_err : swapped_err;
        return expect_below(n, best, tol, "|{y2, y3} - {omega1^n, omega2^n}|");
    });
    out.bits = used;
    return out;
}

Outcome run_ratio_limit(const SequenceTable& t, Index lo, Index hi, Precision floor)
{
    RootCache roots;
    long used = 0;
    Outcome out = run_each(lo, hi, [&](Index n) -> std::optional<Failure> {
        auto bits = round_up_64(std::max<long>(floor.bits(), 2 * magnitude_bits(n) + 64));
        used = std::max<long>(used, bits);
        const Zint& h = t.at(SeqId::H, n);
        if (h == 0)
            return Failure{n, "H(n) != 0", "0"};
        const RootSet& rs = roots.at(bits);
        APNum gap = abs(ratio_of(t.at(SeqId::H, n + 1), h, Precision(bits)) - rs.alpha);
        APNum envelope = ratio_envelope(n, h, rs) * (1 + exp2_int(-static_cast<long>(bits) / 4, bits));
        return expect_below(n, gap, envelope + numeric_tolerance(bits, 0), "|H(n+1)/H(n) - alpha|");
    });
    out.bits = used;
    return out;
}

Outcome run_char_eq_limit(Index lo, Index hi, Precision floor)
{
    Outcome out;
    if (lo > hi)
        return out;
    out.bits = floor.bits();
    RootSet rs = compute_roots(floor);
    APNum residual = abs(det3(limit_grid(rs.alpha)));
    APNum tol = numeric_tolerance(floor.bits(), 24);
    if (residual > tol) {
        out.checked = 1;
        out.failure = Failure{lo, "|det at alpha| <= " + tol.to_sci(shown_digits), residual.to_sci(shown_digits)};
        return out;
    }
    Outcome exact = run_each(lo, hi, [](Index n) -> std::optional<Failure> {
        mpq_class x(static_cast<long>(n));
        mpq_class det = limit_determinant(x);
        mpq_class expected = limit_factorization(x);
        if (det == expected)
            return std::nullopt;
        return Failure{n, expected.get_str(), det.get_str()};
    });
    exact.bits = out.bits;
    return exact;
}

Outcome dispatch(IdentityId id, const SequenceTable& t, Index lo, Index hi, Precision p)
{
    switch (id) {
    case IdentityId::TribRecurrence: return run_trib_recurrence(t, lo, hi);
    case IdentityId::QPowerClosed: return run_q_power_closed(t, lo, hi);
    case IdentityId::CassiniT: return run_cassini_t(t, lo, hi);
    case IdentityId::BinetT: return run_binet_t(t, lo, hi, p);
    case IdentityId::QuadraticApprox: return run_quadratic(t, lo, hi, p);
    case IdentityId::HRecurrence: return run_h_recurrence(t, lo, hi);
    case IdentityId::HEqKMinusT: return run_h_eq_k_minus_t(t, lo, hi);
    case IdentityId::HFromT: return run_h_from_t(t, lo, hi);
    case IdentityId::K41Relation: return run_k41(t, lo, hi);
    case IdentityId::HPowerClosed: return run_h_power_closed(t, lo, hi);
    case IdentityId::CubicIdentity41: return run_cubic_identity(t, lo, hi);
    case IdentityId::StatePropagation: return run_state_propagation(t, lo, hi);
    case IdentityId::BinetHDiag: return run_binet_h(t, lo, hi, p);
    case IdentityId::CardanoRoots: return run_cardano(t, lo, hi, p);
    case IdentityId::CharPolyHn: return run_char_poly(t, lo, hi);
    case IdentityId::RatioLimit: return run_ratio_limit(t, lo, hi, p);
    case IdentityId::CharEqLimit: return run_char_eq_limit(lo, hi, p);
    }
    throw std::logic_error("unhandled identity");
}

const Precision default_precision{128};

} // namespace

std::optional<IdentityId> parse_identity(std::string_view name)
{
    for (const auto& entry : identity_registry)
        if (entry.name == name)
            return entry.id;
    return std::nullopt;
}

std::string_view to_string(Status s)
{
    return s == Status::Pass ? "pass" : "fail";
}

SequenceTable::SequenceTable(Index lo, Index hi, const std::optional<Perturbation>& perturbation) : lo_(lo), hi_(hi)
{
    for (SeqId id : all_sequences)
        values_[static_cast<std::size_t>(id)] = seq_range(id, lo, hi);
    if (perturbation && perturbation->index >= lo && perturbation->index <= hi)
        values_[static_cast<std::size_t>(perturbation->seq)][static_cast<std::size_t>(perturbation->index - lo)] +=
            perturbation->delta;
}

const Zint& SequenceTable::at(SeqId id, Index n) const
{
    if (n < lo_ || n > hi_)
        throw std::out_of_range("SequenceTable: index " + std::to_string(n) + " outside [" + std::to_string(lo_) +
                                ", " + std::to_string(hi_) + "]");
    return values_[static_cast<std::size_t>(id)][static_cast<std::size_t>(n - lo_)];
}

Stencil SequenceTable::stencil(SeqId id, Index n) const
{
    return {at(id, n + 1), at(id, n), at(id, n - 1), at(id, n - 2), at(id, n - 3)};
}

VerificationReport verify_with_table(IdentityId id, Index lo, Index hi, Precision precision,
                                     const SequenceTable& table)
{
    if (lo > hi)
        throw InvalidRange("verify: lo (" + std::to_string(lo) + ") > hi (" + std::to_string(hi) + ")");
    const IdentityInfo& meta = info(id);

    VerificationReport report;
    report.id = id;
    report.lo = lo;
    report.hi = hi;
    if (meta.min_index && lo < *meta.min_index) {
        report.lo = *meta.min_index;
        report.note = "lo clamped from " + std::to_string(lo) + " to " + std::to_string(*meta.min_index) +
                      " (domain n >= " + std::to_string(*meta.min_index) + ")";
    }
    if (report.lo > report.hi) {
        report.hi = report.lo - 1;
        report.note += report.note.empty() ? "empty range, vacuously true" : "; empty range, vacuously true";
        if (meta.numeric)
            report.bits = precision.bits();
        return report;
    }

    Outcome outcome = dispatch(id, table, report.lo, report.hi, precision);
    report.checked = outcome.checked;
    report.first_failure = std::move(outcome.failure);
    if (meta.numeric)
        report.bits = std::max<long>(outcome.bits, precision.bits());
    auto expected = static_cast<std::uint64_t>(report.hi - report.lo + 1);
    report.status = (!report.first_failure && report.checked == expected) ? Status::Pass : Status::Fail;
    return report;
}

VerificationReport verify(IdentityId id, Index lo, Index hi, const VerifyOptions& options)
{
    if (lo > hi)
        throw InvalidRange("verify: lo (" + std::to_string(lo) + ") > hi (" + std::to_string(hi) + ")");
    SequenceTable table(lo - table_margin, hi + table_margin, options.perturbation);
    return verify_with_table(id, lo, hi, options.precision.value_or(default_precision), table);
}

VerificationReport verify(std::string_view name, Index lo, Index hi, const VerifyOptions& options)
{
    auto id = parse_identity(name);
    if (!id)
        throw std::invalid_argument("unknown identity: " + std::string(name));
    return verify(*id, lo, hi, options);
}

std::vector<VerificationReport> verify_all(Index lo, Index hi, Precision precision,
                                           const std::optional<Perturbation>& perturbation)
{
    if (lo > hi)
        throw InvalidRange("verify_all: lo (" + std::to_string(lo) + ") > hi (" + std::to_string(hi) + ")");
    const SequenceTable table(lo - table_margin, hi + table_margin, perturbation);

    std::vector<std::future<VerificationReport>> pending;
    pending.reserve(identity_registry.size());
    for (const auto& entry : identity_registry)
        pending.push_back(std::async(std::launch::async, [&, id = entry.id] {
            return verify_with_table(id, lo, hi, precision, table);
        }));

    std::vector<VerificationReport> reports;
    reports.reserve(pending.size());
    for (auto& f : pending)
        reports.push_back(f.get());
    return reports;
}

bool all_pass(const std::vector<VerificationReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.status == Status::Pass; });
}

} // namespace trib
