#include "cli.hpp"

#include "bench.hpp"
#include "trib/binet.hpp"
#include "trib/errors.hpp"
#include "trib/identities.hpp"
#include "trib/report_json.hpp"
#include "trib/sequence.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace trib::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<Index> parse_index(std::string_view text)
{
    Index v = 0;
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        return std::nullopt;
    return v;
}

std::pair<Index, Index> require_range(const std::string& text)
{
    auto r = parse_range(text);
    if (!r)
        throw UsageError("--range expects lo:hi with lo <= hi, got '" + text + "'");
    return *r;
}

Precision require_precision(long bits)
{
    if (bits < Precision::min_bits)
        throw UsageError("--bits must be at least 64");
    return Precision(bits);
}

std::size_t printable_digits(mpfr_prec_t bits)
{
    return static_cast<std::size_t>(std::floor(static_cast<double>(bits) * std::log10(2.0)));
}

// --- compute ---------------------------------------------------------------

struct ComputeArgs {
    std::string seq;
    std::optional<Index> n;
    std::string range;
    std::string format = "plain";
};

int cmd_compute(const ComputeArgs& a, std::ostream& out)
{
    auto id = parse_seq_id(a.seq);
    if (!id)
        throw UsageError("--seq must be one of T, K, H");
    Index lo = 0;
    Index hi = 0;
    if (!a.range.empty()) {
        std::tie(lo, hi) = require_range(a.range);
    } else if (a.n) {
        lo = hi = *a.n;
    } else {
        throw UsageError("compute needs --n or --range");
    }
    auto values = seq_range(*id, lo, hi);

    if (a.format == "json") {
        json doc{{"seq", std::string(to_string(*id))}, {"values", json::array()}};
        for (Index n = lo; n <= hi; ++n)
            doc["values"].push_back({{"n", n}, {"value", values[static_cast<std::size_t>(n - lo)].get_str()}});
        out << doc.dump() << '\n';
    } else if (a.format == "csv") {
        out << "n,value\n";
        for (Index n = lo; n <= hi; ++n)
            out << n << ',' << values[static_cast<std::size_t>(n - lo)].get_str() << '\n';
    } else if (a.range.empty()) {
        out << values.front().get_str() << '\n';
    } else {
        for (Index n = lo; n <= hi; ++n)
            out << n << ' ' << values[static_cast<std::size_t>(n - lo)].get_str() << '\n';
    }
    return exit_ok;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string id;
    bool all = false;
    std::string range;
    long bits = 128;
    std::string format = "plain";
    std::string perturb;
};

std::optional<Perturbation> parse_perturbation(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("--perturb expects SEQ:index, e.g. H:17");
    auto seq = parse_seq_id(std::string_view(text).substr(0, colon));
    auto index = parse_index(std::string_view(text).substr(colon + 1));
    if (!seq || !index)
        throw UsageError("--perturb expects SEQ:index, e.g. H:17");
    return Perturbation{*seq, *index, 1};
}

void print_report(std::ostream& out, const VerificationReport& r)
{
    out << to_string(r.status) << "  " << to_string(r.id) << "  [" << r.lo << ", " << r.hi << "]  checked "
        << r.checked;
    if (r.bits)
        out << "  bits " << *r.bits;
    out << '\n';
    if (r.first_failure)
        out << "    first failure at n = " << r.first_failure->n << ": expected " << r.first_failure->expected
            << ", got " << r.first_failure->actual << '\n';
    if (!r.note.empty())
        out << "    note: " << r.note << '\n';
}

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    auto [lo, hi] = require_range(a.range);
    Precision p = require_precision(a.bits);
    auto perturbation = parse_perturbation(a.perturb);

    std::vector<VerificationReport> reports;
    if (a.all) {
        reports = verify_all(lo, hi, p, perturbation);
    } else {
        auto id = parse_identity(a.id);
        if (!id)
            throw UsageError("unknown identity '" + a.id + "'");
        reports.push_back(verify(*id, lo, hi, {p, perturbation}));
    }

    if (a.format == "json") {
        out << reports_document(reports).dump() << '\n';
    } else {
        for (const auto& r : reports)
            print_report(out, r);
    }
    return all_pass(reports) ? exit_ok : exit_failure;
}

// --- roots -----------------------------------------------------------------

struct RootsArgs {
    long bits = 128;
    std::optional<Index> power;
    std::string format = "plain";
};

json complex_json(const APComplex& z, std::size_t digits)
{
    return {{"re", z.re().to_fixed(digits)}, {"im", z.im().to_fixed(digits)}};
}

int cmd_roots(const RootsArgs& a, std::ostream& out)
{
    Precision p = require_precision(a.bits);
    if (a.power && *a.power < 1)
        throw UsageError("--power must be >= 1");
    std::size_t digits = printable_digits(p.bits());
    RootSet roots = compute_roots(p);

    std::optional<CardanoRoots> cardano;
    if (a.power)
        cardano = cardano_roots(*a.power, cardano_precision(*a.power, p));

    if (a.format == "json") {
        json doc{{"bits", p.bits()},
                 {"alpha", roots.alpha.to_fixed(digits)},
                 {"omega1", complex_json(roots.omega1, digits)},
                 {"omega2", complex_json(roots.omega2, digits)},
                 {"residual_bound", roots.residual_bound.to_sci(6)},
                 {"newton_gap", roots.method_gap.to_sci(6)}};
        if (cardano) {
            doc["power"] = {{"n", *a.power},
                            {"K", cardano->k.get_str()},
                            {"R", cardano->r.get_str()},
                            {"delta", cardano->delta_exact.get_str()},
                            {"A", cardano->a_n.to_fixed(digits)},
                            {"B", cardano->b_n.to_fixed(digits)},
                            {"y1", cardano->y1.to_fixed(digits)},
                            {"y2", complex_json(cardano->y2, digits)},
                            {"y3", complex_json(cardano->y3, digits)}};
        }
        out << doc.dump() << '\n';
        return exit_ok;
    }

    out << "bits   " << p.bits() << '\n';
    out << "alpha  " << roots.alpha.to_fixed(digits) << '\n';
    out << "omega1 " << roots.omega1.to_string(digits) << '\n';
    out << "omega2 " << roots.omega2.to_string(digits) << '\n';
    out << "residual_bound " << roots.residual_bound.to_sci(6) << '\n';
    out << "newton_gap     " << roots.method_gap.to_sci(6) << '\n';
    if (cardano) {
        out << "power  " << *a.power << '\n';
        out << "K=" << cardano->k.get_str() << '\n';
        out << "R=" << cardano->r.get_str() << '\n';
        out << "Delta=" << cardano->delta_exact.get_str() << " (" << cardano->delta_n.to_sci(digits) << ")\n";
        out << "A      " << cardano->a_n.to_fixed(digits) << '\n';
        out << "B      " << cardano->b_n.to_fixed(digits) << '\n';
        out << "y1     " << cardano->y1.to_fixed(digits) << '\n';
        out << "y2     " << cardano->y2.to_string(digits) << '\n';
        out << "y3     " << cardano->y3.to_string(digits) << '\n';
    }
    return exit_ok;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
    int max_exp = 10;
    std::string format = "plain";
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.max_exp < 1 || a.max_exp > 40)
        throw UsageError("--max-exp must be in [1, 40]");
    BenchResult result = run_bench(a.max_exp);
    if (!result.consistent) {
        err << "bench: " << result.mismatch << '\n';
        return exit_failure;
    }
    if (a.format == "json") {
        out << json{{"records", result.records}}.dump() << '\n';
    } else if (a.format == "csv") {
        out << "method,n,wall_nanoseconds,digits\n";
        for (const auto& r : result.records)
            out << to_string(r.method) << ',' << r.n << ',' << r.wall_nanoseconds << ',' << r.digits << '\n';
    } else {
        for (const auto& r : result.records)
            out << to_string(r.method) << "  n=" << r.n << "  " << r.wall_nanoseconds << " ns  " << r.digits
                << " digits\n";
    }
    return exit_ok;
}

} // namespace

std::optional<std::pair<Index, Index>> parse_range(std::string_view text)
{
    // the separator is the first ':' after a possible leading sign
    auto colon = text.find(':', 1);
    if (text.empty() || colon == std::string_view::npos)
        return std::nullopt;
    auto lo = parse_index(text.substr(0, colon));
    auto hi = parse_index(text.substr(colon + 1));
    if (!lo || !hi || *lo > *hi)
        return std::nullopt;
    return std::pair{*lo, *hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Tribonacci-family sequences, identity verification and benchmarks", "tribo"};
    app.require_subcommand(1);
    const std::vector<std::string> formats_all{"plain", "json", "csv"};
    const std::vector<std::string> formats_doc{"plain", "json"};

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Print exact sequence values");
    c->add_option("--seq", compute.seq, "Sequence: T, K or H")->required();
    auto* n_opt = c->add_option("--n", compute.n, "Single index");
    auto* range_opt = c->add_option("--range", compute.range, "Index range lo:hi");
    n_opt->excludes(range_opt);
    c->add_option("--format", compute.format)->check(CLI::IsMember(formats_all));

    VerifyArgs verify_args;
    auto* v = app.add_subcommand("verify", "Run identity checks over an index range");
    auto* id_opt = v->add_option("--id", verify_args.id, "Identity name");
    auto* all_opt = v->add_flag("--all", verify_args.all, "Run every identity");
    id_opt->excludes(all_opt);
    v->add_option("--range", verify_args.range, "Index range lo:hi")->required();
    v->add_option("--bits", verify_args.bits, "Working precision floor for numeric identities");
    v->add_option("--format", verify_args.format)->check(CLI::IsMember(formats_doc));
    v->add_option("--perturb", verify_args.perturb, "Add 1 to one sequence value, e.g. H:17 (sandboxed)");

    RootsArgs roots_args;
    auto* r = app.add_subcommand("roots", "Print the roots of x^3 - x^2 - x - 1");
    r->add_option("--bits", roots_args.bits, "Working precision in bits");
    r->add_option("--power", roots_args.power, "Also print the Cardano roots of the characteristic polynomial of H^n");
    r->add_option("--format", roots_args.format)->check(CLI::IsMember(formats_doc));

    BenchArgs bench_args;
    auto* b = app.add_subcommand("bench", "Time H(2^k) by iteration, matrix powering and the closed form");
    b->add_option("--max-exp", bench_args.max_exp, "Largest k")->required();
    b->add_option("--format", bench_args.format)->check(CLI::IsMember(formats_all));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (c->parsed()) {
            if (!v->parsed() && !compute.n && compute.range.empty())
                throw UsageError("compute needs --n or --range");
            return cmd_compute(compute, out);
        }
        if (v->parsed()) {
            if (verify_args.id.empty() && !verify_args.all)
                throw UsageError("verify needs --id <name> or --all");
            return cmd_verify(verify_args, out);
        }
        if (r->parsed())
            return cmd_roots(roots_args, out);
        if (b->parsed())
            return cmd_bench(bench_args, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

} // namespace trib::cli
