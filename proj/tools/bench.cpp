#include "bench.hpp"

#include "trib/matrix.hpp"
#include "trib/sequence.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <stdexcept>
#include <utility>

namespace trib::cli {

std::string_view to_string(BenchMethod m)
{
    switch (m) {
    case BenchMethod::Iterative: return "iterative";
    case BenchMethod::MatrixPower: return "matrix-power";
    case BenchMethod::ClosedForm: return "closed-form";
    }
    return "?";
}

std::optional<BenchMethod> parse_bench_method(std::string_view text)
{
    for (auto m : {BenchMethod::Iterative, BenchMethod::MatrixPower, BenchMethod::ClosedForm})
        if (to_string(m) == text)
            return m;
    return std::nullopt;
}

void to_json(nlohmann::json& j, const BenchRecord& r)
{
    j = nlohmann::json{{"method", std::string(to_string(r.method))},
                       {"n", r.n},
                       {"wall_nanoseconds", r.wall_nanoseconds},
                       {"digits", r.digits}};
}

void from_json(const nlohmann::json& j, BenchRecord& r)
{
    auto name = j.at("method").get<std::string>();
    auto m = parse_bench_method(name);
    if (!m)
        throw std::invalid_argument("unknown bench method: " + name);
    r.method = *m;
    j.at("n").get_to(r.n);
    j.at("wall_nanoseconds").get_to(r.wall_nanoseconds);
    j.at("digits").get_to(r.digits);
}

BenchMethods BenchMethods::standard()
{
    return {
        [](Index n) { return seq_value(SeqId::H, n); },
        [](Index n) { return propagate(n).bot; },
        [](Index n) { return h_by_closed_doubling(n); },
    };
}

BenchResult run_bench(int max_exp, const BenchMethods& methods)
{
    if (max_exp < 1 || max_exp > 40)
        throw std::invalid_argument("max-exp must be in [1, 40]");

    using clock = std::chrono::steady_clock;
    const std::array<std::pair<BenchMethod, const HValueFn*>, 3> plan{{
        {BenchMethod::Iterative, &methods.iterative},
        {BenchMethod::MatrixPower, &methods.matrix_power},
        {BenchMethod::ClosedForm, &methods.closed_form},
    }};

    BenchResult result;
    for (int k = 1; k <= max_exp; ++k) {
        Index n = Index{1} << k;
        std::optional<Zint> reference;
        std::vector<BenchRecord> at_n;
        for (const auto& [method, fn] : plan) {
            auto start = clock::now();
            Zint value = (*fn)(n);
            auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count();
            if (!reference) {
                reference = value;
            } else if (value != *reference) {
                result.records.clear();
                result.consistent = false;
                result.mismatch = std::string(to_string(method)) + " disagrees with iterative at n = " +
                                  std::to_string(n);
                return result;
            }
            at_n.push_back({method, n, static_cast<std::int64_t>(elapsed),
                            static_cast<std::int64_t>(decimal_digits(value))});
        }
        result.records.insert(result.records.end(), at_n.begin(), at_n.end());
    }
    std::sort(result.records.begin(), result.records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        if (a.n != b.n)
            return a.n < b.n;
        return to_string(a.method) < to_string(b.method);
    });
    return result;
}

} // namespace trib::cli
