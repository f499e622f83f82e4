#pragma once

// Timing harness for H(n) at n = 2^k: linear iteration, binary matrix powering
// and doubling on the 1/41 closed form. Values are cross-checked before any
// timing leaves the harness.

#include "trib/zint.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trib::cli {

enum class BenchMethod { Iterative, MatrixPower, ClosedForm };

std::string_view to_string(BenchMethod m);
std::optional<BenchMethod> parse_bench_method(std::string_view text);

struct BenchRecord {
    BenchMethod method = BenchMethod::Iterative;
    Index n = 0;
    std::int64_t wall_nanoseconds = 0;
    std::int64_t digits = 0;

    bool operator==(const BenchRecord&) const = default;
};

void to_json(nlohmann::json& j, const BenchRecord& r);
void from_json(const nlohmann::json& j, BenchRecord& r);

using HValueFn = std::function<Zint(Index)>;

struct BenchMethods {
    HValueFn iterative;
    HValueFn matrix_power;
    HValueFn closed_form;

    static BenchMethods standard();
};

struct BenchResult {
    /// sorted by (n, method name); empty unless every method agreed at every n
    std::vector<BenchRecord> records;
    bool consistent = true;
    std::string mismatch;
};

BenchResult run_bench(int max_exp, const BenchMethods& methods = BenchMethods::standard());

} // namespace trib::cli
