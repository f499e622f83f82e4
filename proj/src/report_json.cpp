#include "trib/report_json.hpp"

#include <stdexcept>
#include <string>

namespace trib {

void to_json(nlohmann::json& j, const Failure& f)
{
    j = nlohmann::json{{"n", f.n}, {"expected", f.expected}, {"actual", f.actual}};
}

void from_json(const nlohmann::json& j, Failure& f)
{
    j.at("n").get_to(f.n);
    j.at("expected").get_to(f.expected);
    j.at("actual").get_to(f.actual);
}

void to_json(nlohmann::json& j, const VerificationReport& r)
{
    j = nlohmann::json{
        {"id", std::string(to_string(r.id))},
        {"lo", r.lo},
        {"hi", r.hi},
        {"bits", r.bits ? nlohmann::json(*r.bits) : nlohmann::json(nullptr)},
        {"status", std::string(to_string(r.status))},
        {"checked", r.checked},
        {"first_failure", r.first_failure ? nlohmann::json(*r.first_failure) : nlohmann::json(nullptr)},
        {"note", r.note},
    };
}

void from_json(const nlohmann::json& j, VerificationReport& r)
{
    auto name = j.at("id").get<std::string>();
    auto id = parse_identity(name);
    if (!id)
        throw std::invalid_argument("unknown identity in report: " + name);
    r.id = *id;
    j.at("lo").get_to(r.lo);
    j.at("hi").get_to(r.hi);
    const auto& bits = j.at("bits");
    r.bits = bits.is_null() ? std::nullopt : std::optional<long>(bits.get<long>());
    auto status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail")
        throw std::invalid_argument("bad status in report: " + status);
    r.status = status == "pass" ? Status::Pass : Status::Fail;
    j.at("checked").get_to(r.checked);
    const auto& failure = j.at("first_failure");
    r.first_failure = failure.is_null() ? std::nullopt : std::optional<Failure>(failure.get<Failure>());
    r.note = j.value("note", std::string());
}

nlohmann::json reports_document(const std::vector<VerificationReport>& reports)
{
    return nlohmann::json{{"reports", reports}};
}

std::vector<VerificationReport> parse_reports_document(const nlohmann::json& doc)
{
    return doc.at("reports").get<std::vector<VerificationReport>>();
}

} // namespace trib
