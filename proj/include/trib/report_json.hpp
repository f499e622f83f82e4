#pragma once

// JSON form of verification reports:
//
//   {"reports":[{"id","lo","hi","bits","status","checked",
//                "first_failure":{"n","expected","actual"}|null,"note"}]}

#include "trib/identities.hpp"

#include <json.hpp>

#include <vector>

namespace trib {

void to_json(nlohmann::json& j, const Failure& f);
void from_json(const nlohmann::json& j, Failure& f);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

nlohmann::json reports_document(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> parse_reports_document(const nlohmann::json& doc);

} // namespace trib
