#include "wolst/report_json.hpp"

#include <algorithm>
#include <stdexcept>

namespace wolst {

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"claim", c.claim},
                          {"left", c.left},
                          {"right", c.right},
                          {"passed", c.passed}});
    }
    return {{"v", 1}, {"prime", report.prime}, {"overall", report.overall()}, {"checks", checks}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("v") || !j.at("v").is_number_integer() ||
        j.at("v").get<int>() != 1) {
        throw std::invalid_argument("report JSON: missing or unsupported schema version");
    }
    if (!j.contains("prime") || !j.at("prime").is_number_unsigned() || !j.contains("checks") ||
        !j.at("checks").is_array() || !j.contains("overall") || !j.at("overall").is_boolean()) {
        throw std::invalid_argument("report JSON: malformed top-level fields");
    }
    VerificationReport report;
    report.prime = j.at("prime").get<std::uint64_t>();
    const auto& names = all_check_names();
    for (const auto& cj : j.at("checks")) {
        CheckResult c;
        c.name = cj.at("name").get<std::string>();
        if (std::find_if(names.begin(), names.end(),
                         [&](const char* n) { return c.name == n; }) == names.end()) {
            throw std::invalid_argument("report JSON: unknown check name '" + c.name + "'");
        }
        c.claim = cj.at("claim").get<std::string>();
        c.left = cj.at("left").get<std::string>();
        c.right = cj.at("right").get<std::string>();
        c.passed = cj.at("passed").get<bool>();
        report.checks.push_back(std::move(c));
    }
    if (j.at("overall").get<bool>() != report.overall()) {
        throw std::invalid_argument("report JSON: overall flag contradicts the check verdicts");
    }
    return report;
}

} // namespace wolst
