#include "itw/report.hpp"

#include <fstream>

#include "itw/errors.hpp"

namespace itw {

int Report::failures() const {
    int count = 0;
    for (const auto& r : records)
        if (!r.pass) ++count;
    return count;
}

int Report::numerical_failures() const {
    int count = 0;
    for (const auto& r : records)
        if (!r.error.empty()) ++count;
    return count;
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json records = nlohmann::json::array();
    std::vector<std::string> failed_ids;
    for (const auto& r : report.records) {
        nlohmann::json jr{{"suite", r.suite},
                          {"check_id", r.check_id},
                          {"inputs", r.inputs},
                          {"observed", r.observed},
                          {"target", r.target},
                          {"tolerance", r.tolerance},
                          {"tolerance_kind", r.tolerance_kind},
                          {"pass", r.pass},
                          {"wall_ms", r.wall_ms}};
        if (!r.error.empty()) jr["error"] = r.error;
        records.push_back(std::move(jr));
        if (!r.pass) failed_ids.push_back(r.check_id);
    }
    nlohmann::json summary{{"total", report.records.size()},
                           {"passed", report.records.size() - static_cast<size_t>(report.failures())},
                           {"failed", report.failures()},
                           {"failed_ids", failed_ids},
                           {"numerical_failures", report.numerical_failures()},
                           {"seed", report.seed},
                           {"control_mode", report.control_mode},
                           {"version", kVersion}};
    return nlohmann::json{{"suite", report.suite}, {"records", records}, {"summary", summary}};
}

void write_report(const Report& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open report path: " + path);
    out << report_to_json(report).dump(2) << "\n";
}

} // namespace itw
