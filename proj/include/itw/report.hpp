#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace itw {

inline constexpr const char* kVersion = "0.1.0";

/// One executed check. `tolerance` is the absolute band for deterministic
/// checks and the full 3-sigma band for stochastic ones; `pass` is consistent
/// with |observed - target| <= tolerance.
struct ReportRecord {
    std::string suite;
    std::string check_id;
    nlohmann::json inputs = nlohmann::json::object();
    double observed = 0;
    double target = 0;
    double tolerance = 0;
    std::string tolerance_kind = "absolute"; // "absolute" | "3se"
    bool pass = false;
    std::string error; // non-empty on numerical failure
    double wall_ms = 0;
};

struct Report {
    std::string suite;
    uint64_t seed = 0;
    std::vector<ReportRecord> records;
    bool control_mode = false;

    int failures() const;
    int numerical_failures() const;
};

nlohmann::json report_to_json(const Report& report);
void write_report(const Report& report, const std::string& path);

} // namespace itw
