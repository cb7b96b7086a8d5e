#pragma once

// Verification records shared by every suite.

#include <map>
#include <string>
#include <vector>

namespace qs4 {

struct Check {
    std::string id;     // stable identifier, sort key
    std::string claim;  // what is asserted
    std::string anchor; // the statement being reproduced
    std::string detail; // computed residual or values, rendered
    bool pass = false;
    std::map<std::string, std::string> values;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    std::map<std::string, std::string> config;
    double seconds = 0.0;

    Check& add(std::string id, std::string claim, bool pass, std::string detail = "", std::string anchor = "");
    void merge(const Report& other);
    bool all_pass() const;
    std::size_t failures() const;
    void sort();

    /// Stable JSON; timing only when requested.
    std::string json(bool with_timing = true) const;
    std::string csv() const;
    std::string text() const;
};

inline constexpr int kReportSchemaVersion = 1;

} // namespace qs4
