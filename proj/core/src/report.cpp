#include "qs4/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace qs4 {

Check& Report::add(std::string id, std::string claim, bool pass, std::string detail, std::string anchor) {
    Check c;
    c.id = std::move(id);
    c.claim = std::move(claim);
    c.pass = pass;
    c.detail = std::move(detail);
    c.anchor = std::move(anchor);
    checks.push_back(std::move(c));
    return checks.back();
}

void Report::merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
    seconds += other.seconds;
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void Report::sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
}

std::string Report::json(bool with_timing) const {
    Report r = *this;
    r.sort();
    // ordered_json keeps the insertion order; keys are sorted by hand
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["suite"] = r.suite;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.config) cfg[k] = v;
    j["config"] = cfg;
    j["pass"] = r.all_pass();
    j["failures"] = r.failures();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["claim"] = c.claim;
        if (!c.anchor.empty()) e["anchor"] = c.anchor;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        if (!c.values.empty()) {
            nlohmann::ordered_json v = nlohmann::ordered_json::object();
            for (const auto& [k, x] : c.values) v[k] = x;
            e["values"] = v;
        }
        arr.push_back(std::move(e));
    }
    j["checks"] = arr;
    if (with_timing) j["timing"] = {{"seconds", r.seconds}};
    return j.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char ch : s) {
        if (ch == '"') o += '"';
        o += ch;
    }
    return o + "\"";
}

} // namespace

std::string Report::csv() const {
    Report r = *this;
    r.sort();
    std::ostringstream os;
    os << "id,pass,claim,detail\n";
    for (const auto& c : r.checks)
        os << csv_field(c.id) << ',' << (c.pass ? "PASS" : "FAIL") << ',' << csv_field(c.claim) << ','
           << csv_field(c.detail) << '\n';
    return os.str();
}

std::string Report::text() const {
    Report r = *this;
    r.sort();
    std::ostringstream os;
    os << "suite " << r.suite << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " pass\n";
    for (const auto& c : r.checks) {
        os << (c.pass ? "  PASS  " : "  FAIL  ") << c.id << "  " << c.claim;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << '\n';
    }
    return os.str();
}

} // namespace qs4
