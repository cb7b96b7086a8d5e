#pragma once

// Command dispatch behind the qs4 tool: verbs, named suites, tables and
// report rendering. Argument parsing itself lives in tools/.

#include <string>
#include <vector>

#include "qs4/coeffring.hpp"
#include "qs4/report.hpp"

namespace qs4::cli {

enum class Format { text, json, csv };
Format parse_format(const std::string& s);

struct Command {
    std::string verb;
    std::vector<std::string> args;
    Mode mode = Mode::special;
    int N = 8;
    int guard = 4;
    Format format = Format::text;
    std::string presentation; // optional presentation file for nf / verify
    std::string algebra = "uq"; // uq | sphere, for nf
    unsigned seed = 1;
    int threads = 1;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool empty() const { return header.empty(); }
    std::string csv() const;
    std::string text() const;
};

struct Result {
    Report report;
    Table table;
    int exit_code = 0;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

const std::vector<std::string>& verbs();
/// Names accepted by `verify`; "all" expands to every suite.
const std::vector<std::string>& suites();

/// Throws ConfigError for anything wrong with the command before work starts.
void validate(const Command& cmd);
Result run(const Command& cmd);

/// Report plus table in the requested format; timing is omitted from JSON
/// unless asked for, so repeated runs compare byte for byte.
std::string render(const Result& r, Format f, bool with_timing = false);

/// QS4_THREADS, defaulting to 1; invalid values are a ConfigError.
int threads_from_env();

} // namespace qs4::cli
