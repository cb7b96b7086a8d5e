#include <cstdlib>

#include "doctest.h"
#include "json.hpp"
#include "qs4/cli.hpp"
#include "qs4/error.hpp"

using namespace qs4;
using namespace qs4::cli;

namespace {

Command make(std::string verb, std::vector<std::string> args = {}) {
    Command c;
    c.verb = std::move(verb);
    c.args = std::move(args);
    return c;
}

} // namespace

TEST_CASE("configuration errors come before any work") {
    Command c = make("qmatrix", {"3"});
    CHECK_THROWS_AS(validate(c), ConfigError); // N = 3 < g = 4
    c.guard = 2;
    CHECK_NOTHROW(validate(c));
    CHECK_THROWS_AS(validate(make("verify", {"serre", "nonsense"})), ConfigError);
    CHECK_THROWS_AS(validate(make("verfy", {"all"})), ConfigError);
    CHECK_THROWS_AS(validate(make("nf")), ConfigError);
    CHECK_THROWS_AS(validate(make("gram", {"x"})), ConfigError);
    Command g = make("gram", {"2"});
    g.mode = Mode::generic;
    CHECK_THROWS_AS(validate(g), ConfigError);
    CHECK_THROWS_AS(parse_format("yaml"), ConfigError);
    CHECK(parse_format("csv") == Format::csv);
    try {
        validate(make("verfy"));
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("verify") != std::string::npos);
    }
}

TEST_CASE("every verb is known") {
    CHECK(verbs().size() == 10);
    for (const char* v : {"nf", "verify", "pair", "gram", "qmatrix", "sphere-check", "hilbert", "star-table",
                          "decompose", "singular"})
        CHECK(std::find(verbs().begin(), verbs().end(), v) != verbs().end());
}

TEST_CASE("nf") {
    const Result r = run(make("nf", {"Ea*Fa - Fa*Ea"}));
    CHECK(r.exit_code == kExitPass);
    REQUIRE(r.table.rows.size() == 1);
    CHECK(r.table.rows[0][1] == "(-q/(q^2-1))*Ka^-1 + (q/(q^2-1))*Ka");
    CHECK_THROWS_AS(run(make("nf", {"q^(2"})), ParseError);
    Command s = make("nf", {"z*y"});
    s.algebra = "sphere";
    CHECK(run(s).table.rows[0][1] == "(-q^4)*b*c + (-q^4)*a*a + (q^-4)");
}

TEST_CASE("gram table shape") {
    Command c = make("gram", {"2"});
    c.format = Format::csv;
    const Result r = run(c);
    CHECK(r.table.header.size() == 4);
    CHECK(r.table.rows.size() == 3);
    const std::string csv = render(r, Format::csv);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(r.table.rows[0][1] == "1");
}

TEST_CASE("hilbert and exit codes") {
    const Result r = run(make("hilbert", {"3"}));
    CHECK(r.exit_code == kExitPass);
    CHECK(r.table.rows.back() == std::vector<std::string>{"3", "50", "50"});
}

TEST_CASE("corrupted presentation fails serre") {
    Command c = make("verify", {"serre"});
    c.presentation = QS4_TEST_DATA "/uqsp4_bad_serre.pres";
    const Result r = run(c);
    CHECK(r.exit_code == kExitFail);
    bool seen = false;
    for (const auto& ch : r.report.checks)
        if (ch.id == "serre.F.quadratic") {
            seen = true;
            CHECK_FALSE(ch.pass);
            CHECK(ch.detail != "residual 0");
        }
    CHECK(seen);
}

TEST_CASE("json output is stable and schema-tagged") {
    Command c = make("verify", {"rmatrix", "semiclassical"});
    const std::string a = render(run(c), Format::json);
    c.threads = 2;
    const std::string b = render(run(c), Format::json);
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["config"]["N"] == "8");
    CHECK_FALSE(j.contains("timing"));
    const auto& checks = j["checks"];
    for (std::size_t i = 1; i < checks.size(); ++i)
        CHECK(checks[i - 1]["id"].get<std::string>() <= checks[i]["id"].get<std::string>());
    CHECK(nlohmann::json::parse(render(run(c), Format::json, true)).contains("timing"));
}

TEST_CASE("thread count from the environment") {
    ::setenv("QS4_THREADS", "3", 1);
    CHECK(threads_from_env() == 3);
    ::setenv("QS4_THREADS", "zero", 1);
    CHECK_THROWS_AS(threads_from_env(), ConfigError);
    ::unsetenv("QS4_THREADS");
    CHECK(threads_from_env() == 1);
}
