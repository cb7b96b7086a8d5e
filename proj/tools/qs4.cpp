#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qs4/cli.hpp"
#include "qs4/error.hpp"

namespace cli = qs4::cli;

int main(int argc, char** argv) {
    CLI::App app{"Exact verification tool for U_q(sp4), its Verma modules and the quantum four-sphere"};
    app.require_subcommand(0, 1);

    cli::Command cmd;
    std::string mode = "special", format = "text", out;
    bool timing = false;

    app.add_option("--mode", mode, "generic | special")->check(CLI::IsMember({"generic", "special"}));
    app.add_option("-N", cmd.N, "degree cap on module truncations");
    app.add_option("--guard", cmd.guard, "guard band g; checks run on degrees <= N - g");
    app.add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out, "write the report here instead of stdout");
    app.add_option("--presentation", cmd.presentation, "presentation file replacing the built-in relations")
        ->check(CLI::ExistingFile);
    app.add_option("--algebra", cmd.algebra, "uq | sphere (nf only)")->check(CLI::IsMember({"uq", "sphere"}));
    app.add_option("--seed", cmd.seed, "seed for randomised checks");
    app.add_flag("--timing", timing, "include timing in the output");

    struct VerbSpec {
        const char* name;
        const char* help;
        const char* args;
    };
    const std::vector<VerbSpec> specs = {
        {"nf", "normal form of an expression", "expression"},
        {"verify", "run named suites (or 'all')", "suite names"},
        {"pair", "pairing <x v-, y v>", "x and y"},
        {"gram", "Gram diagonal table up to the given index", "max index"},
        {"qmatrix", "Q operator suite on C^4 (x) M", "degree cap"},
        {"sphere-check", "quantum sphere and semiclassical suites", ""},
        {"hilbert", "filtered Hilbert dimensions of the sphere algebra", "max degree"},
        {"star-table", "star product coefficient table", "max index"},
        {"decompose", "per-weight ranks of C^4 (x) M", "degree cap"},
        {"singular", "singular vector suite", "degree cap"},
    };
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->fallthrough();
        if (*s.args) sub->add_option("args", cmd.args, s.args);
        sub->callback([&cmd, name = std::string(s.name)] { cmd.verb = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kExitUsage;
    }
    if (cmd.verb.empty()) {
        std::cerr << app.help();
        return cli::kExitUsage;
    }

    try {
        cmd.mode = qs4::parse_mode(mode);
        cmd.format = cli::parse_format(format);
        cmd.threads = cli::threads_from_env();
        const cli::Result res = cli::run(cmd);
        const std::string text = cli::render(res, cmd.format, timing);
        if (out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out, std::ios::binary);
            if (!f) {
                std::cerr << "qs4: cannot write " << out << "\n";
                return cli::kExitUsage;
            }
            f << text;
        }
        return res.exit_code;
    } catch (const qs4::ConfigError& e) {
        std::cerr << "qs4: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const qs4::ParseError& e) {
        std::cerr << "qs4: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "qs4: " << e.what() << "\n";
        return cli::kExitFail;
    }
}
