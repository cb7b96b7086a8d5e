#include "qs4/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qs4/error.hpp"
#include "qs4/expr.hpp"
#include "qs4/rmat.hpp"
#include "qs4/shapovalov.hpp"
#include "qs4/sphere.hpp"
#include "qs4/uq.hpp"
#include "qs4/verma.hpp"

namespace qs4::cli {

namespace {

constexpr int kGramMax = 5;
constexpr int kOffdiagMax = 4;
constexpr int kContravarianceSamples = 50;
constexpr int kHopfSamples = 20;
constexpr int kHilbertDegree = 6;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char ch : s) {
        if (ch == '"') o += '"';
        o += ch;
    }
    return o + "\"";
}

int to_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw ConfigError(what + ": expected an integer, got '" + s + "'");
    return v;
}

// ---- suites

struct Suite {
    std::string name;
    std::function<Report(const Command&)> run;
};

const RewriteSystem& presentation_system(const Command& cmd) {
    if (cmd.presentation.empty()) return uq::algebra();
    // used as given; completion only records confluence when nothing would be added
    static const RewriteSystem sys = [&] {
        RewriteSystem s = read_presentation_file(cmd.presentation, cmd.mode);
        const auto amb = s.overlap_report(uq::kCompletionDegree);
        if (std::all_of(amb.begin(), amb.end(), [](const Ambiguity& a) { return a.residual.is_zero(); }))
            s.complete(uq::kCompletionDegree);
        return s;
    }();
    return sys;
}

Report filtered(Report r, const std::string& prefix, const std::string& suite) {
    Report out;
    out.suite = suite;
    for (auto& c : r.checks)
        if (c.id.rfind(prefix, 0) == 0) out.checks.push_back(std::move(c));
    return out;
}

const std::vector<Suite>& suite_table() {
    static const std::vector<Suite> s = {
        {"presentation", [](const Command& c) { return uq::presentation_report(presentation_system(c)); }},
        {"defining",
         [](const Command& c) {
             return filtered(uq::presentation_report(presentation_system(c)), "defining.", "defining");
         }},
        {"serre",
         [](const Command& c) { return filtered(uq::presentation_report(presentation_system(c)), "serre.", "serre"); }},
        {"roots",
         [](const Command& c) { return filtered(uq::presentation_report(presentation_system(c)), "roots.", "roots"); }},
        {"commutators",
         [](const Command& c) {
             return filtered(uq::presentation_report(presentation_system(c)), "commutators.", "commutators");
         }},
        {"completion",
         [](const Command& c) {
             return filtered(uq::presentation_report(presentation_system(c)), "completion.", "completion");
         }},
        {"pbw", [](const Command& c) { return uq::pbw_report(c.N); }},
        {"hopf", [](const Command& c) { return uq::hopf_report(c.seed, kHopfSamples); }},
        {"lemma",
         [](const Command&) {
             Report r = verma::lemma_report(Mode::generic);
             Report sp = verma::lemma_report(Mode::special);
             for (auto& ch : sp.checks) ch.id = "special." + ch.id;
             r.merge(sp);
             return r;
         }},
        {"singular", [](const Command& c) { return verma::singular_report(c.N); }},
        {"action", [](const Command& c) { return verma::action_report(c.N, c.seed); }},
        {"decompose", [](const Command& c) { return verma::decompose_report(c.N); }},
        {"rmatrix", [](const Command&) { return rmat::rmatrix_report(); }},
        {"qmatrix",
         [](const Command& c) {
             Report r = rmat::q_report(Mode::special, c.N, c.guard);
             r.merge(rmat::q_report(Mode::generic, c.N, c.guard));
             return r;
         }},
        {"reflection", [](const Command& c) { return rmat::reflection_report(c.N, c.guard); }},
        {"sphere",
         [](const Command& c) {
             Report r = sphere::classical_report();
             r.merge(sphere::quantum_report(kHilbertDegree));
             r.merge(sphere::operator_report(c.N, c.guard, c.seed));
             return r;
         }},
        {"semiclassical", [](const Command&) { return sphere::semiclassical_report(); }},
        {"pairing", [](const Command&) { return shapovalov::pairing_report(); }},
        {"gram", [](const Command&) { return shapovalov::gram_report(kGramMax, kOffdiagMax); }},
        {"contravariance",
         [](const Command& c) { return shapovalov::contravariance_report(c.seed, kContravarianceSamples); }},
        {"star", [](const Command&) { return shapovalov::star_report(kGramMax); }},
    };
    return s;
}

// suites whose checks overlap a larger suite are not part of "all"
bool in_all(const std::string& name) {
    return name != "defining" && name != "serre" && name != "roots" && name != "commutators" &&
           name != "completion";
}

std::vector<std::string> expand_suites(const std::vector<std::string>& names) {
    std::vector<std::string> out;
    auto push = [&](const std::string& n) {
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    };
    for (const auto& n : names) {
        if (n == "all") {
            for (const auto& s : suite_table())
                if (in_all(s.name)) push(s.name);
            continue;
        }
        const auto& known = suites();
        if (std::find(known.begin(), known.end(), n) == known.end()) {
            const std::string hint = suggest(n, known);
            throw ConfigError("unknown suite '" + n + "'" + (hint.empty() ? "" : "; did you mean '" + hint + "'?"));
        }
        push(n);
    }
    return out;
}

Report run_suites(const Command& cmd, const std::vector<std::string>& names) {
    std::vector<const Suite*> todo;
    for (const auto& n : names)
        for (const auto& s : suite_table())
            if (s.name == n) todo.push_back(&s);
    if (!cmd.presentation.empty()) presentation_system(cmd); // build before any worker starts
    std::vector<Report> out(todo.size());
    std::vector<std::string> errors(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < todo.size(); i = next++) {
            try {
                out[i] = todo[i]->run(cmd);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const int n = std::max(1, std::min<int>(cmd.threads, static_cast<int>(todo.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Report all;
    for (std::size_t i = 0; i < todo.size(); ++i) {
        if (!errors[i].empty()) {
            all.add(todo[i]->name + ".error", "suite runs to completion", false, errors[i]);
            continue;
        }
        all.merge(out[i]);
    }
    return all;
}

// ---- verbs

NCPoly parse_for(const Command& cmd, const std::string& text, const RewriteSystem*& sys) {
    if (cmd.algebra == "sphere") {
        sys = &sphere::quantum_system();
        ParseContext ctx;
        ctx.alphabet = &sphere::alphabet();
        ctx.mu_mode = cmd.mode;
        return parse_expr(text, ctx);
    }
    if (!cmd.presentation.empty()) {
        sys = &presentation_system(cmd);
        ParseContext ctx;
        ctx.alphabet = &sys->alphabet();
        ctx.mu_mode = cmd.mode;
        return parse_expr(text, ctx);
    }
    sys = &uq::algebra();
    return uq::parse(text, cmd.mode);
}

Result verb_nf(const Command& cmd) {
    Result res;
    const RewriteSystem* sys = nullptr;
    const NCPoly x = parse_for(cmd, cmd.args.at(0), sys);
    const NCPoly nf = sys->reduce(x);
    const std::string shown = nf.str(sys->alphabet());
    ParseContext ctx;
    ctx.alphabet = &sys->alphabet();
    ctx.mu_mode = cmd.mode;
    const NCPoly back = parse_expr(shown, ctx);
    res.report.add("nf.roundtrip", "parse(render(nf)) = nf", back == nf, shown);
    bool irreducible = true;
    for (const auto& [w, c] : nf.terms())
        if (!sys->is_irreducible(w)) irreducible = false;
    res.report.add("nf.irreducible", "every word of the normal form is irreducible", irreducible);
    res.table.header = {"input", "normal_form", "terms"};
    res.table.rows.push_back({cmd.args.at(0), shown, std::to_string(nf.size())});
    return res;
}

Result verb_pair(const Command& cmd) {
    Result res;
    const NCPoly x = uq::parse(cmd.args.at(0), cmd.mode);
    const NCPoly y = uq::parse(cmd.args.at(1), cmd.mode);
    const Scalar u = shapovalov::pairing(x, y, cmd.mode);
    const verma::Module m(verma::Variant::upper_hat, cmd.mode);
    const Scalar v = shapovalov::pairing_module(x, m.act(y, m.highest()));
    res.report.add("pair.routes", "lambda([S(x) y]_l) agrees with the module computation", u == v,
                   u.str() + " | " + v.str(), "pairing definition");
    res.table.header = {"x", "y", "value"};
    res.table.rows.push_back({cmd.args.at(0), cmd.args.at(1), u.str()});
    return res;
}

Result verb_gram(int max) {
    Result res;
    shapovalov::GramTable g;
    res.report = shapovalov::gram_report(max, std::min(max, kOffdiagMax), &g);
    res.table.header.push_back("k\\m");
    for (int m = 0; m <= max; ++m) res.table.header.push_back(std::to_string(m));
    for (int k = 0; k <= max; ++k) {
        std::vector<std::string> row{std::to_string(k)};
        for (int m = 0; m <= max; ++m) row.push_back(g.diag.at({k, m}).str());
        res.table.rows.push_back(std::move(row));
    }
    return res;
}

Result verb_star(int max) {
    Result res;
    res.report = shapovalov::star_report(max);
    res.table.header.push_back("k\\m");
    for (int m = 0; m <= max; ++m) res.table.header.push_back(std::to_string(m));
    for (int k = 0; k <= max; ++k) {
        std::vector<std::string> row{std::to_string(k)};
        for (int m = 0; m <= max; ++m) row.push_back(shapovalov::star_coefficient(k, m).str());
        res.table.rows.push_back(std::move(row));
    }
    return res;
}

Result verb_hilbert(int d) {
    Result res;
    res.table.header = {"degree", "quantum", "classical"};
    for (int e = 0; e <= d; ++e) {
        const std::size_t qd = sphere::quantum_filtered_dim(e), cd = sphere::classical_filtered_dim(e);
        res.report.add("hilbert." + std::to_string(e), "filtered dimension through degree " + std::to_string(e) +
                                                           " matches the classical sphere",
                       qd == cd, std::to_string(qd) + " vs " + std::to_string(cd), "flat deformation");
        res.table.rows.push_back({std::to_string(e), std::to_string(qd), std::to_string(cd)});
    }
    return res;
}

Result verb_decompose(int N) {
    Result res;
    std::vector<verma::DimensionRow> rows;
    res.report = verma::decompose_report(N, &rows);
    res.table.header = {"weight", "degree", "dim", "rank_V1", "rank_V2", "rank_sum"};
    for (const auto& r : rows)
        res.table.rows.push_back({"(" + std::to_string(r.weight[0]) + "," + std::to_string(r.weight[1]) + ")",
                                  std::to_string(r.degree), std::to_string(r.dim), std::to_string(r.rank1),
                                  std::to_string(r.rank2), std::to_string(r.rank_sum)});
    return res;
}

int positional_int(const Command& cmd, int fallback, const std::string& what) {
    return cmd.args.empty() ? fallback : to_int(cmd.args[0], what);
}

// degree-like positional arguments replace -N
Command with_positional_N(Command cmd) {
    cmd.N = positional_int(cmd, cmd.N, cmd.verb + " degree");
    return cmd;
}

} // namespace

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw ConfigError("unknown format '" + s + "' (json, csv or text)");
}

const std::vector<std::string>& verbs() {
    static const std::vector<std::string> v = {"nf",          "verify",    "pair",     "gram",     "qmatrix",
                                               "sphere-check", "hilbert", "star-table", "decompose", "singular"};
    return v;
}

const std::vector<std::string>& suites() {
    static const std::vector<std::string> v = [] {
        std::vector<std::string> n;
        for (const auto& s : suite_table()) n.push_back(s.name);
        n.push_back("all");
        return n;
    }();
    return v;
}

void validate(const Command& cmd) {
    const auto& vs = verbs();
    if (std::find(vs.begin(), vs.end(), cmd.verb) == vs.end()) {
        const std::string hint = suggest(cmd.verb, vs);
        throw ConfigError("unknown verb '" + cmd.verb + "'" + (hint.empty() ? "" : "; did you mean '" + hint + "'?"));
    }
    if (cmd.mode == Mode::plain) throw ConfigError("mode must be generic or special");
    if (cmd.algebra != "uq" && cmd.algebra != "sphere") throw ConfigError("algebra must be uq or sphere");
    if (cmd.threads < 1) throw ConfigError("thread count must be positive");
    if (cmd.guard < 0) throw ConfigError("guard band must be non-negative");

    auto need = [&](std::size_t lo, std::size_t hi) {
        if (cmd.args.size() < lo || cmd.args.size() > hi)
            throw ConfigError(cmd.verb + ": expected " +
                              (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
                              " arguments, got " + std::to_string(cmd.args.size()));
    };
    int N = cmd.N;
    if (cmd.verb == "nf") need(1, 1);
    else if (cmd.verb == "pair") need(2, 2);
    else if (cmd.verb == "verify") {
        need(1, 64);
        expand_suites(cmd.args);
    } else if (cmd.verb == "gram" || cmd.verb == "star-table") {
        need(0, 1);
        const int max = positional_int(cmd, kGramMax, cmd.verb + " size");
        if (max < 0) throw ConfigError(cmd.verb + ": size must be non-negative");
        if (cmd.mode != Mode::special)
            throw ConfigError(cmd.verb + ": the pairing is defined on the special quotient; use --mode special");
    } else if (cmd.verb == "hilbert") {
        need(0, 1);
        if (positional_int(cmd, kHilbertDegree, "hilbert degree") < 0)
            throw ConfigError("hilbert: degree must be non-negative");
    } else if (cmd.verb == "sphere-check") {
        need(0, 0);
    } else {
        need(0, 1);
        N = positional_int(cmd, cmd.N, cmd.verb + " degree");
    }
    if (N < 0) throw ConfigError("degree cap N must be non-negative");
    const bool guarded = cmd.verb == "verify" || cmd.verb == "qmatrix" || cmd.verb == "sphere-check";
    if (guarded && N < cmd.guard)
        throw ConfigError("degree cap N = " + std::to_string(N) + " is smaller than the guard band g = " +
                          std::to_string(cmd.guard));
}

Result run(const Command& cmd) {
    validate(cmd);
    const auto t0 = std::chrono::steady_clock::now();
    Result res;
    if (cmd.verb == "nf") res = verb_nf(cmd);
    else if (cmd.verb == "pair") res = verb_pair(cmd);
    else if (cmd.verb == "verify") res.report = run_suites(cmd, expand_suites(cmd.args));
    else if (cmd.verb == "gram") res = verb_gram(positional_int(cmd, kGramMax, "gram size"));
    else if (cmd.verb == "star-table") res = verb_star(positional_int(cmd, kGramMax, "star-table size"));
    else if (cmd.verb == "hilbert") res = verb_hilbert(positional_int(cmd, kHilbertDegree, "hilbert degree"));
    else if (cmd.verb == "decompose") res = verb_decompose(with_positional_N(cmd).N);
    else if (cmd.verb == "singular") res.report = verma::singular_report(with_positional_N(cmd).N);
    else if (cmd.verb == "qmatrix") {
        const Command c = with_positional_N(cmd);
        res.report = rmat::q_report(c.mode, c.N, c.guard);
        if (c.mode == Mode::special) res.report.merge(rmat::reflection_report(c.N, c.guard));
    } else if (cmd.verb == "sphere-check") {
        res.report = run_suites(cmd, {"sphere", "semiclassical"});
    }

    Report& r = res.report;
    r.suite = cmd.verb;
    r.config.clear();
    r.config["verb"] = cmd.verb;
    std::string args;
    for (const auto& a : cmd.args) args += (args.empty() ? "" : " ") + a;
    r.config["args"] = args;
    r.config["mode"] = std::string(mode_name(cmd.mode));
    r.config["N"] = std::to_string(cmd.N);
    r.config["guard"] = std::to_string(cmd.guard);
    r.config["seed"] = std::to_string(cmd.seed);
    if (!cmd.presentation.empty()) r.config["presentation"] = cmd.presentation;
    if (cmd.verb == "nf") r.config["algebra"] = cmd.algebra;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.exit_code = r.all_pass() ? kExitPass : kExitFail;
    return res;
}

std::string Table::csv() const {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string Table::text() const {
    std::vector<std::size_t> width(header.size(), 0);
    auto fit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], cells[i].size());
    };
    fit(header);
    for (const auto& r : rows) fit(r);
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "  " : "");
            if (i + 1 < cells.size()) os << std::left << std::setw(static_cast<int>(width[i]));
            os << cells[i];
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string render(const Result& r, Format f, bool with_timing) {
    switch (f) {
    case Format::csv:
        return r.table.empty() ? r.report.csv() : r.table.csv();
    case Format::json: {
        auto j = nlohmann::ordered_json::parse(r.report.json(with_timing));
        if (!r.table.empty()) j["table"] = {{"header", r.table.header}, {"rows", r.table.rows}};
        return j.dump(2) + "\n";
    }
    case Format::text:
    default: {
        std::string out = r.table.empty() ? "" : r.table.text() + "\n";
        out += r.report.text();
        if (with_timing) {
            std::ostringstream os;
            os << std::fixed << std::setprecision(3) << r.report.seconds;
            out += "time " + os.str() + " s\n";
        }
        return out;
    }
    }
}

int threads_from_env() {
    const char* s = std::getenv("QS4_THREADS");
    if (!s || !*s) return 1;
    const int n = to_int(s, "QS4_THREADS");
    if (n < 1) throw ConfigError("QS4_THREADS must be positive");
    return n;
}

} // namespace qs4::cli
