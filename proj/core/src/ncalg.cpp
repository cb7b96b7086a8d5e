#include "qs4/ncalg.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "qs4/expr.hpp"

namespace qs4 {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > 200) throw ConfigError("alphabet too large");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], static_cast<Letter>(i)).second)
            throw ConfigError("duplicate letter '" + names_[i] + "'");
    }
    inverse_.assign(names_.size(), -1);
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto it = index_.find(names_[i] + "^-1");
        if (it != index_.end()) {
            inverse_[i] = it->second;
            inverse_[it->second] = static_cast<int>(i);
        }
    }
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Letter Alphabet::at(const std::string& name) const {
    auto l = find(name);
    if (!l) throw ConfigError("unknown letter '" + name + "'");
    return *l;
}

std::optional<Letter> Alphabet::inverse(Letter l) const {
    if (inverse_[l] < 0) return std::nullopt;
    return static_cast<Letter>(inverse_[l]);
}

std::string Alphabet::render(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '*';
        s += names_[static_cast<Letter>(w[i])];
    }
    return s;
}

Word Alphabet::word(std::initializer_list<const char*> letters) const {
    Word w;
    for (const char* n : letters) w.push_back(static_cast<char>(at(n)));
    return w;
}

// ---------------------------------------------------------------- NCPoly

NCPoly::NCPoly(const Scalar& c) {
    if (!c.is_zero()) t_.emplace(Word(), c);
}

NCPoly NCPoly::monomial(const Word& w, const Scalar& c) {
    NCPoly p;
    if (!c.is_zero()) p.t_.emplace(w, c);
    return p;
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Scalar() : it->second;
}

Scalar NCPoly::as_scalar() const {
    if (!is_scalar()) throw Error("polynomial is not a scalar");
    return t_.empty() ? Scalar() : t_.begin()->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

void NCPoly::add_scaled(const NCPoly& p, const Scalar& c) {
    if (c.is_zero()) return;
    const bool one = c.is_one();
    for (const auto& [w, d] : p.t_) add_term(w, one ? d : d * c);
}

void NCPoly::add_scaled(const NCPoly& p, const Scalar& c, const Word& left, const Word& right) {
    if (c.is_zero()) return;
    for (const auto& [w, d] : p.t_) add_term(left + w + right, d * c);
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [w, d] : t_) d *= c;
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.t_)
        for (const auto& [wb, cb] : b.t_) r.add_term(wa + wb, ca * cb);
    return r;
}

NCPoly NCPoly::pow(int n) const {
    if (n < 0) throw Error("negative power of a polynomial");
    NCPoly r(Scalar(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::string NCPoly::str(const Alphabet& a) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [w, c] = *it;
        std::string term;
        const bool neg_one = c == Scalar(-1);
        if (w.empty()) {
            term = neg_one ? "1" : "(" + c.str() + ")";
        } else if (c.is_one() || neg_one) {
            term = a.render(w);
        } else {
            term = "(" + c.str() + ")*" + a.render(w);
        }
        if (first)
            s = neg_one ? "-" + term : term;
        else
            s += (neg_one ? " - " : " + ") + term;
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------- RewriteSystem

RewriteSystem::RewriteSystem(Alphabet alphabet)
    : alphabet_(std::move(alphabet)), mu_(std::make_unique<std::mutex>()) {}

RewriteSystem::RewriteSystem(const RewriteSystem& o)
    : alphabet_(o.alphabet_), rules_(o.rules_), lhs_index_(o.lhs_index_), max_lhs_(o.max_lhs_),
      confluent_degree_(o.confluent_degree_), mu_(std::make_unique<std::mutex>()) {
    std::lock_guard lk(*o.mu_);
    cache_ = o.cache_;
}

RewriteSystem& RewriteSystem::operator=(const RewriteSystem& o) {
    if (this == &o) return *this;
    alphabet_ = o.alphabet_;
    rules_ = o.rules_;
    lhs_index_ = o.lhs_index_;
    max_lhs_ = o.max_lhs_;
    confluent_degree_ = o.confluent_degree_;
    std::lock_guard lk(*o.mu_);
    cache_ = o.cache_;
    return *this;
}

void RewriteSystem::reindex() {
    lhs_index_.clear();
    max_lhs_ = 0;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        lhs_index_[rules_[i].lhs] = i;
        max_lhs_ = std::max(max_lhs_, static_cast<int>(rules_[i].lhs.size()));
    }
}

void RewriteSystem::clear_cache() const {
    std::lock_guard lk(*mu_);
    cache_.clear();
}

std::size_t RewriteSystem::cache_size() const {
    std::lock_guard lk(*mu_);
    return cache_.size();
}

void RewriteSystem::add_relation(const NCPoly& p, const std::string& origin) {
    if (p.is_zero()) return;
    const Word lw = p.leading_word();
    const Scalar lc = p.leading_coeff();
    NCPoly rhs = p;
    rhs.add_term(lw, -lc);
    rhs *= -lc.inverse();
    add_rule(lw, rhs, origin);
}

void RewriteSystem::add_rule(const Word& lhs, const NCPoly& rhs, const std::string& origin) {
    for (const auto& [w, c] : rhs.terms()) {
        if (!deglex_less(w, lhs))
            throw OrderError("rule " + alphabet_.render(lhs) + " -> " + rhs.str(alphabet_) +
                             ": term " + alphabet_.render(w) + " is not smaller than the left side");
    }
    if (lhs.empty()) throw OrderError("relation reduces to a nonzero constant");
    if (auto it = lhs_index_.find(lhs); it != lhs_index_.end()) {
        NCPoly diff = reduce(rules_[it->second].rhs - rhs);
        add_relation(diff, origin.empty() ? "duplicate left side" : origin);
        return;
    }
    // interreduce: drop rules whose left side contains the new one
    std::vector<Rule> displaced;
    std::vector<Rule> kept;
    for (auto& r : rules_) {
        if (r.lhs.size() > lhs.size() && r.lhs.find(lhs) != Word::npos)
            displaced.push_back(std::move(r));
        else
            kept.push_back(std::move(r));
    }
    rules_ = std::move(kept);
    rules_.push_back({lhs, rhs, origin});
    reindex();
    confluent_degree_ = -1;
    clear_cache();
    for (auto& r : displaced) {
        NCPoly p = NCPoly::monomial(r.lhs) - r.rhs;
        add_relation(reduce(p), r.origin + " [interreduced]");
    }
}

bool RewriteSystem::remove_rule(const Word& lhs) {
    auto it = lhs_index_.find(lhs);
    if (it == lhs_index_.end()) return false;
    rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(it->second));
    reindex();
    confluent_degree_ = -1;
    clear_cache();
    return true;
}

std::optional<std::size_t> RewriteSystem::prefix_rule(const Word& w) const {
    const std::size_t top = std::min<std::size_t>(w.size(), static_cast<std::size_t>(max_lhs_));
    for (std::size_t len = 1; len <= top; ++len) {
        auto it = lhs_index_.find(w.substr(0, len));
        if (it != lhs_index_.end()) return it->second;
    }
    return std::nullopt;
}

const NCPoly& RewriteSystem::normal_form(const Word& w) const {
    {
        std::lock_guard lk(*mu_);
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    }
    NCPoly r;
    if (w.size() <= 1) {
        auto it = lhs_index_.find(w);
        if (it == lhs_index_.end())
            r = NCPoly::monomial(w);
        else
            r = reduce(rules_[it->second].rhs);
    } else {
        const NCPoly& tail = normal_form(w.substr(1));
        r = left_mul(static_cast<Letter>(w[0]), tail);
    }
    std::lock_guard lk(*mu_);
    return cache_.emplace(w, std::move(r)).first->second;
}

NCPoly RewriteSystem::left_mul(Letter x, const NCPoly& p) const {
    NCPoly r;
    for (const auto& [t, c] : p.terms()) {
        Word w;
        w.reserve(t.size() + 1);
        w.push_back(static_cast<char>(x));
        w += t;
        // t is irreducible, so any match in x*t starts at position 0
        auto ri = prefix_rule(w);
        if (!ri) {
            r.add_term(w, c);
            continue;
        }
        const Rule& rule = rules_[*ri];
        const Word rest = w.substr(rule.lhs.size());
        for (const auto& [s, d] : rule.rhs.terms()) r.add_scaled(normal_form(s + rest), c * d);
    }
    return r;
}

NCPoly RewriteSystem::reduce(const NCPoly& p) const {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) r.add_scaled(normal_form(w), c);
    return r;
}

NCPoly RewriteSystem::mul(const NCPoly& a, const NCPoly& b) const {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add_scaled(normal_form(wa + wb), ca * cb);
    return r;
}

bool RewriteSystem::is_irreducible(const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
        const std::size_t top = std::min<std::size_t>(w.size() - i, static_cast<std::size_t>(max_lhs_));
        for (std::size_t len = 1; len <= top; ++len)
            if (lhs_index_.count(w.substr(i, len))) return false;
    }
    return true;
}

std::vector<Ambiguity> RewriteSystem::ambiguities(int max_degree) const {
    std::vector<Ambiguity> out;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Word& li = rules_[i].lhs;
        for (std::size_t j = 0; j < rules_.size(); ++j) {
            const Word& lj = rules_[j].lhs;
            const std::size_t kmax = std::min(li.size(), lj.size()) - 1;
            for (std::size_t k = 1; k <= kmax; ++k) {
                if (li.size() + lj.size() - k > static_cast<std::size_t>(max_degree)) continue;
                if (li.compare(li.size() - k, k, lj, 0, k) != 0) continue;
                Ambiguity a;
                a.word = li + lj.substr(k);
                a.first = i;
                a.second = j;
                out.push_back(std::move(a));
            }
            if (i != j && lj.size() < li.size() && li.size() <= static_cast<std::size_t>(max_degree)) {
                for (std::size_t p = li.find(lj); p != Word::npos; p = li.find(lj, p + 1)) {
                    Ambiguity a;
                    a.word = li;
                    a.first = i;
                    a.second = j;
                    a.inclusion = true;
                    out.push_back(std::move(a));
                    break;
                }
            }
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Ambiguity& a, const Ambiguity& b) { return deglex_less(a.word, b.word); });
    return out;
}

NCPoly RewriteSystem::spoly(const Ambiguity& a) const {
    const Rule& r1 = rules_[a.first];
    const Rule& r2 = rules_[a.second];
    NCPoly s;
    if (a.inclusion) {
        const std::size_t p = r1.lhs.find(r2.lhs);
        s.add_scaled(r1.rhs, Scalar(1));
        s.add_scaled(r2.rhs, Scalar(-1), r1.lhs.substr(0, p), r1.lhs.substr(p + r2.lhs.size()));
    } else {
        const std::size_t k = r1.lhs.size() + r2.lhs.size() - a.word.size();
        s.add_scaled(r1.rhs, Scalar(1), Word(), r2.lhs.substr(k));
        s.add_scaled(r2.rhs, Scalar(-1), r1.lhs.substr(0, r1.lhs.size() - k), Word());
    }
    return reduce(s);
}

std::vector<Ambiguity> RewriteSystem::overlap_report(int max_degree) const {
    auto amb = ambiguities(max_degree);
    for (auto& a : amb) a.residual = spoly(a);
    return amb;
}

CompletionLog RewriteSystem::complete(int max_degree) {
    CompletionLog log;
    log.max_degree = max_degree;
    for (;;) {
        ++log.passes;
        bool changed = false;
        auto amb = ambiguities(max_degree);
        // ambiguities refer to rules by left side so that they survive edits
        std::vector<std::pair<Word, Word>> keys;
        keys.reserve(amb.size());
        for (const auto& a : amb) keys.emplace_back(rules_[a.first].lhs, rules_[a.second].lhs);
        for (std::size_t n = 0; n < amb.size(); ++n) {
            auto i1 = lhs_index_.find(keys[n].first);
            auto i2 = lhs_index_.find(keys[n].second);
            if (i1 == lhs_index_.end() || i2 == lhs_index_.end()) continue;
            Ambiguity a = amb[n];
            a.first = i1->second;
            a.second = i2->second;
            ++log.ambiguities_checked;
            NCPoly r = spoly(a);
            if (r.is_zero()) continue;
            const std::string src = std::string(a.inclusion ? "inclusion " : "overlap ") +
                                    alphabet_.render(a.word);
            std::vector<Word> old;
            for (const auto& rule : rules_) old.push_back(rule.lhs);
            add_relation(r, src);
            for (const auto& w : old)
                if (!lhs_index_.count(w)) log.removed.push_back(alphabet_.render(w));
            for (const auto& nr : rules_)
                if (std::find(old.begin(), old.end(), nr.lhs) == old.end())
                    log.added.push_back(alphabet_.render(nr.lhs) + " -> " + nr.rhs.str(alphabet_) + "  [" +
                                        src + "]");
            changed = true;
        }
        if (!changed) break;
    }
    confluent_degree_ = max_degree;
    return log;
}

RewriteSystem RewriteSystem::completed(int max_degree, CompletionLog* log) const {
    RewriteSystem s(*this);
    CompletionLog l = s.complete(max_degree);
    if (log) *log = std::move(l);
    return s;
}

bool RewriteSystem::globally_confluent() const {
    return confluent_degree_ >= 0 && confluent_degree_ >= 2 * max_lhs_ - 1;
}

std::vector<Word> RewriteSystem::irreducible_words(int length, const std::vector<Letter>& letters) const {
    std::vector<Word> out;
    Word cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (Letter l : letters) {
            cur.push_back(static_cast<char>(l));
            bool ok = true;
            const std::size_t top = std::min<std::size_t>(cur.size(), static_cast<std::size_t>(max_lhs_));
            for (std::size_t len = 1; len <= top && ok; ++len)
                if (lhs_index_.count(cur.substr(cur.size() - len))) ok = false;
            if (ok) rec();
            cur.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end(), DegLex{});
    return out;
}

std::size_t RewriteSystem::count_irreducible(int length, const std::vector<Letter>& letters) const {
    return irreducible_words(length, letters).size();
}

std::string RewriteSystem::status() const {
    std::ostringstream os;
    os << rules_.size() << " rules, max left side " << max_lhs_ << ", ";
    if (confluent_degree_ < 0)
        os << "not completed";
    else if (globally_confluent())
        os << "confluent through degree " << confluent_degree_ << " (covers all ambiguities: globally confluent)";
    else
        os << "confluent through degree " << confluent_degree_;
    return os.str();
}

// ---------------------------------------------------------------- presentation files

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

RewriteSystem read_presentation(std::istream& in, Mode mu_mode) {
    std::optional<RewriteSystem> sys;
    ParseContext ctx;
    ctx.mu_mode = mu_mode;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg, std::size_t off) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg, off);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line;
        std::string comment;
        if (auto h = body.find('#'); h != std::string::npos) {
            comment = trim(body.substr(h + 1));
            body = body.substr(0, h);
        }
        body = trim(body);
        if (body.empty()) continue;
        const auto colon = body.find(':');
        if (colon == std::string::npos) fail("expected 'key: value'", 0);
        const std::string key = trim(body.substr(0, colon));
        const std::string val = trim(body.substr(colon + 1));
        if (key == "alphabet") {
            std::istringstream ls(val);
            std::vector<std::string> names;
            for (std::string n; ls >> n;) names.push_back(n);
            sys.emplace(Alphabet(names));
            ctx.alphabet = &sys->alphabet();
        } else if (key == "order") {
            if (val != "deglex") throw ConfigError("unsupported monomial order '" + val + "'");
        } else if (key == "relation" || key == "rule") {
            if (!sys) fail("relation before alphabet", 0);
            const std::string sep = key == "rule" ? "->" : "=";
            const auto eq = val.find(sep);
            if (eq == std::string::npos) fail("expected '" + sep + "'", 0);
            const std::size_t base = line.find(val);
            NCPoly lhs, rhs;
            try {
                lhs = parse_expr(val.substr(0, eq), ctx);
                rhs = parse_expr(val.substr(eq + sep.size()), ctx);
            } catch (const ParseError& e) {
                fail(e.what(), base == std::string::npos ? e.offset : base + e.offset);
            }
            const bool word_lhs = lhs.size() == 1 && lhs.leading_coeff().is_one();
            if (key == "rule") {
                if (!word_lhs) fail("rule left side must be a single word", base);
                sys->add_rule(lhs.leading_word(), rhs, comment);
            } else if (word_lhs) {
                const Word& lw = lhs.leading_word();
                for (const auto& [w, c] : rhs.terms())
                    if (!deglex_less(w, lw))
                        throw OrderError("line " + std::to_string(lineno) + ": left side " +
                                         sys->alphabet().render(lw) + " is not the leading word (" +
                                         sys->alphabet().render(w) + " is larger)");
                sys->add_rule(lw, rhs, comment.empty() ? "line " + std::to_string(lineno) : comment);
            } else {
                sys->add_relation(lhs - rhs, comment.empty() ? "line " + std::to_string(lineno) : comment);
            }
        } else {
            fail("unknown key '" + key + "'", 0);
        }
    }
    if (!sys) throw ParseError("presentation has no alphabet", 0);
    return std::move(*sys);
}

RewriteSystem read_presentation_file(const std::string& path, Mode mu_mode) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open presentation file '" + path + "'");
    return read_presentation(f, mu_mode);
}

void write_presentation(std::ostream& out, const RewriteSystem& sys, const std::string& header) {
    if (!header.empty()) {
        std::istringstream hs(header);
        for (std::string l; std::getline(hs, l);) out << "# " << l << "\n";
    }
    out << "# " << sys.status() << "\n";
    out << "alphabet:";
    for (const auto& n : sys.alphabet().names()) out << ' ' << n;
    out << "\norder: deglex\n";
    for (const auto& r : sys.rules()) {
        out << "rule: " << sys.alphabet().render(r.lhs) << " -> " << r.rhs.str(sys.alphabet());
        if (!r.origin.empty()) out << "  # " << r.origin;
        out << "\n";
    }
}

} // namespace qs4
