#include "qs4/uq.hpp"

#include <mutex>
#include <random>
#include <sstream>

#include "qs4/linalg.hpp"

namespace qs4::uq {

namespace {

bool is_f(Letter l) { return l == Fa || l == Fb; }
bool is_k(Letter l) { return l >= Ka && l <= Kbi; }
bool is_e(Letter l) { return l == Ea || l == Eb; }

Word w1(Letter a) { return Word(1, static_cast<char>(a)); }
Word w2(Letter a, Letter b) {
    Word w;
    w.push_back(static_cast<char>(a));
    w.push_back(static_cast<char>(b));
    return w;
}

NCPoly mono(std::initializer_list<Letter> ls, const Scalar& c = Scalar(1)) {
    Word w;
    for (Letter l : ls) w.push_back(static_cast<char>(l));
    return NCPoly::monomial(w, c);
}

// root of the Cartan letter and the sign of its exponent
EpsWeight k_root(Letter k) { return (k == Ka || k == Kai) ? kAlpha : kBeta; }
int k_sign(Letter k) { return (k == Ka || k == Kb) ? 1 : -1; }

} // namespace

EpsWeight letter_weight(Letter l) {
    switch (l) {
    case Ea: return kAlpha;
    case Eb: return kBeta;
    case Fa: return scale(-1, kAlpha);
    case Fb: return scale(-1, kBeta);
    default: return {0, 0};
    }
}

EpsWeight word_weight(const Word& w) {
    EpsWeight r{0, 0};
    for (char ch : w) r = r + letter_weight(static_cast<Letter>(ch));
    return r;
}

const Alphabet& alphabet() {
    static const Alphabet a({"Fa", "Fb", "Ka", "Ka^-1", "Kb", "Kb^-1", "Ea", "Eb"});
    return a;
}

RewriteSystem defining_system() {
    RewriteSystem sys(alphabet());
    const Scalar q = Scalar::q();
    const Letter ks[] = {Ka, Kai, Kb, Kbi};
    // inverses and commuting Cartan letters
    sys.add_rule(w2(Kai, Ka), NCPoly(Scalar(1)), "Ka^-1*Ka = 1");
    sys.add_rule(w2(Ka, Kai), NCPoly(Scalar(1)), "Ka*Ka^-1 = 1");
    sys.add_rule(w2(Kbi, Kb), NCPoly(Scalar(1)), "Kb^-1*Kb = 1");
    sys.add_rule(w2(Kb, Kbi), NCPoly(Scalar(1)), "Kb*Kb^-1 = 1");
    for (Letter b : {Kb, Kbi})
        for (Letter a : {Ka, Kai}) sys.add_rule(w2(b, a), mono({a, b}), "Cartan letters commute");
    // K X K^-1 = q^{(root, wt X)} X
    for (Letter k : ks) {
        for (Letter x : {Fa, Fb}) {
            const int e = k_sign(k) * inner(k_root(k), letter_weight(x));
            sys.add_rule(w2(k, x), mono({x, k}, q.pow(e)), "K-conjugation");
        }
        for (Letter x : {Ea, Eb}) {
            const int e = k_sign(k) * inner(k_root(k), letter_weight(x));
            sys.add_rule(w2(x, k), mono({k, x}, q.pow(-e)), "K-conjugation");
        }
    }
    // [E, F]
    {
        NCPoly r = mono({Fa, Ea}) + (mono({Ka}) - mono({Kai})) * (q - q.inverse()).inverse();
        sys.add_rule(w2(Ea, Fa), r, "[Ea,Fa]");
        NCPoly s = mono({Fb, Eb}) + (mono({Kb}) - mono({Kbi})) * (q.pow(2) - q.pow(-2)).inverse();
        sys.add_rule(w2(Eb, Fb), s, "[Eb,Fb]");
        sys.add_rule(w2(Ea, Fb), mono({Fb, Ea}), "[Ea,Fb] = 0");
        sys.add_rule(w2(Eb, Fa), mono({Fa, Eb}), "[Eb,Fa] = 0");
    }
    // Serre relations
    const Scalar three = q.pow(2) + 1 + q.pow(-2);
    const Scalar two_b = q.pow(2) + q.pow(-2);
    for (auto [x, y, tag] : {std::tuple{Ea, Eb, "E"}, std::tuple{Fa, Fb, "F"}}) {
        NCPoly s1 = mono({x, x, x, y}) - mono({x, x, y, x}, three) + mono({x, y, x, x}, three) - mono({y, x, x, x});
        sys.add_relation(s1, std::string("Serre ") + tag + " (cubic)");
        NCPoly s2 = mono({y, y, x}) - mono({y, x, y}, two_b) + mono({x, y, y});
        sys.add_relation(s2, std::string("Serre ") + tag + " (quadratic)");
    }
    return sys;
}

namespace {

struct AlgebraHolder {
    CompletionLog log;
    RewriteSystem sys;
    AlgebraHolder() : sys(defining_system()) {
        log = sys.complete(kCompletionDegree);
        // one more pass covers every overlap once no rule is longer than 5
        if (!sys.globally_confluent()) log = sys.complete(2 * sys.max_lhs_length() - 1);
    }
};

AlgebraHolder& holder() {
    static AlgebraHolder h;
    return h;
}

} // namespace

const RewriteSystem& algebra() { return holder().sys; }
const CompletionLog& completion_log() { return holder().log; }

NCPoly gen(Gen g) { return NCPoly::letter(g); }

NCPoly K(int a, int b) {
    Word w;
    w.append(static_cast<std::size_t>(std::abs(a)), static_cast<char>(a >= 0 ? Ka : Kai));
    w.append(static_cast<std::size_t>(std::abs(b)), static_cast<char>(b >= 0 ? Kb : Kbi));
    return NCPoly::monomial(w);
}

NCPoly root_vector(Root r, bool positive, bool usual) {
    const Scalar q = Scalar::q();
    const RewriteSystem& A = algebra();
    if (positive) {
        switch (r) {
        case Root::alpha: return gen(Ea);
        case Root::beta: return gen(Eb);
        case Root::gamma: return A.reduce(mono({Ea, Eb}) - mono({Eb, Ea}, q.pow(2)));
        case Root::delta: {
            NCPoly g = root_vector(Root::gamma, true);
            return A.reduce(gen(Ea) * g - g * gen(Ea) * (usual ? Scalar(1) : q.pow(-2)));
        }
        }
    } else {
        switch (r) {
        case Root::alpha: return gen(Fa);
        case Root::beta: return gen(Fb);
        case Root::gamma: return A.reduce(mono({Fb, Fa}) - mono({Fa, Fb}, q.pow(-2)));
        case Root::delta: {
            NCPoly g = root_vector(Root::gamma, false);
            return A.reduce(g * gen(Fa) - gen(Fa) * g * (usual ? Scalar(1) : q.pow(2)));
        }
        }
    }
    return {};
}

NCPoly x2_tilde() {
    const Scalar q = Scalar::q();
    return mono({Eb, Ea}, q.pow(4)) - mono({Ea, Eb}, q.pow(2));
}

ParseContext parse_context(Mode mu_mode) {
    ParseContext ctx;
    ctx.alphabet = &alphabet();
    ctx.mu_mode = mu_mode;
    ctx.macros["Eg"] = root_vector(Root::gamma, true);
    ctx.macros["Ed"] = root_vector(Root::delta, true);
    ctx.macros["Fg"] = root_vector(Root::gamma, false);
    ctx.macros["Fd"] = root_vector(Root::delta, false);
    return ctx;
}

NCPoly parse(const std::string& text, Mode mu_mode) { return parse_expr(text, parse_context(mu_mode)); }

// ---------------------------------------------------------------- Hopf structure

void TensorElement::add(const Word& a, const Word& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, ins] = terms.try_emplace({a, b}, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, -c);
    return *this;
}

TensorElement TensorElement::mul(const TensorElement& o, const RewriteSystem& sys) const {
    TensorElement r;
    for (const auto& [k1, c1] : terms)
        for (const auto& [k2, c2] : o.terms) {
            const NCPoly& a = sys.normal_form(k1.first + k2.first);
            const NCPoly& b = sys.normal_form(k1.second + k2.second);
            const Scalar c = c1 * c2;
            for (const auto& [wa, ca] : a.terms())
                for (const auto& [wb, cb] : b.terms()) r.add(wa, wb, c * ca * cb);
        }
    return r;
}

std::string TensorElement::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*" + alphabet().render(k.first) + " (x) " + alphabet().render(k.second);
    }
    return s;
}

namespace {

TensorElement coproduct_letter(Letter l) {
    TensorElement t;
    switch (l) {
    case Ea:
        t.add(w1(Ea), Word(), 1);
        t.add(w1(Ka), w1(Ea), 1);
        break;
    case Eb:
        t.add(w1(Eb), Word(), 1);
        t.add(w1(Kb), w1(Eb), 1);
        break;
    case Fa:
        t.add(w1(Fa), w1(Kai), 1);
        t.add(Word(), w1(Fa), 1);
        break;
    case Fb:
        t.add(w1(Fb), w1(Kbi), 1);
        t.add(Word(), w1(Fb), 1);
        break;
    default: t.add(w1(l), w1(l), 1); break;
    }
    return t;
}

NCPoly antipode_letter(Letter l) {
    switch (l) {
    case Ea: return mono({Kai, Ea}, -1);
    case Eb: return mono({Kbi, Eb}, -1);
    case Fa: return mono({Fa, Ka}, -1);
    case Fb: return mono({Fb, Kb}, -1);
    case Ka: return mono({Kai});
    case Kai: return mono({Ka});
    case Kb: return mono({Kbi});
    default: return mono({Kb});
    }
}

} // namespace

TensorElement coproduct(const NCPoly& x) {
    const RewriteSystem& A = algebra();
    TensorElement out;
    for (const auto& [w, c] : x.terms()) {
        TensorElement t;
        t.add(Word(), Word(), c);
        for (char ch : w) t = t.mul(coproduct_letter(static_cast<Letter>(ch)), A);
        out += t;
    }
    return out;
}

NCPoly antipode(const NCPoly& x) {
    const RewriteSystem& A = algebra();
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
        NCPoly t(c);
        for (auto it = w.rbegin(); it != w.rend(); ++it) t = A.mul(t, antipode_letter(static_cast<Letter>(*it)));
        out += t;
    }
    return out;
}

Scalar counit(const NCPoly& x) {
    Scalar s;
    for (const auto& [w, c] : x.terms()) {
        bool zero = false;
        for (char ch : w)
            if (!is_k(static_cast<Letter>(ch))) zero = true;
        if (!zero) s += c;
    }
    return s;
}

Letter omega_letter(Letter l) {
    switch (l) {
    case Ea: return Fa;
    case Fa: return Ea;
    case Eb: return Fb;
    case Fb: return Eb;
    case Ka: return Kai;
    case Kai: return Ka;
    case Kb: return Kbi;
    default: return Kb;
    }
}

NCPoly omega(const NCPoly& x) {
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
        Word m = w;
        for (char& ch : m) ch = static_cast<char>(omega_letter(static_cast<Letter>(ch)));
        out.add_scaled(algebra().normal_form(m), c);
    }
    return out;
}

// ---------------------------------------------------------------- PBW

std::string PbwIndex::str() const {
    std::ostringstream os;
    os << "F(" << f[0] << ',' << f[1] << ',' << f[2] << ',' << f[3] << ")K(" << r << ',' << s << ")E(" << e[0]
       << ',' << e[1] << ',' << e[2] << ',' << e[3] << ')';
    return os.str();
}

Triangular split(const Word& w) {
    Triangular t;
    int phase = 0;
    for (char ch : w) {
        const Letter l = static_cast<Letter>(ch);
        const int p = is_f(l) ? 0 : is_k(l) ? 1 : 2;
        if (p < phase) throw Error("word " + alphabet().render(w) + " is not of triangular shape");
        phase = p;
        if (p == 0)
            t.f.push_back(ch);
        else if (p == 2)
            t.e.push_back(ch);
        else if (l == Ka)
            ++t.r;
        else if (l == Kai)
            --t.r;
        else if (l == Kb)
            ++t.s;
        else
            --t.s;
    }
    return t;
}

namespace {

using Exp4 = std::array<int, 4>;

struct SideTables {
    std::mutex mu;
    std::map<Exp4, NCPoly> monomials;
    std::map<std::pair<int, int>, bool> built;
    std::map<Word, std::map<Exp4, Scalar>> coords;
};

SideTables& tables(bool positive) {
    static SideTables f, e;
    return positive ? e : f;
}

// (count of alpha letters, count of beta letters) of a PBW monomial
std::pair<int, int> bidegree(const Exp4& x, bool positive) {
    if (!positive) return {x[0] + 2 * x[1] + x[2], x[1] + x[2] + x[3]};  // a d c b
    return {x[1] + 2 * x[2] + x[3], x[0] + x[1] + x[2]};                 // b' c' d' a'
}

std::vector<Exp4> monomials_of(int na, int nb, bool positive) {
    std::vector<Exp4> out;
    for (int x0 = 0; x0 <= na + nb; ++x0)
        for (int x1 = 0; x1 <= na + nb; ++x1)
            for (int x2 = 0; x2 <= na + nb; ++x2)
                for (int x3 = 0; x3 <= na + nb; ++x3) {
                    Exp4 x{x0, x1, x2, x3};
                    if (bidegree(x, positive) == std::pair{na, nb}) out.push_back(x);
                }
    return out;
}

NCPoly build_monomial(const Exp4& x, bool positive) {
    const RewriteSystem& A = algebra();
    NCPoly r(Scalar(1));
    if (!positive) {
        const NCPoly fd = root_vector(Root::delta, false), fg = root_vector(Root::gamma, false);
        for (int i = 0; i < x[0]; ++i) r = A.mul(r, gen(Fa));
        for (int i = 0; i < x[1]; ++i) r = A.mul(r, fd);
        for (int i = 0; i < x[2]; ++i) r = A.mul(r, fg);
        for (int i = 0; i < x[3]; ++i) r = A.mul(r, gen(Fb));
    } else {
        const NCPoly ed = root_vector(Root::delta, true), eg = root_vector(Root::gamma, true);
        for (int i = 0; i < x[0]; ++i) r = A.mul(r, gen(Eb));
        for (int i = 0; i < x[1]; ++i) r = A.mul(r, eg);
        for (int i = 0; i < x[2]; ++i) r = A.mul(r, ed);
        for (int i = 0; i < x[3]; ++i) r = A.mul(r, gen(Ea));
    }
    return r;
}

void check_bound(std::size_t length) {
    const RewriteSystem& A = algebra();
    if (!A.globally_confluent() && static_cast<int>(length) > A.confluent_degree())
        throw BoundError("PBW coordinates of degree " + std::to_string(length) +
                         " need completion beyond degree " + std::to_string(A.confluent_degree()) +
                         "; re-complete the presentation with a higher degree");
}

void build_block(int na, int nb, bool positive) {
    SideTables& T = tables(positive);
    // called with T.mu held
    if (T.built.count({na, nb})) return;
    check_bound(static_cast<std::size_t>(na + nb));
    const RewriteSystem& A = algebra();
    auto mons = monomials_of(na, nb, positive);
    const Letter la = positive ? Ea : Fa, lb = positive ? Eb : Fb;
    std::vector<Word> words;
    for (const Word& w : A.irreducible_words(na + nb, {la, lb})) {
        int ca = 0;
        for (char ch : w) ca += static_cast<Letter>(ch) == la;
        if (ca == na) words.push_back(w);
    }
    if (words.size() != mons.size())
        throw Error("PBW count mismatch in bidegree (" + std::to_string(na) + "," + std::to_string(nb) +
                    "): " + std::to_string(words.size()) + " irreducible words, " + std::to_string(mons.size()) +
                    " monomials");
    std::map<Word, std::size_t> col;
    for (std::size_t j = 0; j < words.size(); ++j) col[words[j]] = j;
    std::vector<const NCPoly*> expanded;
    std::map<Word, std::size_t> by_lead;
    for (const Exp4& x : mons) {
        NCPoly m = build_monomial(x, positive);
        for (const auto& [w, c] : m.terms())
            if (!col.count(w)) throw Error("PBW monomial expands outside its block");
        by_lead.emplace(m.leading_word(), expanded.size());
        expanded.push_back(&T.monomials.emplace(x, std::move(m)).first->second);
    }
    if (by_lead.size() == mons.size()) {
        // distinct leading words: the expansion matrix is triangular, solve upwards
        for (const auto& [lead, i] : by_lead) {
            const NCPoly& m = *expanded[i];
            std::map<Exp4, Scalar> acc{{mons[i], Scalar(1)}};
            for (const auto& [w, c] : m.terms()) {
                if (w == lead) continue;
                for (const auto& [x, cx] : T.coords.at(w)) {
                    auto [it, ins] = acc.try_emplace(x, -(c * cx));
                    if (!ins) {
                        it->second -= c * cx;
                        if (it->second.is_zero()) acc.erase(it);
                    }
                }
            }
            const Scalar inv = m.leading_coeff().inverse();
            for (auto& [x, cx] : acc) cx *= inv;
            T.coords[lead] = std::move(acc);
        }
    } else {
        Mat B = zero_mat(mons.size(), words.size());
        for (std::size_t i = 0; i < mons.size(); ++i)
            for (const auto& [w, c] : expanded[i]->terms()) B[i][col.at(w)] = c;
        Mat Binv = inverse(B);
        for (std::size_t j = 0; j < words.size(); ++j) {
            auto& dst = T.coords[words[j]];
            for (std::size_t i = 0; i < mons.size(); ++i)
                if (!Binv[j][i].is_zero()) dst.emplace(mons[i], Binv[j][i]);
        }
    }
    T.built[{na, nb}] = true;
}

const std::map<Exp4, Scalar>& word_coords(const Word& w, bool positive) {
    SideTables& T = tables(positive);
    std::lock_guard lk(T.mu);
    auto it = T.coords.find(w);
    if (it != T.coords.end()) return it->second;
    const Letter la = positive ? Ea : Fa;
    int na = 0;
    for (char ch : w) {
        const Letter l = static_cast<Letter>(ch);
        if (positive ? !is_e(l) : !is_f(l)) throw Error("word has letters outside the PBW side");
        na += l == la;
    }
    if (!algebra().is_irreducible(w)) throw Error("PBW coordinates need a normal-form word");
    build_block(na, static_cast<int>(w.size()) - na, positive);
    return T.coords.at(w);
}

const NCPoly& monomial(const Exp4& x, bool positive) {
    SideTables& T = tables(positive);
    std::lock_guard lk(T.mu);
    auto it = T.monomials.find(x);
    if (it != T.monomials.end()) return it->second;
    auto [na, nb] = bidegree(x, positive);
    build_block(na, nb, positive);
    return T.monomials.at(x);
}

} // namespace

const std::map<std::array<int, 4>, Scalar>& f_word_coords(const Word& w) { return word_coords(w, false); }
const std::map<std::array<int, 4>, Scalar>& e_word_coords(const Word& w) { return word_coords(w, true); }
const NCPoly& f_monomial(const std::array<int, 4>& adcb) { return monomial(adcb, false); }
const NCPoly& e_monomial(const std::array<int, 4>& bcda) { return monomial(bcda, true); }

PbwCoords to_pbw(const NCPoly& x) {
    PbwCoords out;
    const NCPoly nf = algebra().reduce(x);
    for (const auto& [w, c] : nf.terms()) {
        Triangular t = split(w);
        static const std::map<Exp4, Scalar> unit{{Exp4{0, 0, 0, 0}, Scalar(1)}};
        const auto& fc = t.f.empty() ? unit : f_word_coords(t.f);
        const auto& ec = t.e.empty() ? unit : e_word_coords(t.e);
        for (const auto& [fi, cf] : fc)
            for (const auto& [ei, ce] : ec) {
                PbwIndex idx;
                idx.f = fi;
                idx.r = t.r;
                idx.s = t.s;
                idx.e = ei;
                auto [it, ins] = out.try_emplace(idx, c * cf * ce);
                if (!ins) {
                    it->second += c * cf * ce;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
    }
    return out;
}

NCPoly from_pbw(const PbwCoords& coords) {
    NCPoly out;
    for (const auto& [idx, c] : coords) {
        const NCPoly& f = f_monomial(idx.f);
        const NCPoly& e = e_monomial(idx.e);
        const Word k = K(idx.r, idx.s).leading_word();
        for (const auto& [wf, cf] : f.terms())
            for (const auto& [we, ce] : e.terms()) out.add_term(wf + k + we, c * cf * ce);
    }
    return algebra().reduce(out);
}

Scalar project_l(const NCPoly& x, Mode mu_mode) {
    const NCPoly nf = algebra().reduce(x);
    Scalar out;
    for (const auto& [w, c] : nf.terms()) {
        Triangular t = split(w);
        if (!t.f.empty() || !t.e.empty()) continue;
        out += t.r == 0 ? c : c * Scalar::mu_pow(mu_mode, t.r);
    }
    return out;
}

// ---------------------------------------------------------------- suites

namespace {

struct Identity {
    std::string id;
    std::string claim;
    std::string text;
};

// relations written in the parser grammar so they can be checked against any
// presentation with the same letter names
const std::vector<Identity>& defining_identities() {
    static const std::vector<Identity> ids = {
        {"defining.cartan.inverse", "Ka*Ka^-1 = 1 = Kb*Kb^-1", "Ka*Ka^-1 - 1 + Ka^-1*Ka - 1 + Kb*Kb^-1 - 1 + Kb^-1*Kb - 1"},
        {"defining.cartan.commute", "Ka*Kb = Kb*Ka", "Ka*Kb - Kb*Ka"},
        {"defining.kconj.KaEa", "Ka*Ea = q^2*Ea*Ka", "Ka*Ea - q^2*Ea*Ka"},
        {"defining.kconj.KbEb", "Kb*Eb = q^4*Eb*Kb", "Kb*Eb - q^4*Eb*Kb"},
        {"defining.kconj.KaEb", "Ka*Eb = q^-2*Eb*Ka", "Ka*Eb - q^-2*Eb*Ka"},
        {"defining.kconj.KbEa", "Kb*Ea = q^-2*Ea*Kb", "Kb*Ea - q^-2*Ea*Kb"},
        {"defining.kconj.KaFa", "Ka*Fa = q^-2*Fa*Ka", "Ka*Fa - q^-2*Fa*Ka"},
        {"defining.kconj.KbFb", "Kb*Fb = q^-4*Fb*Kb", "Kb*Fb - q^-4*Fb*Kb"},
        {"defining.kconj.KaFb", "Ka*Fb = q^2*Fb*Ka", "Ka*Fb - q^2*Fb*Ka"},
        {"defining.kconj.KbFa", "Kb*Fa = q^2*Fa*Kb", "Kb*Fa - q^2*Fa*Kb"},
        {"defining.comm.EaFa", "[Ea,Fa] = (Ka - Ka^-1)/(q - q^-1)", "Ea*Fa - Fa*Ea - (Ka - Ka^-1)/(q - q^-1)"},
        {"defining.comm.EbFb", "[Eb,Fb] = (Kb - Kb^-1)/(q^2 - q^-2)", "Eb*Fb - Fb*Eb - (Kb - Kb^-1)/(q^2 - q^-2)"},
        {"defining.comm.EaFb", "[Ea,Fb] = 0", "Ea*Fb - Fb*Ea"},
        {"defining.comm.EbFa", "[Eb,Fa] = 0", "Eb*Fa - Fa*Eb"},
    };
    return ids;
}

const std::vector<Identity>& serre_identities() {
    static const std::vector<Identity> ids = {
        {"serre.E.cubic", "Ea^3*Eb - [3]Ea^2*Eb*Ea + [3]Ea*Eb*Ea^2 - Eb*Ea^3 = 0",
         "Ea^3*Eb - (q^2+1+q^-2)*Ea^2*Eb*Ea + (q^2+1+q^-2)*Ea*Eb*Ea^2 - Eb*Ea^3"},
        {"serre.E.quadratic", "Eb^2*Ea - (q^2+q^-2)*Eb*Ea*Eb + Ea*Eb^2 = 0",
         "Eb^2*Ea - (q^2+q^-2)*Eb*Ea*Eb + Ea*Eb^2"},
        {"serre.F.cubic", "Fa^3*Fb - [3]Fa^2*Fb*Fa + [3]Fa*Fb*Fa^2 - Fb*Fa^3 = 0",
         "Fa^3*Fb - (q^2+1+q^-2)*Fa^2*Fb*Fa + (q^2+1+q^-2)*Fa*Fb*Fa^2 - Fb*Fa^3"},
        {"serre.F.quadratic", "Fb^2*Fa - (q^2+q^-2)*Fb*Fa*Fb + Fa*Fb^2 = 0",
         "Fb^2*Fa - (q^2+q^-2)*Fb*Fa*Fb + Fa*Fb^2"},
    };
    return ids;
}

const std::vector<Identity>& root_identities() {
    static const std::vector<Identity> ids = {
        {"roots.E.gamma_beta", "Eg*Eb - q^-2*Eb*Eg = 0", "Eg*Eb - q^-2*Eb*Eg"},
        {"roots.E.alpha_delta", "[Ea,Ed] = 0", "Ea*Ed - Ed*Ea"},
        {"roots.E.beta_delta", "[Eb,Ed] = 0", "Eb*Ed - Ed*Eb"},
        {"roots.E.gamma_delta", "[Eg,Ed] = 0", "Eg*Ed - Ed*Eg"},
        {"roots.F.beta_gamma", "Fb*Fg - q^2*Fg*Fb = 0", "Fb*Fg - q^2*Fg*Fb"},
        {"roots.F.alpha_delta", "[Fa,Fd] = 0", "Fa*Fd - Fd*Fa"},
        {"roots.F.beta_delta", "[Fb,Fd] = 0", "Fb*Fd - Fd*Fb"},
        {"roots.F.gamma_delta", "[Fg,Fd] = 0", "Fg*Fd - Fd*Fg"},
    };
    return ids;
}

std::vector<Identity> commutator_identities() {
    std::vector<Identity> ids = {
        {"commutators.Ea_Fg", "[Ea,Fg] = -(q+q^-1)q^-2 Fb Ka^-1", "Ea*Fg - Fg*Ea + (q+q^-1)*q^-2*Fb*Ka^-1"},
        {"commutators.Eb_Fg", "[Eb,Fg] = Fa Kb", "Eb*Fg - Fg*Eb - Fa*Kb"},
        {"commutators.Eg_Fa", "[Eg,Fa] = -(q+q^-1) Eb Ka", "Eg*Fa - Fa*Eg + (q+q^-1)*Eb*Ka"},
        // weight gamma - beta = alpha, so the E factor is Ea
        {"commutators.Eg_Fb", "[Eg,Fb] = q^2 Ea Kb^-1", "Eg*Fb - Fb*Eg - q^2*Ea*Kb^-1"},
        {"commutators.Eg_Fg", "[Eg,Fg] = (Ka*Kb - Ka^-1*Kb^-1)/(q-q^-1)",
         "Eg*Fg - Fg*Eg - (Ka*Kb - Ka^-1*Kb^-1)/(q-q^-1)"},
    };
    for (const char* nu : {"a", "g"}) {
        const std::string e = std::string("E") + nu, f = std::string("F") + nu;
        const std::string k = std::string(nu) == "a" ? "Ka" : "(Ka*Kb)";
        const std::string ki = std::string(nu) == "a" ? "Ka^-1" : "(Ka^-1*Kb^-1)";
        for (int n = 1; n <= 5; ++n) {
            const std::string fn = f + "^" + std::to_string(n);
            const std::string fn1 = f + "^" + std::to_string(n - 1);
            Identity id;
            id.id = "commutators.power." + e + "_" + f + "^" + std::to_string(n);
            id.claim = "[" + e + "," + fn + "] = " + fn1 + "*(K q(1-q^-2k) + K^-1 q^-1 (1-q^2k))/(q-q^-1)^2, k=" +
                       std::to_string(n);
            id.text = e + "*" + fn + " - " + fn + "*" + e + " - " + fn1 + "*(" + k + "*q*(1-q^-" +
                      std::to_string(2 * n) + ") + " + ki + "*q^-1*(1-q^" + std::to_string(2 * n) +
                      "))/(q-q^-1)^2";
            ids.push_back(id);
        }
    }
    return ids;
}

ParseContext context_for(const RewriteSystem& sys) {
    ParseContext ctx;
    ctx.alphabet = &sys.alphabet();
    auto p = [&](const std::string& t) { return sys.reduce(parse_expr(t, ctx)); };
    ctx.macros["Eg"] = p("Ea*Eb - q^2*Eb*Ea");
    ctx.macros["Fg"] = p("Fb*Fa - q^-2*Fa*Fb");
    ctx.macros["Ed"] = p("Ea*Eg - q^-2*Eg*Ea");
    ctx.macros["Fd"] = p("Fg*Fa - q^2*Fa*Fg");
    return ctx;
}

void run_identities(Report& rep, const RewriteSystem& sys, const ParseContext& ctx, const std::vector<Identity>& ids) {
    for (const auto& id : ids) {
        NCPoly r;
        std::string detail;
        bool ok = false;
        try {
            r = sys.reduce(parse_expr(id.text, ctx));
            ok = r.is_zero();
            detail = "residual " + r.str(sys.alphabet());
        } catch (const std::exception& e) {
            detail = std::string("error: ") + e.what();
        }
        rep.add(id.id, id.claim, ok, detail);
    }
}

} // namespace

Report presentation_report(const RewriteSystem& sys) {
    Report rep;
    rep.suite = "presentation";
    ParseContext ctx = context_for(sys);
    run_identities(rep, sys, ctx, defining_identities());
    run_identities(rep, sys, ctx, serre_identities());
    run_identities(rep, sys, ctx, root_identities());
    run_identities(rep, sys, ctx, commutator_identities());
    {
        // the Eb-form of the last right side has the wrong weight and cannot hold
        const EpsWeight lhs = kGamma - kBeta, eb = letter_weight(Eb);
        Check& c = rep.add("commutators.Eg_Fb.weight", "[Eg,Fb] has weight alpha; an Eb K right side has weight beta",
                           lhs == letter_weight(Ea) && lhs != eb, "weight(Eg Fb) = alpha");
        c.values["variant"] = "q^2 Eb Kb^-1 rejected on weight";
    }
    const int D = kCompletionDegree;
    auto amb = sys.overlap_report(D);
    std::size_t bad = 0;
    std::string first_bad;
    for (const auto& a : amb)
        if (!a.residual.is_zero()) {
            if (!bad) first_bad = sys.alphabet().render(a.word) + ": " + a.residual.str(sys.alphabet());
            ++bad;
        }
    rep.add("completion.overlaps", "every ambiguity through degree " + std::to_string(D) + " resolves to 0",
            bad == 0 && !amb.empty(),
            std::to_string(amb.size()) + " ambiguities, " + std::to_string(bad) + " nonzero" +
                (bad ? "; first " + first_bad : ""));
    Check& st = rep.add("completion.status", "completed system status", sys.confluent_degree() >= D, sys.status());
    st.values["rules"] = std::to_string(sys.rules().size());
    st.values["max_lhs"] = std::to_string(sys.max_lhs_length());
    st.values["globally_confluent"] = sys.globally_confluent() ? "true" : "false";
    return rep;
}


Report pbw_report(int max_degree) {
    Report rep;
    rep.suite = "pbw";
    const RewriteSystem& A = algebra();
    for (int n = 1; n <= max_degree; ++n) {
        std::size_t expect = 0;
        for (int d = 0; 3 * d <= n; ++d)
            for (int c = 0; 3 * d + 2 * c <= n; ++c) expect += static_cast<std::size_t>(n - 3 * d - 2 * c + 1);
        const std::size_t fw = A.count_irreducible(n, {Fa, Fb});
        const std::size_t ew = A.count_irreducible(n, {Ea, Eb});
        rep.add("pbw.count.F.deg" + std::to_string(n), "irreducible F-words of length " + std::to_string(n) +
                    " = #(a,d,c,b) with a+3d+2c+b = " + std::to_string(n),
                fw == expect, std::to_string(fw) + " vs " + std::to_string(expect));
        rep.add("pbw.count.E.deg" + std::to_string(n), "irreducible E-words of length " + std::to_string(n) +
                    " = PBW monomial count",
                ew == expect, std::to_string(ew) + " vs " + std::to_string(expect));
    }
    const Scalar q = Scalar::q();
    {
        NCPoly fdp = root_vector(Root::delta, false, true);
        NCPoly rhs = root_vector(Root::delta, false) +
                     A.mul(gen(Fa), root_vector(Root::gamma, false)) * (q.pow(2) - 1);
        NCPoly r = A.reduce(fdp - rhs);
        rep.add("pbw.fdelta_substitution", "[Fg,Fa] = Fd + (q^2-1) Fa Fg", r.is_zero(), "residual " + r.str(alphabet()));
    }
    {
        // FbFa = q^-2 FaFb + Fg in PBW coordinates
        PbwCoords c = to_pbw(mono({Fb, Fa}));
        PbwIndex ab, g;
        ab.f = {1, 0, 0, 1};
        g.f = {0, 0, 1, 0};
        PbwCoords expect{{ab, q.pow(-2)}, {g, Scalar(1)}};
        rep.add("pbw.coords.FbFa", "to_pbw(Fb*Fa) = q^-2 (Fa Fb) + (Fg)", c == expect);
    }
    {
        NCPoly fd = root_vector(Root::delta, false);
        PbwCoords c = to_pbw(A.mul(fd, gen(Fa)) - A.mul(gen(Fa), fd));
        rep.add("pbw.coords.Fd_Fa", "to_pbw([Fd,Fa]) = 0", c.empty());
    }
    // round trip on every PBW index of small total degree
    std::size_t tested = 0, bad = 0;
    for (int a = 0; a <= 2; ++a)
        for (int d = 0; d <= 1; ++d)
            for (int c = 0; c <= 2; ++c)
                for (int b = 0; b <= 1; ++b)
                    for (int r = -1; r <= 1; ++r)
                        for (int e0 = 0; e0 <= 1; ++e0)
                            for (int e1 = 0; e1 <= 1; ++e1)
                                for (int e3 = 0; e3 <= 1; ++e3) {
                                    PbwIndex i;
                                    i.f = {a, d, c, b};
                                    i.r = r;
                                    i.s = -r;
                                    i.e = {e0, e1, d, e3};
                                    if (a + 3 * d + 2 * c + b > max_degree) continue;
                                    PbwCoords one{{i, Scalar(1)}};
                                    ++tested;
                                    if (!(to_pbw(from_pbw(one)) == one)) ++bad;
                                }
    rep.add("pbw.roundtrip", "to_pbw(from_pbw(e_i)) = e_i on PBW basis elements", bad == 0,
            std::to_string(tested) + " basis elements, " + std::to_string(bad) + " failures");
    // reconstruction of random words
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> len(1, 6), let(0, kGenerators - 1);
    std::size_t wbad = 0;
    for (int t = 0; t < 40; ++t) {
        Word w;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back(static_cast<char>(let(rng)));
        NCPoly x = NCPoly::monomial(w);
        if (!(from_pbw(to_pbw(x)) == A.reduce(x))) ++wbad;
    }
    rep.add("pbw.reconstruct", "from_pbw(to_pbw(x)) = reduce(x) on 40 random words", wbad == 0,
            std::to_string(wbad) + " failures");
    return rep;
}

Report hopf_report(unsigned seed, int samples) {
    Report rep;
    rep.suite = "hopf";
    const RewriteSystem& A = algebra();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len(1, 4), let(0, kGenerators - 1);
    std::size_t coassoc_bad = 0, anti_bad = 0, counit_bad = 0, mult_bad = 0;
    for (int t = 0; t < samples; ++t) {
        Word w;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back(static_cast<char>(let(rng)));
        const NCPoly x = A.reduce(NCPoly::monomial(w));
        const TensorElement d = coproduct(x);
        // (Delta x id) Delta = (id x Delta) Delta
        std::map<std::tuple<Word, Word, Word>, Scalar> l3, r3;
        auto add3 = [](auto& m, const Word& a, const Word& b, const Word& c, const Scalar& s) {
            auto [it, ins] = m.try_emplace({a, b, c}, s);
            if (!ins) {
                it->second += s;
                if (it->second.is_zero()) m.erase(it);
            }
        };
        for (const auto& [k, c] : d.terms) {
            TensorElement d1 = coproduct(NCPoly::monomial(k.first));
            for (const auto& [k1, c1] : d1.terms) add3(l3, k1.first, k1.second, k.second, c * c1);
            TensorElement d2 = coproduct(NCPoly::monomial(k.second));
            for (const auto& [k2, c2] : d2.terms) add3(r3, k.first, k2.first, k2.second, c * c2);
        }
        if (l3 != r3) ++coassoc_bad;
        // m(S x id)Delta = eps = m(id x S)Delta
        NCPoly left, right;
        for (const auto& [k, c] : d.terms) {
            left += A.mul(antipode(NCPoly::monomial(k.first)), NCPoly::monomial(k.second)) * c;
            right += A.mul(NCPoly::monomial(k.first), antipode(NCPoly::monomial(k.second))) * c;
        }
        const NCPoly eps(counit(x));
        if (!(left == eps) || !(right == eps)) ++anti_bad;
        // (eps x id) Delta = x = (id x eps) Delta
        NCPoly el, er;
        for (const auto& [k, c] : d.terms) {
            el.add_scaled(NCPoly::monomial(k.second), c * counit(NCPoly::monomial(k.first)));
            er.add_scaled(NCPoly::monomial(k.first), c * counit(NCPoly::monomial(k.second)));
        }
        if (!(el == x) || !(er == x)) ++counit_bad;
        // Delta and S respect products
        Word w2;
        const int m = len(rng);
        for (int i = 0; i < m; ++i) w2.push_back(static_cast<char>(let(rng)));
        const NCPoly y = A.reduce(NCPoly::monomial(w2));
        if (!(coproduct(A.mul(x, y)) == coproduct(x).mul(coproduct(y), A))) ++mult_bad;
        if (!(antipode(A.mul(x, y)) == A.mul(antipode(y), antipode(x)))) ++mult_bad;
    }
    const std::string n = std::to_string(samples);
    rep.add("hopf.coassociativity", "(Delta x id)Delta = (id x Delta)Delta on " + n + " random words", coassoc_bad == 0,
            std::to_string(coassoc_bad) + " failures");
    rep.add("hopf.antipode", "m(S x id)Delta = eps = m(id x S)Delta on " + n + " random words", anti_bad == 0,
            std::to_string(anti_bad) + " failures");
    rep.add("hopf.counit", "(eps x id)Delta = id = (id x eps)Delta on " + n + " random words", counit_bad == 0,
            std::to_string(counit_bad) + " failures");
    rep.add("hopf.multiplicative", "Delta multiplicative and S anti-multiplicative on " + n + " random pairs",
            mult_bad == 0, std::to_string(mult_bad) + " failures");
    // Delta kills every defining relation
    std::size_t rel_bad = 0;
    ParseContext ctx = parse_context();
    for (const auto* ids : {&defining_identities(), &serre_identities()})
        for (const auto& id : *ids)
            if (!coproduct(parse_expr(id.text, ctx)).is_zero()) ++rel_bad;
    rep.add("hopf.relations", "Delta vanishes on the defining relations", rel_bad == 0,
            std::to_string(rel_bad) + " failures");
    {
        const Scalar q = Scalar::q();
        NCPoly g = antipode(x2_tilde());
        NCPoly expect = -A.mul(K(-1, -1), root_vector(Root::gamma, true));
        rep.add("hopf.antipode_x2", "S(q^4 Eb Ea - q^2 Ea Eb) = -K_gamma^-1 Eg", g == expect,
                "S = " + g.str(alphabet()));
        NCPoly exact = A.mul(K(-1, -1), mono({Ea, Eb}, q.pow(2)) - mono({Eb, Ea}));
        rep.add("hopf.antipode_x2_exact", "S(q^4 Eb Ea - q^2 Ea Eb) = K_gamma^-1 (q^2 Ea Eb - Eb Ea)", g == exact);
        // the same letters mapped without reversing the order
        NCPoly hom = A.mul(antipode(gen(Eb)), antipode(gen(Ea))) * q.pow(4) -
                     A.mul(antipode(gen(Ea)), antipode(gen(Eb))) * q.pow(2);
        rep.add("hopf.antipode_x2_unreversed", "q^4 S(Eb)S(Ea) - q^2 S(Ea)S(Eb) = -K_gamma^-1 Eg", hom == expect);
        TensorElement dk = coproduct(gen(Ka));
        TensorElement expect_k;
        expect_k.add(w1(Ka), w1(Ka), 1);
        rep.add("hopf.delta_K", "Delta(Ka) = Ka x Ka", dk == expect_k);
    }
    return rep;
}

} // namespace qs4::uq
