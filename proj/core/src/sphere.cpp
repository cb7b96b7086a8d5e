#include "qs4/sphere.hpp"

#include <random>
#include <sstream>

#include "qs4/expr.hpp"

namespace qs4::sphere {

using verma::ModuleVector;
using verma::Tuple;

// ---------------------------------------------------------------- PoissonPoly

PoissonPoly::PoissonPoly(const Rational& c) {
    if (c != 0) t_[Exps{}] = c;
}

PoissonPoly PoissonPoly::var(Var v) {
    Exps e{};
    e[v] = 1;
    return monomial(e);
}

PoissonPoly PoissonPoly::monomial(const Exps& e, const Rational& c) {
    PoissonPoly p;
    p.add(e, c);
    return p;
}

void PoissonPoly::add(const Exps& e, const Rational& c) {
    if (c == 0) return;
    auto [it, ins] = t_.try_emplace(e, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

PoissonPoly PoissonPoly::derivative(Var v) const {
    PoissonPoly r;
    for (const auto& [e, c] : t_) {
        if (!e[v]) continue;
        Exps d = e;
        --d[v];
        r.add(d, c * e[v]);
    }
    return r;
}

PoissonPoly& PoissonPoly::operator+=(const PoissonPoly& o) {
    for (const auto& [e, c] : o.t_) add(e, c);
    return *this;
}

PoissonPoly& PoissonPoly::operator-=(const PoissonPoly& o) {
    for (const auto& [e, c] : o.t_) add(e, -c);
    return *this;
}

PoissonPoly operator*(const PoissonPoly& x, const PoissonPoly& o) {
    PoissonPoly r;
    for (const auto& [e1, c1] : x.t_)
        for (const auto& [e2, c2] : o.t_) {
            PoissonPoly::Exps e;
            for (int i = 0; i < kVars; ++i) e[i] = e1[i] + e2[i];
            r.add(e, c1 * c2);
        }
    return r;
}

PoissonPoly operator*(const Rational& k, const PoissonPoly& x) {
    PoissonPoly r;
    for (const auto& [e, c] : x.t_) r.add(e, k * c);
    return r;
}

std::string PoissonPoly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    // highest degree first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (int i = 0; i < kVars; ++i) {
            if (!e[i]) continue;
            mono += kVarNames[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rational m = c;
        const bool neg = m < 0;
        if (neg) m = -m;
        std::string coef = (m == 1 && !mono.empty()) ? "" : m.get_str();
        if (!coef.empty() && !mono.empty()) coef += "*";
        if (s.empty())
            s = (neg ? "-" : "") + coef + mono;
        else
            s += (neg ? " - " : " + ") + coef + mono;
    }
    return s;
}

PoissonPoly generator_bracket(Var x, Var w) {
    if (x == w) return {};
    if (x > w) return Rational(-1) * generator_bracket(w, x);
    auto v = [](Var k) { return PoissonPoly::var(k); };
    const PoissonPoly A = v(kA), B = v(kB), C = v(kC), Y = v(kY), Z = v(kZ);
    switch (x * kVars + w) {
    case kA * kVars + kB: return A * B;
    case kA * kVars + kC: return Rational(-1) * (A * C);
    case kA * kVars + kY: return A * Y;
    case kA * kVars + kZ: return Rational(-1) * (A * Z);
    case kB * kVars + kY: return B * Y;
    case kB * kVars + kZ: return Rational(-1) * (B * Z);
    case kC * kVars + kY: return C * Y;
    case kC * kVars + kZ: return Rational(-1) * (C * Z);
    case kY * kVars + kZ: return Rational(2) * (A * A) + Rational(2) * (B * C);
    case kB * kVars + kC: return Rational(2) * (A * A);
    }
    return {};
}

PoissonPoly poisson_bracket(const PoissonPoly& f, const PoissonPoly& g) {
    PoissonPoly r;
    for (int i = 0; i < kVars; ++i) {
        const PoissonPoly fi = f.derivative(static_cast<Var>(i));
        if (fi.is_zero()) continue;
        for (int j = 0; j < kVars; ++j) {
            if (i == j) continue;
            const PoissonPoly gj = g.derivative(static_cast<Var>(j));
            if (gj.is_zero()) continue;
            r += fi * gj * generator_bracket(static_cast<Var>(i), static_cast<Var>(j));
        }
    }
    return r;
}

PoissonPoly sphere_polynomial() {
    auto v = [](Var k) { return PoissonPoly::var(k); };
    return v(kA) * v(kA) + v(kB) * v(kC) + v(kY) * v(kZ) - PoissonPoly(1);
}

ClassMatrix class_matrix() {
    auto v = [](Var k) { return PoissonPoly::var(k); };
    const PoissonPoly A = v(kA), B = v(kB), C = v(kC), Y = v(kY), Z = v(kZ), O, mA = O - A, mY = O - Y, mZ = O - Z;
    return ClassMatrix{{{A, B, Y, O}, {C, mA, O, mY}, {Z, O, mA, B}, {O, mZ, C, A}}};
}

// ---------------------------------------------------------------- quantum sphere

const Alphabet& alphabet() {
    static const Alphabet abc(std::vector<std::string>{"a", "b", "c", "y", "z"});
    return abc;
}

const std::vector<Relation>& relations() {
    static const std::vector<Relation> rels = [] {
        ParseContext ctx;
        ctx.alphabet = &alphabet();
        const std::pair<const char*, const char*> text[] = {
            {"ab", "a*b - q^2*b*a"},
            {"ac", "a*c - q^-2*c*a"},
            {"ay", "a*y - q^2*y*a"},
            {"az", "a*z - q^-2*z*a"},
            {"by", "b*y - q^2*y*b"},
            {"bz", "b*z - q^-2*z*b"},
            {"cy", "c*y - q^2*y*c"},
            {"cz", "c*z - q^-2*z*c"},
            {"bc", "b*c - c*b - (q^4 - 1)*a^2"},
            {"yz", "y*z - z*y - (q^4 - 1)*a^2 - (q^4 - 1)*b*c"},
            {"sphere", "a^2 + b*c + y*z - q^-4"},
        };
        std::vector<Relation> r;
        for (const auto& [name, t] : text) r.push_back({name, t, parse_expr(t, ctx)});
        return r;
    }();
    return rels;
}

const RewriteSystem& quantum_system() {
    static const RewriteSystem sys = [] {
        RewriteSystem s(alphabet());
        for (const auto& rel : relations()) s.add_relation(rel.poly, rel.name);
        s.complete(kSphereCompletionDegree);
        return s;
    }();
    return sys;
}

namespace {

std::vector<Letter> all_letters() { return {kA, kB, kC, kY, kZ}; }

Integer binom(int n, int k) {
    if (k < 0 || n < k) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

std::size_t quantum_filtered_dim(int d) {
    std::size_t n = 0;
    for (int e = 0; e <= d; ++e) n += quantum_system().count_irreducible(e, all_letters());
    return n;
}

std::size_t classical_filtered_dim(int d) {
    Integer n = 0;
    for (int e = 0; e <= d; ++e) n += binom(e + 4, 4) - binom(e + 2, 4);
    return n.get_ui();
}

// ---------------------------------------------------------------- operators

ModuleVector Generators::apply(Var v, const ModuleVector& x) const {
    static constexpr int ij[kVars][2] = {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {2, 0}};
    return Q->entry(ij[v][0], ij[v][1], x);
}

ModuleVector Generators::apply(const NCPoly& p, const ModuleVector& x) const {
    ModuleVector out;
    out.variant = x.variant;
    for (const auto& [w, c] : p.terms()) {
        ModuleVector r = x;
        for (auto it = w.rbegin(); it != w.rend() && !r.is_zero(); ++it) r = apply(static_cast<Var>(*it), r);
        out.add_scaled(r, c);
    }
    return out;
}

namespace {

struct PatternEntry {
    int i, j;
    std::vector<std::tuple<int, int, Scalar>> terms; // sum = 0
    std::string name;
};

std::vector<PatternEntry> pattern() {
    const Scalar q = Scalar::q();
    return {
        {0, 3, {{0, 3, 1}}, "Q14 = 0"},
        {1, 2, {{1, 2, 1}}, "Q23 = 0"},
        {1, 1, {{1, 1, 1}, {0, 0, q.pow(2)}}, "Q22 = -q^2 a"},
        {2, 2, {{2, 2, 1}, {0, 0, q.pow(2)}}, "Q33 = -q^2 a"},
        {3, 3, {{3, 3, 1}, {0, 0, -q.pow(4)}}, "Q44 = q^4 a"},
        {2, 3, {{2, 3, 1}, {0, 1, -q.pow(2)}}, "Q34 = q^2 b"},
        {3, 2, {{3, 2, 1}, {1, 0, -q.pow(2)}}, "Q43 = q^2 c"},
        {1, 3, {{1, 3, 1}, {0, 2, 1}}, "Q24 = -y"},
        {3, 1, {{3, 1, 1}, {2, 0, 1}}, "Q42 = -z"},
        {3, 0, {{3, 0, 1}}, "Q41 = 0"},
        {2, 1, {{2, 1, 1}}, "Q32 = 0"},
    };
}

} // namespace

Generators extract_generators(const rmat::OperatorMatrix& Q) {
    for (const auto& p : pattern())
        for (const Tuple& t : Q.basis()) {
            const ModuleVector r = rmat::combine(Q, p.terms, Q.module().vec(t));
            if (!r.is_zero()) throw Error("generator pattern violated: " + p.name + " gives " + r.str());
        }
    return Generators{&Q};
}

// ---------------------------------------------------------------- suites

namespace {

using Mat16P = std::vector<std::vector<PoissonPoly>>;

Mat16P zero16() { return Mat16P(16, std::vector<PoissonPoly>(16)); }

Mat16P mul(const Mat16P& x, const Mat16P& w) {
    Mat16P r = zero16();
    for (int i = 0; i < 16; ++i)
        for (int k = 0; k < 16; ++k) {
            if (x[i][k].is_zero()) continue;
            for (int j = 0; j < 16; ++j)
                if (!w[k][j].is_zero()) r[i][j] += x[i][k] * w[k][j];
        }
    return r;
}

Mat16P add(const Mat16P& x, const Mat16P& w, const Rational& k) {
    Mat16P r = x;
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            if (!w[i][j].is_zero()) r[i][j] += k * w[i][j];
    return r;
}

Mat16P numeric(const Mat& m) {
    Mat16P r = zero16();
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            if (!m[i][j].is_zero()) r[i][j] = PoissonPoly(limit_q1(m[i][j]));
    return r;
}

PoissonPoly classical_image(const NCPoly& p, const Scalar& divisor) {
    PoissonPoly r;
    for (const auto& [w, c] : p.terms()) {
        PoissonPoly::Exps e{};
        for (char ch : w) ++e[static_cast<Letter>(ch)];
        r.add(e, limit_q1(c / divisor));
    }
    return r;
}

Scalar evaluate_one_dim(const NCPoly& p) {
    const Scalar val[kVars] = {0, 0, 0, Scalar::q_pow(-2), Scalar::q_pow(-2)};
    Scalar s;
    for (const auto& [w, c] : p.terms()) {
        Scalar m = c;
        for (char ch : w) m *= val[static_cast<Letter>(ch)];
        s += m;
    }
    return s;
}

} // namespace

Report classical_report() {
    Report rep;
    rep.suite = "sphere-classical";
    const std::string anchor = "Poisson brackets of the generators";
    auto v = [](Var k) { return PoissonPoly::var(k); };
    {
        const PoissonPoly yz = poisson_bracket(v(kY), v(kZ));
        rep.add("sphere.classical.yz", "{y,z} = 2a^2 + 2bc", yz == Rational(2) * (v(kA) * v(kA)) + Rational(2) * (v(kB) * v(kC)),
                yz.str(), anchor);
        bool anti = true;
        for (int i = 0; i < kVars; ++i)
            for (int j = 0; j < kVars; ++j)
                anti = anti && poisson_bracket(v(Var(i)), v(Var(j))) == Rational(-1) * poisson_bracket(v(Var(j)), v(Var(i)));
        rep.add("sphere.classical.antisymmetry", "{x,w} = -{w,x} for all generators; {a,a} = 0",
                anti && poisson_bracket(v(kA), v(kA)).is_zero(), "", anchor);
    }
    {
        std::size_t n = 0, bad = 0;
        std::string first;
        for (int i = 0; i < kVars; ++i)
            for (int j = i + 1; j < kVars; ++j)
                for (int k = j + 1; k < kVars; ++k) {
                    ++n;
                    const PoissonPoly x = v(Var(i)), y = v(Var(j)), w = v(Var(k));
                    const PoissonPoly jac = poisson_bracket(x, poisson_bracket(y, w)) +
                                            poisson_bracket(y, poisson_bracket(w, x)) +
                                            poisson_bracket(w, poisson_bracket(x, y));
                    if (!jac.is_zero() && !bad++) first = jac.str();
                }
        rep.add("sphere.classical.jacobi", "Jacobi identity on all generator triples", bad == 0,
                std::to_string(n) + " triples, " + std::to_string(bad) + " failed" + (bad ? "; " + first : ""), anchor);
    }
    {
        bool ok = true;
        std::string det;
        for (int i = 0; i < kVars; ++i) {
            const PoissonPoly r = poisson_bracket(v(Var(i)), sphere_polynomial());
            ok = ok && r.is_zero();
            if (!r.is_zero()) det += std::string(kVarNames[i]) + ": " + r.str() + "; ";
        }
        rep.add("sphere.classical.casimir", "a^2 + bc + yz is a Casimir", ok, det, "sphere equation");
    }
    {
        // {A1,A2} = 1/2 (A2 r21 A1 - A1 r A2 + A2 A1 r - r21 A1 A2)
        const ClassMatrix A = class_matrix();
        Mat16P A1 = zero16(), A2 = zero16();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) {
                    A1[4 * i + k][4 * j + k] = A[i][j];
                    A2[4 * k + i][4 * k + j] = A[i][j];
                }
        const Mat P = rmat::flip();
        const Mat16P r = numeric(rmat::classical_r()), r21 = numeric(mat_mul(mat_mul(P, rmat::classical_r()), P));
        Mat16P rhs = mul(mul(A2, r21), A1);
        rhs = add(rhs, mul(mul(A1, r), A2), -1);
        rhs = add(rhs, mul(mul(A2, A1), r), 1);
        rhs = add(rhs, mul(mul(r21, A1), A2), -1);
        std::size_t bad = 0;
        std::string first;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                for (int j = 0; j < 4; ++j)
                    for (int l = 0; l < 4; ++l) {
                        const PoissonPoly lhs = poisson_bracket(A[i][j], A[k][l]);
                        const PoissonPoly rr = Rational(1, 2) * rhs[4 * i + k][4 * j + l];
                        if (!(lhs == rr) && !bad++)
                            first = "{A" + std::to_string(i + 1) + std::to_string(j + 1) + ",A" + std::to_string(k + 1) +
                                    std::to_string(l + 1) + "}: " + lhs.str() + " vs " + rr.str();
                    }
        rep.add("sphere.classical.matrix_bracket", "matrix form of the bracket agrees with the table on all 256 entry pairs",
                bad == 0, "256 pairs, " + std::to_string(bad) + " failed" + (bad ? "; " + first : ""),
                "matrix Poisson bracket");
        const PoissonPoly ab = Rational(1, 2) * rhs[4 * 0 + 0][4 * 0 + 1];
        rep.add("sphere.classical.matrix_ab", "entry pair (A11, A12) gives ab", ab == v(kA) * v(kB), ab.str(),
                "matrix Poisson bracket");
    }
    {
        const ClassMatrix A = class_matrix();
        // C_ij = eps_i delta_{ij'}
        auto Cm = [](int i, int j) { return j == uq::dual_index(i) ? Rational(uq::kSign[i]) : Rational(0); };
        const PoissonPoly s = sphere_polynomial(), ms = Rational(-1) * s;
        bool lin = true, tr = true, quad = true, sympl = true;
        PoissonPoly trace;
        for (int i = 0; i < 4; ++i) trace += A[i][i];
        tr = trace.is_zero();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                PoissonPoly cac, sq, acat;
                for (int k = 0; k < 4; ++k) {
                    sq += A[i][k] * A[k][j];
                    for (int l = 0; l < 4; ++l) {
                        cac += Cm(i, k) * (Cm(l, j) * A[k][l]);
                        acat += A[i][k] * (Cm(k, l) * A[j][l]);
                    }
                }
                lin = lin && (A[j][i] + cac).is_zero();
                if (i == j) sq -= PoissonPoly(1);
                acat -= PoissonPoly(Cm(i, j));
                quad = quad && (sq.is_zero() || sq == s || sq == ms);
                sympl = sympl && (acat.is_zero() || acat == s || acat == ms);
            }
        rep.add("sphere.classical.linear", "A^t + CAC = 0 and Tr A = 0 identically", lin && tr, "",
                "matrix form of the conjugacy class");
        rep.add("sphere.classical.ideal", "every entry of A^2 - 1 and A C A^t - C is 0 or +-(a^2 + bc + yz - 1)",
                quad && sympl, "", "defining ideal of the class");
    }
    return rep;
}

Report quantum_report(int max_hilbert_degree) {
    Report rep;
    rep.suite = "sphere-quantum";
    rep.config["hilbert_degree"] = std::to_string(max_hilbert_degree);
    const RewriteSystem& S = quantum_system();
    const Alphabet& abc = alphabet();
    {
        const auto overlaps = S.overlap_report(kSphereCompletionDegree);
        std::size_t bad = 0;
        for (const auto& amb : overlaps) bad += !amb.residual.is_zero();
        Check& c = rep.add("sphere.quantum.completion", "the relations complete with zero residual overlaps",
                           bad == 0 && S.globally_confluent(), S.status(), "relations of the quantum sphere");
        c.values["rules"] = std::to_string(S.rules().size());
        c.values["ambiguities"] = std::to_string(overlaps.size());
        c.values["order"] = "deglex a < b < c < y < z, yz eliminated";
        rep.add("sphere.quantum.count", "eleven relations", relations().size() == 11,
                std::to_string(relations().size()), "relations of the quantum sphere");
    }
    {
        ParseContext ctx;
        ctx.alphabet = &abc;
        const NCPoly expect = parse_expr("q^-4 - a^2 - b*c - (q^4 - 1)*a^2 - (q^4 - 1)*b*c", ctx);
        const NCPoly nf = S.normal_form(abc.word({"z", "y"}));
        rep.add("sphere.quantum.nf_zy", "zy reduces through the commutator and the sphere rule", nf == expect,
                nf.str(abc), "relations of the quantum sphere");
    }
    {
        bool ok = true;
        std::string det;
        for (const auto& rel : relations()) {
            const Scalar s = evaluate_one_dim(rel.poly);
            if (!s.is_zero()) {
                ok = false;
                det += rel.name + ": " + s.str() + "; ";
            }
        }
        rep.add("sphere.quantum.one_dim", "a, b, c -> 0 and y, z -> q^-2 satisfies every relation", ok, det,
                "one-dimensional representation");
    }
    {
        for (int d = 0; d <= max_hilbert_degree; ++d) {
            const std::size_t qd = quantum_filtered_dim(d), cd = classical_filtered_dim(d);
            Check& c = rep.add("sphere.quantum.hilbert." + std::to_string(d),
                               "filtered dimension through degree " + std::to_string(d) + " matches the classical sphere",
                               qd == cd, std::to_string(qd) + " vs " + std::to_string(cd), "flat deformation");
            c.values["quantum"] = std::to_string(qd);
            c.values["classical"] = std::to_string(cd);
        }
    }
    return rep;
}

Report operator_report(int N, int guard, unsigned seed) {
    if (N < guard) throw Error("degree cap " + std::to_string(N) + " is below the guard band " + std::to_string(guard));
    Report rep;
    rep.suite = "sphere-operators";
    rep.config["N"] = std::to_string(N);
    rep.config["guard"] = std::to_string(guard);
    rep.config["seed"] = std::to_string(seed);
    rmat::OperatorMatrix Q(verma::Variant::upper_quotient, Mode::special, N);
    const auto low = Q.basis_up_to(N - guard);
    const std::string anchor = "generator relations on M_lambda";
    Generators G;
    try {
        G = extract_generators(Q);
        rep.add("sphere.operator.pattern", "remaining entries of Q follow the generator-matrix pattern", true,
                std::to_string(pattern().size()) + " entry identities", "generator matrix of the quantum sphere");
    } catch (const Error& e) {
        rep.add("sphere.operator.pattern", "remaining entries of Q follow the generator-matrix pattern", false, e.what(),
                "generator matrix of the quantum sphere");
        G = Generators{&Q};
    }
    {
        const ModuleVector v = Q.module().highest();
        const ModuleVector av = G.apply(kA, v);
        ModuleVector expect = v;
        expect.terms.begin()->second = Q.module().mu() * Q.module().mu();
        rep.add("sphere.operator.a_highest", "a v = mu^2 v, matching Q(w1 (x) v)", av == expect, av.str(),
                "eigenvalues of Q on C^4 (x) M");
    }
    for (const auto& rel : relations()) {
        std::size_t bad = 0;
        std::string first;
        for (const Tuple& t : low) {
            const ModuleVector r = G.apply(rel.poly, Q.module().vec(t));
            if (!r.is_zero() && !bad++) first = r.str();
        }
        rep.add("sphere.operator." + rel.name, rel.text + " = 0 on M through degree " + std::to_string(N - guard),
                bad == 0, std::to_string(low.size()) + " vectors, " + std::to_string(bad) + " failed" + (bad ? "; " + first : ""),
                anchor);
    }
    {
        // random words against their normal forms
        std::mt19937 rng(seed);
        std::size_t bad = 0;
        std::string first;
        const RewriteSystem& S = quantum_system();
        for (int n = 0; n < 20; ++n) {
            const int len = 1 + static_cast<int>(rng() % 4);
            Word w;
            for (int k = 0; k < len; ++k) w.push_back(static_cast<char>(rng() % kVars));
            const NCPoly diff = NCPoly::monomial(w) - S.normal_form(w);
            for (const Tuple& t : low) {
                const ModuleVector r = G.apply(diff, Q.module().vec(t));
                if (!r.is_zero()) {
                    if (!bad++) first = alphabet().render(w);
                    break;
                }
            }
        }
        rep.add("sphere.operator.random_words", "20 random words act as their normal forms", bad == 0,
                std::to_string(bad) + " failed" + (bad ? "; first " + first : ""), anchor);
    }
    return rep;
}

Report semiclassical_report() {
    Report rep;
    rep.suite = "semiclassical";
    const RewriteSystem& S = quantum_system();
    const Scalar q = Scalar::q(), norm = q.pow(2) - Scalar(1);
    rep.config["normalizer"] = "q^2 - 1";
    std::size_t pairs = 0;
    for (int i = 0; i < kVars; ++i)
        for (int j = i + 1; j < kVars; ++j) {
            ++pairs;
            const Word xw{static_cast<char>(i), static_cast<char>(j)}, wx{static_cast<char>(j), static_cast<char>(i)};
            const NCPoly comm = S.normal_form(xw) - S.normal_form(wx);
            const PoissonPoly lim = classical_image(comm, norm);
            const PoissonPoly table = generator_bracket(Var(i), Var(j));
            const std::string name = std::string(kVarNames[i]) + kVarNames[j];
            Check& c = rep.add("semiclassical.bracket." + name,
                               "[" + std::string(kVarNames[i]) + "," + kVarNames[j] + "]/(q^2 - 1) at q = 1 is the bracket",
                               lim == table, lim.str() + " vs " + table.str(), "semiclassical limit");
            c.values["commutator"] = comm.str(alphabet());
        }
    rep.add("semiclassical.pairs", "all generator pairs compared", pairs == 10, std::to_string(pairs) + " pairs",
            "semiclassical limit");
    {
        const PoissonPoly lim = classical_image(relations().back().poly, Scalar(1));
        rep.add("semiclassical.sphere", "a^2 + bc + yz = q^-4 becomes a^2 + bc + yz = 1 at q = 1",
                lim == sphere_polynomial(), lim.str(), "sphere equation");
    }
    return rep;
}

} // namespace qs4::sphere
