#include "qs4/rmat.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "qs4/error.hpp"

namespace qs4::rmat {

using uq::EpsWeight;
using uq::operator+;
using uq::operator-;
using verma::Module;
using verma::ModuleVector;
using verma::TensorVector;
using verma::Tuple;

// ---------------------------------------------------------------- matrices

Mat unit4(int i, int j) {
    Mat m = zero_mat(4, 4);
    m[i][j] = 1;
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    const std::size_t n = a.size(), m = a[0].size(), p = b.size(), r = b[0].size();
    Mat out = zero_mat(n * p, m * r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < p; ++k)
                for (std::size_t l = 0; l < r; ++l)
                    if (!b[k][l].is_zero()) out[i * p + k][j * r + l] = a[i][j] * b[k][l];
        }
    return out;
}

Mat flip() {
    Mat p = zero_mat(16, 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) p[4 * i + j][4 * j + i] = 1;
    return p;
}

Mat mat_add(const Mat& a, const Mat& b, const Scalar& cb) {
    Mat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j)
            if (!b[i][j].is_zero()) r[i][j] += cb * b[i][j];
    return r;
}

bool is_zero(const Mat& m) { return nonzeros(m) == 0; }

std::size_t nonzeros(const Mat& m) {
    std::size_t n = 0;
    for (const auto& row : m)
        for (const auto& x : row) n += !x.is_zero();
    return n;
}

namespace {

// e_ab (x) e_cd
void add_unit_pair(Mat& m, int a, int b, int c, int d, const Scalar& s) {
    if (!s.is_zero()) m[4 * a + c][4 * b + d] += s;
}

Mat commutator(const Mat& a, const Mat& b) { return mat_add(mat_mul(a, b), mat_mul(b, a), Scalar(-1)); }

Mat leg23_swap() { return kron(identity_mat(4), flip()); }

int dual(int i) { return uq::dual_index(i); }

Mat cartan_c4() {
    Mat c = zero_mat(16, 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            c[4 * i + j][4 * i + j] = Scalar::q_pow(uq::inner(uq::kVectorWeights[i], uq::kVectorWeights[j]));
    return c;
}

} // namespace

Mat classical_r() {
    Mat r = zero_mat(16, 16);
    for (int i = 0; i < 4; ++i) {
        add_unit_pair(r, i, i, i, i, 1);
        add_unit_pair(r, i, i, dual(i), dual(i), -1);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) {
            add_unit_pair(r, i, j, j, i, 2);
            add_unit_pair(r, i, j, dual(i), dual(j), Scalar(-2 * uq::kSign[i] * uq::kSign[j]));
        }
    return r;
}

Mat cybe_residual() {
    const Mat r = classical_r(), I = identity_mat(4), P23 = leg23_swap();
    const Mat r12 = kron(r, I), r23 = kron(I, r);
    const Mat r13 = mat_mul(mat_mul(P23, r12), P23);
    return mat_add(mat_add(commutator(r12, r13), commutator(r12, r23)), commutator(r13, r23));
}

Mat explicit_R() {
    const Scalar q = Scalar::q(), t = q - q.inverse();
    Mat R = zero_mat(16, 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) add_unit_pair(R, i, i, j, j, q.pow((i == j) - (i == dual(j))));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) {
            add_unit_pair(R, i, j, j, i, t);
            add_unit_pair(R, i, j, dual(i), dual(j),
                          -t * q.pow(uq::kRho[i] - uq::kRho[j]) * Scalar(uq::kSign[i] * uq::kSign[j]));
        }
    return R;
}

Mat braid_S() { return mat_mul(flip(), explicit_R()); }

Mat braid_residual() {
    const Mat S = braid_S(), I = identity_mat(4);
    const Mat S1 = kron(S, I), S2 = kron(I, S);
    return mat_add(mat_mul(mat_mul(S1, S2), S1), mat_mul(mat_mul(S2, S1), S2), Scalar(-1));
}

Kappa kappa() {
    const Scalar q = Scalar::q();
    Vec v(16), f(16);
    for (int i = 0; i < 4; ++i) {
        v[4 * dual(i) + i] = q.pow(uq::kRho[i]) * Scalar(uq::kSign[i]);
        f[4 * i + dual(i)] = q.pow(-uq::kRho[i]) * Scalar(uq::kSign[i]);
    }
    Scalar fv;
    for (int k = 0; k < 16; ++k) fv += f[k] * v[k];
    Kappa k;
    k.vector = v;
    k.projector = zero_mat(16, 16);
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            if (!v[a].is_zero() && !f[b].is_zero()) k.projector[a][b] = v[a] * f[b] / fv;
    return k;
}

namespace {

Mat delta_phi_poly(const NCPoly& x) {
    Mat out = zero_mat(16, 16);
    for (const auto& [w, c] : uq::coproduct(x).terms) {
        const Mat m = kron(verma::phi_poly(NCPoly::monomial(w.first)), verma::phi_poly(NCPoly::monomial(w.second)));
        out = mat_add(out, m, c);
    }
    return out;
}

} // namespace

Mat delta_phi(Letter l) { return delta_phi_poly(NCPoly::letter(l)); }

// ---------------------------------------------------------------- universal R

namespace {

struct RootFactor {
    char name;
    NCPoly f, e;
    Scalar t;
};

const std::vector<RootFactor>& root_factors() {
    static const std::vector<RootFactor> r = [] {
        const Scalar q = Scalar::q(), qi = q.inverse();
        using uq::Root;
        return std::vector<RootFactor>{
            {'a', uq::gen(uq::Fa), uq::gen(uq::Ea), q - qi},
            {'b', uq::gen(uq::Fb), uq::gen(uq::Eb), q.pow(2) - qi.pow(2)},
            {'d', uq::root_vector(Root::delta, false, true), uq::root_vector(Root::delta, true, true),
             (q - qi) / (q + qi)},
            {'g', uq::root_vector(Root::gamma, false), uq::root_vector(Root::gamma, true), q - qi},
        };
    }();
    return r;
}

const RootFactor& factor(char name) {
    for (const auto& f : root_factors())
        if (f.name == name) return f;
    throw Error(std::string("unknown root ") + name);
}

struct Candidate {
    std::string order; // matrix-product order, leftmost applied last
    bool cartan_left = true;
    std::string label() const {
        std::string s;
        for (char c : order) s += s.empty() ? std::string(1, c) : std::string(" ") + c;
        return s + (cartan_left ? " | cartan left" : " | cartan right");
    }
};

Mat assemble_c4(const Candidate& cand, bool flipped) {
    Mat prod = identity_mat(16);
    for (char c : cand.order) {
        const RootFactor& rf = factor(c);
        const Mat a = verma::phi_poly(flipped ? rf.e : rf.f), b = verma::phi_poly(flipped ? rf.f : rf.e);
        prod = mat_mul(prod, mat_add(identity_mat(16), kron(a, b), rf.t));
    }
    return cand.cartan_left ? mat_mul(cartan_c4(), prod) : mat_mul(prod, cartan_c4());
}

// first leg C^4, second leg C^4 (x) C^4 through the coproduct
Mat assemble_c4_c16(const Candidate& cand) {
    Mat cart = zero_mat(64, 64);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                cart[16 * i + 4 * j + k][16 * i + 4 * j + k] = Scalar::q_pow(
                    uq::inner(uq::kVectorWeights[i], uq::kVectorWeights[j] + uq::kVectorWeights[k]));
    Mat prod = identity_mat(64);
    for (char c : cand.order) {
        const RootFactor& rf = factor(c);
        prod = mat_mul(prod, mat_add(identity_mat(64), kron(verma::phi_poly(rf.f), delta_phi_poly(rf.e)), rf.t));
    }
    return cand.cartan_left ? mat_mul(cart, prod) : mat_mul(prod, cart);
}

struct Selection {
    Candidate chosen;
    std::vector<std::string> passing;
    bool coproduct_ok = false;
};

const Selection& selection() {
    static const Selection sel = [] {
        Selection s;
        const Mat R = explicit_R();
        const Mat I = identity_mat(4), P23 = leg23_swap();
        const Mat R12 = kron(R, I), R13 = mat_mul(mat_mul(P23, R12), P23);
        const Mat target = mat_mul(R13, R12);
        std::string order = "abdg";
        bool found = false;
        do {
            for (bool left : {true, false}) {
                Candidate c{order, left};
                if (assemble_c4(c, false) != R) continue;
                const bool cop = assemble_c4_c16(c) == target;
                s.passing.push_back(c.label() + (cop ? "" : " (C^4 only)"));
                if (!found && cop) {
                    s.chosen = c;
                    s.coproduct_ok = true;
                    found = true;
                }
            }
        } while (std::next_permutation(order.begin(), order.end()));
        if (!found) throw Error("no root order reproduces the explicit R-matrix");
        return s;
    }();
    return sel;
}

} // namespace

const Convention& convention() {
    static const Convention c = [] {
        const Selection& s = selection();
        Convention out;
        out.order = s.chosen.label();
        out.cartan = s.chosen.cartan_left ? "left" : "right";
        std::string w;
        for (char n : s.chosen.order) w += std::string(w.empty() ? "" : ", ") + n + ": " + factor(n).t.str();
        out.weights = w;
        return out;
    }();
    return c;
}

Mat assembled_R_c4() { return assemble_c4(selection().chosen, false); }
Mat assembled_R21_c4() { return assemble_c4(selection().chosen, true); }

namespace {

// (1 + t phi(a) (x) b) on C^4 (x) M
TensorVector apply_factor(const Module& m, const Mat& a, const NCPoly& b, const Scalar& t, const TensorVector& in) {
    TensorVector out = in;
    std::map<Tuple, ModuleVector> images;
    for (const auto& [key, c] : in.terms) {
        const auto& [j, tup] = key;
        for (int i = 0; i < 4; ++i) {
            if (a[i][j].is_zero()) continue;
            auto it = images.find(tup);
            if (it == images.end()) it = images.emplace(tup, m.act_direct(b, m.vec(tup))).first;
            const Scalar s = t * c * a[i][j];
            for (const auto& [tt, x] : it->second.terms) out.add(i, tt, s * x);
        }
    }
    return out;
}

TensorVector apply_product(const Module& m, const TensorVector& t, bool flipped) {
    const Candidate& cand = selection().chosen;
    TensorVector x = cand.cartan_left ? t : apply_cartan(m, t);
    for (auto it = cand.order.rbegin(); it != cand.order.rend(); ++it) {
        const RootFactor& rf = factor(*it);
        x = apply_factor(m, verma::phi_poly(flipped ? rf.e : rf.f), flipped ? rf.f : rf.e, rf.t, x);
    }
    return cand.cartan_left ? apply_cartan(m, x) : x;
}

} // namespace

TensorVector apply_cartan(const Module& m, const TensorVector& t) {
    const bool lower = verma::is_lower(m.variant());
    TensorVector out;
    for (const auto& [key, c] : t.terms) {
        const auto& [i, tup] = key;
        const EpsWeight wi = uq::kVectorWeights[i];
        Scalar s = Scalar::q_pow(uq::inner(wi, verma::tuple_weight(tup, lower)));
        if (wi[0]) s *= Scalar::mu_pow(m.mode(), lower ? -wi[0] : wi[0]);
        out.add(i, tup, c * s);
    }
    return out;
}

TensorVector apply_R(const Module& m, const TensorVector& t) { return apply_product(m, t, false); }
TensorVector apply_R21(const Module& m, const TensorVector& t) { return apply_product(m, t, true); }

// ---------------------------------------------------------------- Q

OperatorMatrix::OperatorMatrix(verma::Variant variant, Mode mu_mode, int max_degree)
    : module_(variant, mu_mode), N_(max_degree), basis_(module_.basis_up_to(max_degree)) {
    for (const Tuple& t : basis_) {
        auto& col = cols_[t];
        for (int j = 0; j < 4; ++j) {
            TensorVector in;
            in.add(j, t, 1);
            const TensorVector out = apply_R21(module_, apply_R(module_, in));
            for (int i = 0; i < 4; ++i) col[i][j].variant = variant;
            for (const auto& [key, c] : out.terms) col[key.first][j].add(key.second, c);
        }
    }
}

std::vector<Tuple> OperatorMatrix::basis_up_to(int degree) const {
    std::vector<Tuple> r;
    for (const Tuple& t : basis_)
        if (verma::degree(t) <= degree) r.push_back(t);
    return r;
}

const ModuleVector& OperatorMatrix::entry(int i, int j, const Tuple& t) const {
    auto it = cols_.find(t);
    if (it == cols_.end())
        throw BoundError("Q entry requested at degree " + std::to_string(verma::degree(t)) + " above the cap " +
                         std::to_string(N_));
    return it->second[i][j];
}

ModuleVector OperatorMatrix::entry(int i, int j, const ModuleVector& v) const {
    ModuleVector out;
    out.variant = module_.variant();
    for (const auto& [t, c] : v.terms) out.add_scaled(entry(i, j, t), c);
    return out;
}

TensorVector OperatorMatrix::apply(const TensorVector& t) const {
    TensorVector out;
    for (const auto& [key, c] : t.terms) {
        const auto& [j, tup] = key;
        for (int i = 0; i < 4; ++i)
            for (const auto& [tt, x] : entry(i, j, tup).terms) out.add(i, tt, c * x);
    }
    return out;
}

ModuleVector combine(const OperatorMatrix& q, const std::vector<std::tuple<int, int, Scalar>>& terms,
                     const ModuleVector& v) {
    ModuleVector out;
    out.variant = q.module().variant();
    for (const auto& [i, j, c] : terms) out.add_scaled(q.entry(i, j, v), c);
    return out;
}

// ---------------------------------------------------------------- suites

namespace {

std::string nz(const Mat& m) { return std::to_string(nonzeros(m)) + " nonzero entries"; }

TensorVector basis_vector(int j, const Tuple& t) {
    TensorVector v;
    v.add(j, t, 1);
    return v;
}

TensorVector scaled(const TensorVector& t, const Scalar& c) {
    TensorVector r;
    r.add_scaled(t, c);
    return r;
}

TensorVector minus(const TensorVector& a, const TensorVector& b) {
    TensorVector r = a;
    r.add_scaled(b, Scalar(-1));
    return r;
}

} // namespace

Report rmatrix_report() {
    Report rep;
    rep.suite = "rmatrix";
    const std::string anchor_r = "explicit R-matrix on C^4 (x) C^4";
    {
        const Mat r = classical_r();
        rep.add("rmatrix.classical.e11", "coefficient of e11 (x) e11 in r is 1", r[0][0] == Scalar(1), r[0][0].str(),
                "classical r-matrix");
        const Mat res = cybe_residual();
        rep.add("rmatrix.classical.cybe", "r solves the classical Yang-Baxter equation", is_zero(res), nz(res),
                "classical r-matrix");
        const Mat P = flip(), sym = mat_add(r, mat_mul(mat_mul(P, r), P));
        rep.add("rmatrix.classical.symmetric", "r + r21 equals its flip", mat_mul(mat_mul(P, sym), P) == sym, "",
                "classical r-matrix");
    }
    const Mat S = braid_S();
    {
        const Mat res = braid_residual();
        rep.add("rmatrix.braid", "S1 S2 S1 = S2 S1 S2 on (C^4)^(x)3", is_zero(res), nz(res), anchor_r);
        const std::pair<const char*, Letter> gens[] = {{"Ea", uq::Ea}, {"Eb", uq::Eb}, {"Fa", uq::Fa},
                                                       {"Fb", uq::Fb}, {"Ka", uq::Ka}, {"Kb", uq::Kb}};
        for (const auto& [name, l] : gens) {
            const Mat d = delta_phi(l);
            const Mat res2 = mat_add(mat_mul(d, S), mat_mul(S, d), Scalar(-1));
            rep.add(std::string("rmatrix.invariance.") + name,
                    std::string("S commutes with (phi x phi) Delta(") + name + ")", is_zero(res2), nz(res2), anchor_r);
        }
    }
    {
        const Kappa k = kappa();
        rep.add("rmatrix.kappa.idempotent", "kappa^2 = kappa and kappa has rank 1",
                mat_mul(k.projector, k.projector) == k.projector && rank(k.projector) == 1, "",
                "projector onto the trivial submodule");
        const Mat Sk = mat_mul(S, k.projector), kS = mat_mul(k.projector, S);
        Scalar c;
        for (int a = 0; a < 16 && c.is_zero(); ++a)
            for (int b = 0; b < 16; ++b)
                if (!k.projector[a][b].is_zero()) {
                    c = Sk[a][b] / k.projector[a][b];
                    break;
                }
        const Mat diff = mat_add(Sk, k.projector, -c);
        Check& ch = rep.add("rmatrix.kappa.eigen", "S kappa = kappa S is a multiple of kappa",
                            Sk == kS && is_zero(diff), "S kappa = (" + c.str() + ") kappa",
                            "projector onto the trivial submodule");
        ch.values["eigenvalue"] = c.str();
        bool inv = true;
        for (Letter l : {uq::Ea, uq::Eb, uq::Fa, uq::Fb, uq::Ka, uq::Kb}) {
            const Mat d = delta_phi(l);
            const Scalar eps = uq::counit(NCPoly::letter(l));
            for (int a = 0; a < 16; ++a) {
                Scalar s;
                for (int b = 0; b < 16; ++b)
                    if (!d[a][b].is_zero() && !k.vector[b].is_zero()) s += d[a][b] * k.vector[b];
                inv = inv && s == eps * k.vector[a];
            }
        }
        rep.add("rmatrix.kappa.vector", "sum_i q^rho_i eps_i w_i' (x) w_i spans a trivial submodule", inv, "",
                "projector onto the trivial submodule");
    }
    {
        bool nil = true;
        std::string det;
        for (const auto& rf : root_factors()) {
            const Mat f = verma::phi_poly(rf.f), e = verma::phi_poly(rf.e);
            const bool ok = is_zero(mat_mul(f, f)) && is_zero(mat_mul(e, e)) && !is_zero(f) && !is_zero(e);
            nil = nil && ok;
            det += std::string(det.empty() ? "" : ", ") + rf.name + (ok ? " nilpotent" : " NOT nilpotent");
        }
        rep.add("rmatrix.universal.truncation", "phi of every root vector squares to zero on C^4", nil, det,
                "q-exponential factors truncate on C^4");
    }
    {
        const Selection& sel = selection();
        const Mat A = assembled_R_c4(), R = explicit_R();
        Check& c = rep.add("rmatrix.universal.explicit", "assembled R on C^4 (x) C^4 equals the explicit R entrywise",
                           A == R, "convention: " + convention().order, anchor_r);
        c.values["convention"] = convention().order;
        c.values["weights"] = convention().weights;
        c.values["scalar"] = "1";
        std::string all;
        for (const auto& p : sel.passing) all += (all.empty() ? "" : "; ") + p;
        c.values["passing_orders"] = all;
        rep.add("rmatrix.universal.coproduct", "(id (x) Delta) R = R13 R12 on C^4 (x) C^4 (x) C^4", sel.coproduct_ok,
                "", "quasitriangular structure");
        const Mat P = flip();
        rep.add("rmatrix.universal.flip", "assembled R21 equals P R P", assembled_R21_c4() == mat_mul(mat_mul(P, R), P),
                "", anchor_r);
    }
    return rep;
}

namespace {

struct Failure {
    std::size_t count = 0;
    std::string first;
    void note(const std::string& what) {
        if (!count++) first = what;
    }
    std::string detail(std::size_t tested) const {
        return std::to_string(tested) + " tested, " + std::to_string(count) + " failed" +
               (count ? "; first: " + first : "");
    }
};

TensorVector poly_in_Q(const OperatorMatrix& Q, const std::vector<Scalar>& roots, const TensorVector& x) {
    TensorVector y = x;
    for (const Scalar& r : roots) y = minus(Q.apply(y), scaled(y, r));
    return y;
}

void q_checks(Report& rep, const OperatorMatrix& Q, int guard, const std::string& prefix, bool special_quotient) {
    const Module& m = Q.module();
    const int top = Q.max_degree() - guard;
    const Scalar q = Scalar::q(), mu = m.mu();
    const auto low = Q.basis_up_to(top);
    const std::string anchor_eig = "eigenvalues of Q on C^4 (x) M";

    {
        const TensorVector w1v = basis_vector(0, {0, 0, 0});
        const TensorVector c = apply_cartan(m, w1v);
        rep.add(prefix + ".cartan_w1v", "Cartan factor on w1 (x) v is mu", c == scaled(w1v, mu), c.str(),
                "Cartan factor");
        const TensorVector img = Q.apply(w1v);
        Check& ch = rep.add(prefix + ".w1v", "Q(w1 (x) v) = mu^2 (w1 (x) v)", img == scaled(w1v, mu * mu), img.str(),
                            anchor_eig);
        if (m.mode() == Mode::special) {
            const bool v = img == scaled(w1v, -q.pow(-2));
            ch.values["equals_minus_q^-2"] = v ? "true" : "false";
            ch.pass = ch.pass && v;
        }
    }
    {
        Failure f;
        std::size_t n = 0;
        for (const Tuple& t : Q.basis())
            for (int j = 0; j < 4; ++j)
                for (int i = 0; i < 4; ++i)
                    for (const auto& [tt, c] : Q.entry(i, j, t).terms) {
                        ++n;
                        const EpsWeight lhs = verma::tuple_weight(tt) + uq::kVectorWeights[i];
                        const EpsWeight rhs = verma::tuple_weight(t) + uq::kVectorWeights[j];
                        if (lhs != rhs) f.note("Q" + std::to_string(i + 1) + std::to_string(j + 1));
                    }
        rep.add(prefix + ".weight_shift", "entry Q_ij shifts weight by wt(w_i) - wt(w_j)", f.count == 0, f.detail(n),
                "operator matrix Q");
    }
    if (special_quotient) {
        Failure f;
        std::size_t n = 0;
        for (const Tuple& t : low)
            for (int j = 0; j < 4; ++j) {
                ++n;
                const TensorVector x = basis_vector(j, t);
                if (!poly_in_Q(Q, {q.pow(-2), -q.pow(-2)}, x).is_zero()) f.note("w" + std::to_string(j + 1));
            }
        rep.add(prefix + ".square", "Q^2 = q^-4 on C^4 (x) M through degree " + std::to_string(top), f.count == 0,
                f.detail(n), "relation Q^2 = q^-4");
    } else {
        Failure f;
        std::size_t n = 0;
        const std::vector<Scalar> roots{mu * mu, q.pow(-2), mu * mu * q.pow(-4)};
        for (const Tuple& t : low)
            for (int j = 0; j < 4; ++j) {
                ++n;
                if (!poly_in_Q(Q, roots, basis_vector(j, t)).is_zero()) f.note("w" + std::to_string(j + 1));
            }
        rep.add(prefix + ".cubic", "(Q - mu^2)(Q - q^-2)(Q - mu^2 q^-4) = 0 through degree " + std::to_string(top),
                f.count == 0, f.detail(n), anchor_eig);
        // Casimir values on the three subquotients: lambda + eps1, lambda + eps2, lambda - eps1
        Failure g;
        const std::vector<Scalar> casimir{mu * mu, q.pow(-2), (mu * mu).inverse() * q.pow(-8)};
        for (const Tuple& t : low)
            for (int j = 0; j < 4; ++j)
                if (!poly_in_Q(Q, casimir, basis_vector(j, t)).is_zero()) g.note("w" + std::to_string(j + 1));
        rep.add(prefix + ".cubic_casimir",
                "(Q - mu^2)(Q - q^-2)(Q - mu^-2 q^-8) = 0 through degree " + std::to_string(top), g.count == 0,
                g.detail(n), anchor_eig);
    }
    {
        const Scalar D[4] = {q.pow(4), q.pow(2), q.pow(-2), q.pow(-4)};
        Failure f;
        Scalar value;
        bool have = false;
        for (const Tuple& t : low) {
            ModuleVector tr;
            for (int i = 0; i < 4; ++i) tr.add_scaled(Q.entry(i, i, t), D[i]);
            if (special_quotient) {
                if (!tr.is_zero()) f.note(tr.str());
                continue;
            }
            // central: acts by one scalar
            const Scalar c = tr.coeff(t);
            ModuleVector rest = tr;
            rest.add(t, -c);
            if (!have) {
                value = c;
                have = true;
            }
            if (!rest.is_zero() || !(c == value)) f.note(tr.str());
        }
        Check& ch = special_quotient
                        ? rep.add(prefix + ".qtrace", "Tr_q(Q) = 0 through degree " + std::to_string(top),
                                  f.count == 0, f.detail(low.size()), "q-trace of Q vanishes")
                        : rep.add(prefix + ".qtrace", "Tr_q(Q) acts by a scalar through degree " + std::to_string(top),
                                  f.count == 0, f.detail(low.size()), "q-trace of Q");
        if (!special_quotient) ch.values["scalar"] = value.str();
    }
    {
        const std::pair<const char*, Letter> gens[] = {{"Ea", uq::Ea}, {"Eb", uq::Eb}, {"Fa", uq::Fa},
                                                       {"Fb", uq::Fb}, {"Ka", uq::Ka}, {"Kb", uq::Kb}};
        for (const auto& [name, l] : gens) {
            Failure f;
            std::size_t n = 0;
            for (const Tuple& t : low)
                for (int j = 0; j < 4; ++j) {
                    ++n;
                    const TensorVector x = basis_vector(j, t);
                    const TensorVector a = Q.apply(verma::tensor_act_letter(m, l, x));
                    const TensorVector b = verma::tensor_act_letter(m, l, Q.apply(x));
                    if (!(a == b)) f.note("w" + std::to_string(j + 1) + " (x) " + ModuleVector{m.variant(), {{t, 1}}}.str());
                }
            rep.add(prefix + ".invariance." + name, std::string("Q commutes with Delta(") + name + ")", f.count == 0,
                    f.detail(n), "Q is the image of an invariant element");
        }
    }
    if (special_quotient) {
        // entry identities of the generator matrix, 0-based (i, j, c): sum c Q_ij = 0
        using T = std::vector<std::tuple<int, int, Scalar>>;
        const std::vector<std::pair<std::string, T>> shape{
            {"Q14 = 0", {{0, 3, 1}}},
            {"Q23 = 0", {{1, 2, 1}}},
            {"Q22 = -q^2 Q11", {{1, 1, 1}, {0, 0, q.pow(2)}}},
            {"Q33 = -q^2 Q11", {{2, 2, 1}, {0, 0, q.pow(2)}}},
            {"Q44 = q^4 Q11", {{3, 3, 1}, {0, 0, -q.pow(4)}}},
            {"Q24 = -Q13", {{1, 3, 1}, {0, 2, 1}}},
            {"Q34 = q^2 Q12", {{2, 3, 1}, {0, 1, -q.pow(2)}}},
            {"Q42 = -Q31", {{3, 1, 1}, {2, 0, 1}}},
            {"Q43 = q^2 Q21", {{3, 2, 1}, {1, 0, -q.pow(2)}}},
        };
        for (std::size_t s = 0; s < shape.size(); ++s) {
            const auto& [name, terms] = shape[s];
            Failure f;
            for (const Tuple& t : Q.basis()) {
                const ModuleVector r = combine(Q, terms, m.vec(t));
                if (!r.is_zero()) f.note(r.str());
            }
            std::string id = name.substr(0, 3);
            rep.add(prefix + ".shape." + id, name + " as operators through degree " + std::to_string(Q.max_degree()),
                    f.count == 0, f.detail(Q.basis().size()), "generator matrix of the quantum sphere");
        }
    }
}

} // namespace

Report q_report(Mode mu_mode, int N, int guard) {
    if (N < guard) throw Error("degree cap " + std::to_string(N) + " is below the guard band " + std::to_string(guard));
    Report rep;
    rep.suite = "q-" + std::string(mode_name(mu_mode));
    rep.config["N"] = std::to_string(N);
    rep.config["guard"] = std::to_string(guard);
    rep.config["mode"] = std::string(mode_name(mu_mode));
    if (mu_mode == Mode::special) {
        OperatorMatrix Q(verma::Variant::upper_quotient, Mode::special, N);
        q_checks(rep, Q, guard, "q.special", true);
    } else {
        OperatorMatrix Q(verma::Variant::upper_hat, Mode::generic, N);
        q_checks(rep, Q, guard, "q.generic", false);
    }
    return rep;
}

// ---------------------------------------------------------------- reflection

namespace {

using TripleKey = std::tuple<int, int, Tuple>;
struct Triple {
    std::map<TripleKey, Scalar> terms;
    void add(int i, int j, const Tuple& t, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, ins] = terms.try_emplace({i, j, t}, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool operator==(const Triple& o) const { return terms == o.terms; }
};

// a 16x16 matrix on the first two legs
Triple apply12(const Mat& S, const Triple& x) {
    Triple r;
    for (const auto& [key, c] : x.terms) {
        const auto& [i, j, t] = key;
        for (int a = 0; a < 16; ++a)
            if (!S[a][4 * i + j].is_zero()) r.add(a / 4, a % 4, t, c * S[a][4 * i + j]);
    }
    return r;
}

Triple applyQ2(const OperatorMatrix& Q, const Triple& x) {
    Triple r;
    for (const auto& [key, c] : x.terms) {
        const auto& [i, j, t] = key;
        for (int k = 0; k < 4; ++k)
            for (const auto& [tt, y] : Q.entry(k, j, t).terms) r.add(i, k, tt, c * y);
    }
    return r;
}

Triple scaled(const Triple& x, const Scalar& s) {
    Triple r;
    for (const auto& [k, c] : x.terms) r.add(std::get<0>(k), std::get<1>(k), std::get<2>(k), c * s);
    return r;
}

std::string tstr(const Triple& x) {
    if (x.terms.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : x.terms) {
        const auto& [i, j, t] = k;
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ") w" + std::to_string(i + 1) + " w" + std::to_string(j + 1) + " (" +
             std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
    }
    return s;
}

} // namespace

Report reflection_report(int N, int guard) {
    if (N < guard) throw Error("degree cap " + std::to_string(N) + " is below the guard band " + std::to_string(guard));
    Report rep;
    rep.suite = "reflection";
    rep.config["N"] = std::to_string(N);
    rep.config["guard"] = std::to_string(guard);
    OperatorMatrix Q(verma::Variant::upper_quotient, Mode::special, N);
    const auto low = Q.basis_up_to(N - guard);
    const Mat S = braid_S();
    const Kappa K = kappa();
    const Scalar target = -Scalar::q_pow(-5);
    auto QSQ = [&](const Triple& x) { return applyQ2(Q, apply12(S, applyQ2(Q, x))); };
    {
        Failure f;
        std::size_t n = 0;
        for (const Tuple& t : low)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    ++n;
                    Triple x;
                    x.add(i, j, t, 1);
                    const Triple a = apply12(S, applyQ2(Q, apply12(S, applyQ2(Q, x))));
                    const Triple b = applyQ2(Q, apply12(S, applyQ2(Q, apply12(S, x))));
                    if (!(a == b)) f.note("w" + std::to_string(i + 1) + " w" + std::to_string(j + 1));
                }
        rep.add("reflection.equation", "S12 Q2 S12 Q2 = Q2 S12 Q2 S12 through degree " + std::to_string(N - guard),
                f.count == 0, f.detail(n), "reflection equation");
    }
    {
        Failure f;
        for (const Tuple& t : low) {
            Triple x;
            for (int a = 0; a < 16; ++a) x.add(a / 4, a % 4, t, K.vector[a]);
            const Triple y = QSQ(x);
            if (!(y == scaled(x, target))) f.note(tstr(y));
        }
        rep.add("reflection.kappa_left", "Q2 S12 Q2 (kappa (x) xi) = -q^-5 (kappa (x) xi)", f.count == 0,
                f.detail(low.size()), "kappa constant of the reflection equation");
    }
    {
        Failure f;
        std::size_t n = 0;
        for (const Tuple& t : low)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    ++n;
                    Triple x;
                    x.add(i, j, t, 1);
                    const Triple a = apply12(K.projector, QSQ(x));
                    const Triple b = scaled(apply12(K.projector, x), target);
                    if (!(a == b)) f.note("w" + std::to_string(i + 1) + " w" + std::to_string(j + 1));
                }
        rep.add("reflection.kappa_right", "kappa Q2 S12 Q2 = -q^-5 kappa through degree " + std::to_string(N - guard),
                f.count == 0, f.detail(n), "kappa constant of the reflection equation");
    }
    {
        Triple x;
        for (int a = 0; a < 16; ++a) x.add(a / 4, a % 4, {0, 0, 0}, K.vector[a]);
        const Triple y = QSQ(x);
        const auto& [k0, c0] = *x.terms.begin();
        auto it = y.terms.find(k0);
        const Scalar c = it == y.terms.end() ? Scalar() : it->second / c0;
        Check& ch = rep.add("reflection.kappa_highest", "on kappa (x) v the constant is -q^-5",
                            y == scaled(x, c) && c == target, "constant " + c.str(),
                            "kappa constant of the reflection equation");
        ch.values["constant"] = c.str();
    }
    return rep;
}

} // namespace qs4::rmat
