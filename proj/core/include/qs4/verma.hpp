#pragma once

// Parabolic Verma modules over U_q(sp4), their quotients, the lower (dual)
// modules and the tensor product with the vector representation C^4.

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qs4/linalg.hpp"
#include "qs4/report.hpp"
#include "qs4/uq.hpp"

namespace qs4::verma {

enum class Variant { upper_hat, upper_quotient, lower_hat, lower_quotient };

std::string variant_name(Variant v);
inline bool is_lower(Variant v) { return v == Variant::lower_hat || v == Variant::lower_quotient; }
inline bool is_quotient(Variant v) { return v == Variant::upper_quotient || v == Variant::lower_quotient; }

// (a, d, c): Fa^a Fd^d Fg^c v for upper modules, x1^a Ed^d x2^c v- for lower
using Tuple = std::array<int, 3>;

inline int degree(const Tuple& t) { return t[0] + 2 * t[1] + t[2]; }
/// Weight relative to the highest weight (upper) or its negative (lower).
uq::EpsWeight tuple_weight(const Tuple& t, bool lower = false);

struct ModuleVector {
    Variant variant = Variant::upper_hat;
    std::map<Tuple, Scalar> terms;

    void add(const Tuple& t, const Scalar& c);
    void add_scaled(const ModuleVector& o, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
    Scalar coeff(const Tuple& t) const;
    int max_degree() const;
    friend bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.terms == b.terms; }
    std::string str() const;
};

class Module {
public:
    Module(Variant variant, Mode mu_mode);

    Variant variant() const { return variant_; }
    Mode mode() const { return mode_; }
    Scalar mu() const { return Scalar::mu(mode_); }

    ModuleVector vec(const Tuple& t, const Scalar& c = Scalar(1)) const;
    ModuleVector highest() const { return vec({0, 0, 0}); }
    /// Basis of the weight space with alpha-count na and beta-count nb.
    std::vector<Tuple> weight_basis(int na, int nb) const;
    std::vector<Tuple> basis_up_to(int max_degree) const;

    /// Expand to Chevalley words, multiply by u, reduce, PBW-evaluate at the
    /// highest vector.
    ModuleVector act(const NCPoly& u, const ModuleVector& v) const;
    /// Same action by recursion on the leading PBW factor; memoized.
    ModuleVector act_direct(const NCPoly& u, const ModuleVector& v) const;
    ModuleVector act_letter(Letter l, const ModuleVector& v) const;

    /// Scalar by which the Cartan letter acts on a basis tuple.
    Scalar cartan(Letter k, const Tuple& t) const;

private:
    Variant variant_;
    Mode mode_;

    struct Memo;
    std::shared_ptr<Memo> memo_;

    ModuleVector act_upper(const NCPoly& u, const ModuleVector& v) const;
    ModuleVector act_direct_upper(const NCPoly& u, const ModuleVector& v) const;
    void drop_delta(ModuleVector& v) const;
};

/// Solutions x of Ea x = 0 (and Eb x = 0 unless skipped) in a weight space.
std::vector<ModuleVector> singular_vectors(const Module& m, int na, int nb, bool only_e_beta = false);

// ---- C^4 (x) M
/// phi of a letter as a 4x4 matrix, columns indexed by the source basis vector.
const Mat& phi(Letter l);
Mat phi_poly(const NCPoly& x);

struct TensorVector {
    using Key = std::pair<int, Tuple>;
    std::map<Key, Scalar> terms;

    void add(int i, const Tuple& t, const Scalar& c);
    void add_scaled(const TensorVector& o, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.terms == b.terms; }
    std::string str() const;
};

/// Weight of w_i (x) t relative to lambda.
uq::EpsWeight tensor_weight(int i, const Tuple& t);

TensorVector tensor_act(const Module& m, const NCPoly& u, const TensorVector& t);
TensorVector tensor_act_letter(const Module& m, Letter l, const TensorVector& t);
TensorVector project_quotient(const TensorVector& t);

/// w1 (x) f_a v - q (mu - mu^-1)/(q - q^-1) w2 (x) v
TensorVector u_eps2(Mode mu_mode);
/// w1 (x) Fd v + (q mu + q^-1 mu^-1)(q w2 (x) Fb Fa v - q^3 w3 (x) Fa v - q^4 (mu-mu^-1)/(q-q^-1) w4 (x) v)
TensorVector u_minus_eps1(Mode mu_mode);
/// Singular vectors of C^4 (x) M solved in the weight space lambda + offset.
std::vector<TensorVector> tensor_singular(const Module& m, uq::EpsWeight offset);

struct DimensionRow {
    uq::EpsWeight weight;
    int degree = 0;
    std::size_t dim = 0, rank1 = 0, rank2 = 0, rank_sum = 0;
};

// ---- suites
Report lemma_report(Mode mu_mode = Mode::generic);
Report singular_report(int max_degree);
Report action_report(int max_degree, unsigned seed);
/// C^4 (x) M_lambda = V1 (+) V2 by per-weight ranks through the given degree.
Report decompose_report(int max_degree, std::vector<DimensionRow>* table = nullptr);

} // namespace qs4::verma
