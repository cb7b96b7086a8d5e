#pragma once

// R-matrices for the vector representation of U_q(sp4), the braid operator
// S = PR, the invariant projector kappa and the operator matrix Q = R21 R on
// C^4 (x) M.

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qs4/linalg.hpp"
#include "qs4/report.hpp"
#include "qs4/verma.hpp"

namespace qs4::rmat {

// 16x16 matrices; row/column index 4*i + j for w_i (x) w_j (0-based)
Mat unit4(int i, int j);
Mat kron(const Mat& a, const Mat& b);
Mat flip();
Mat mat_add(const Mat& a, const Mat& b, const Scalar& cb = Scalar(1));
bool is_zero(const Mat& m);
std::size_t nonzeros(const Mat& m);

Mat classical_r();
/// [r12,r13] + [r12,r23] + [r13,r23] on (C^4)^(x)3.
Mat cybe_residual();

Mat explicit_R();
Mat braid_S();
/// S1 S2 S1 - S2 S1 S2 on (C^4)^(x)3.
Mat braid_residual();

struct Kappa {
    Mat projector; // kappa^2 = kappa
    Vec vector;    // sum_i q^{rho_i} eps_i w_i' (x) w_i
};
Kappa kappa();

/// (phi x phi) Delta(x) for a letter x.
Mat delta_phi(Letter l);

// ---- universal R on C^4 (x) M

/// The convention fixed by matching the explicit R on C^4 (x) C^4.
struct Convention {
    std::string order;  // application order of the root factors
    std::string cartan; // side of the Cartan factor
    std::string weights;
};
const Convention& convention();

/// R assembled on C^4 (x) C^4 from the root factors.
Mat assembled_R_c4();
Mat assembled_R21_c4();

verma::TensorVector apply_R(const verma::Module& m, const verma::TensorVector& t);
verma::TensorVector apply_R21(const verma::Module& m, const verma::TensorVector& t);
verma::TensorVector apply_cartan(const verma::Module& m, const verma::TensorVector& t);

// Q(w_j (x) xi) = sum_i w_i (x) Q_ij xi
class OperatorMatrix {
public:
    OperatorMatrix(verma::Variant variant, Mode mu_mode, int max_degree);

    const verma::Module& module() const { return module_; }
    int max_degree() const { return N_; }
    const std::vector<verma::Tuple>& basis() const { return basis_; }
    std::vector<verma::Tuple> basis_up_to(int degree) const;

    /// Q_ij applied to a module vector; throws BoundError above the cap.
    verma::ModuleVector entry(int i, int j, const verma::ModuleVector& v) const;
    const verma::ModuleVector& entry(int i, int j, const verma::Tuple& t) const;
    verma::TensorVector apply(const verma::TensorVector& t) const;

private:
    verma::Module module_;
    int N_;
    std::vector<verma::Tuple> basis_;
    std::map<verma::Tuple, std::array<std::array<verma::ModuleVector, 4>, 4>> cols_;
};

/// Linear combination sum c_ij Q_ij evaluated on v.
verma::ModuleVector combine(const OperatorMatrix& q, const std::vector<std::tuple<int, int, Scalar>>& terms,
                            const verma::ModuleVector& v);

// ---- suites
Report rmatrix_report();
Report q_report(Mode mu_mode, int N, int guard);
Report reflection_report(int N, int guard);

} // namespace qs4::rmat
