#pragma once

// Invariant pairing between the lower module M-_{-lambda} and M_lambda,
// its Gram diagonal and the coefficients of the star product.

#include <map>
#include <utility>

#include "qs4/report.hpp"
#include "qs4/verma.hpp"

namespace qs4::shapovalov {

/// x~1^k x~2^m with x~1 = Ea, x~2 = q^4 Eb Ea - q^2 Ea Eb.
NCPoly lower_monomial(int k, int m);
/// y1^k y2^m with y1 = Fa, y2 = Fg.
NCPoly upper_monomial(int k, int m);

/// lambda([S(x) y]_l) in U.
Scalar pairing(const NCPoly& x, const NCPoly& y, Mode mu_mode = Mode::special);
/// Coefficient of v_lambda in S(x) . (y v_lambda), computed in the module.
Scalar pairing_module(const NCPoly& x, const verma::ModuleVector& yv);

/// Pairing of a lower-module vector with an upper-module vector.
Scalar pair_vectors(const verma::ModuleVector& xi, const verma::ModuleVector& eta);

/// q^{m(m-2)+k(k-2)} (q-q^-1)^{-(k+m)} [2k]!! [2m]!!
Scalar gram_formula(int k, int m);
/// Inverse of gram_formula.
Scalar star_coefficient(int k, int m);

struct GramTable {
    int max = 0;
    Mode mode = Mode::special;
    std::map<std::pair<int, int>, Scalar> diag;
};
GramTable gram(int max);

Report pairing_report();
Report gram_report(int max, int offdiag_max, GramTable* table = nullptr);
Report contravariance_report(unsigned seed, int samples);
Report star_report(int max);

} // namespace qs4::shapovalov
