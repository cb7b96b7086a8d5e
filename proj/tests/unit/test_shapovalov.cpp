#include "doctest.h"
#include "qs4/shapovalov.hpp"

using namespace qs4;
using namespace qs4::shapovalov;

namespace {

Scalar q() { return Scalar::q(); }

} // namespace

TEST_CASE("pairing of the highest vectors") {
    CHECK(pairing(NCPoly(Scalar(1)), NCPoly(Scalar(1))) == Scalar(1));
}

TEST_CASE("pairing x~1 with y1 by hand") {
    // S(Ea) Fa = -Ka^-1 (Fa Ea + (Ka - Ka^-1)/(q - q^-1)) projects to (mu^-2 - 1)/(q - q^-1)
    const Scalar mu = Scalar::mu(Mode::special);
    const Scalar expect = (mu.pow(-2) - Scalar(1)) / (q() - q().inverse());
    CHECK(pairing(lower_monomial(1, 0), upper_monomial(1, 0)) == expect);
    CHECK(expect == (-q().pow(3) - q()) / (q().pow(2) - Scalar(1)));
}

TEST_CASE("mixed pairings vanish") {
    CHECK(pairing(lower_monomial(0, 1), upper_monomial(1, 0)).is_zero());
    CHECK(pairing(lower_monomial(1, 0), upper_monomial(0, 1)).is_zero());
    CHECK(pairing(lower_monomial(2, 0), upper_monomial(0, 1)).is_zero());
}

TEST_CASE("closed formula") {
    CHECK(gram_formula(0, 0) == Scalar(1));
    CHECK(gram_formula(1, 0) == q().inverse() * (q() + q().inverse()) / (q() - q().inverse()));
    // [2][4] for l = 2, not [4]^2
    CHECK(gram_formula(0, 2) == (q() - q().inverse()).pow(-2) * qint(2) * qint(4));
    for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= 3; ++m) CHECK(star_coefficient(k, m) * gram_formula(k, m) == Scalar(1));
}

TEST_CASE("Gram diagonal relation to the closed formula") {
    const GramTable g = gram(3);
    for (const auto& [km, v] : g.diag) {
        const auto [k, m] = km;
        CHECK(!v.is_zero());
        CHECK(v.is_rational());
        CHECK(v == gram_formula(k, m) * (-q().pow(2)).pow(k) * q().pow(4 * m));
    }
}

TEST_CASE("two pairing routes agree") {
    const verma::Module M(verma::Variant::upper_hat, Mode::special);
    for (int k = 0; k <= 2; ++k)
        for (int m = 0; m + k <= 2; ++m) {
            const verma::ModuleVector yv = M.act(upper_monomial(k, m), M.highest());
            CHECK(pairing_module(lower_monomial(k, m), yv) == pairing(lower_monomial(k, m), upper_monomial(k, m)));
        }
}

TEST_CASE("shapovalov suites") {
    CHECK(pairing_report().all_pass());
    CHECK(contravariance_report(4, 10).all_pass());
}
