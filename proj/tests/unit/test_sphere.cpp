#include "doctest.h"
#include "qs4/expr.hpp"
#include "qs4/sphere.hpp"

using namespace qs4;
using namespace qs4::sphere;

namespace {

PoissonPoly V(Var v) { return PoissonPoly::var(v); }

std::size_t binom(int n, int k) {
    if (k < 0 || n < k) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

NCPoly S(const std::string& text) {
    ParseContext ctx;
    ctx.alphabet = &alphabet();
    return parse_expr(text, ctx);
}

} // namespace

TEST_CASE("Poisson bracket is a biderivation") {
    const PoissonPoly f = V(kA) * V(kB), g = V(kY);
    const PoissonPoly expect = V(kA) * poisson_bracket(V(kB), g) + V(kB) * poisson_bracket(V(kA), g);
    CHECK(poisson_bracket(f, g) == expect);
    CHECK(poisson_bracket(g, f) == Rational(-1) * expect);
}

TEST_CASE("Jacobi identity on generator triples") {
    for (int i = 0; i < kVars; ++i)
        for (int j = 0; j < kVars; ++j)
            for (int k = 0; k < kVars; ++k) {
                const PoissonPoly x = V(Var(i)), y = V(Var(j)), z = V(Var(k));
                const PoissonPoly r = poisson_bracket(x, poisson_bracket(y, z)) +
                                      poisson_bracket(y, poisson_bracket(z, x)) +
                                      poisson_bracket(z, poisson_bracket(x, y));
                CHECK(r.is_zero());
            }
}

TEST_CASE("sphere polynomial is a Casimir") {
    for (int i = 0; i < kVars; ++i) CHECK(poisson_bracket(sphere_polynomial(), V(Var(i))).is_zero());
}

TEST_CASE("quantum relations") {
    CHECK(relations().size() == 11);
    const RewriteSystem& Q = quantum_system();
    CHECK(Q.globally_confluent());
    CHECK(Q.max_lhs_length() == 2);
    for (const auto& r : relations()) CHECK_MESSAGE(Q.reduce(r.poly).is_zero(), r.name);
    // a^2 + bc + yz = q^-4
    CHECK(Q.reduce(S("a*a + b*c + y*z - q^-4")).is_zero());
}

TEST_CASE("filtered dimensions against binomials") {
    std::size_t cum = 0;
    for (int d = 0; d <= 6; ++d) {
        cum += binom(d + 4, 4) - binom(d + 2, 4);
        CHECK(classical_filtered_dim(d) == cum);
        CHECK(quantum_filtered_dim(d) == cum);
    }
}

TEST_CASE("generators from Q act on M") {
    const rmat::OperatorMatrix Q(verma::Variant::upper_quotient, Mode::special, 6);
    const Generators g = extract_generators(Q);
    const verma::ModuleVector v = Q.module().highest();
    // relations hold as operators at the highest vector
    for (const auto& r : relations()) CHECK_MESSAGE(g.apply(r.poly, v).is_zero(), r.name);
    verma::ModuleVector one = v;
    one.terms.begin()->second = Scalar::q_pow(-4);
    CHECK(g.apply(S("a*a + b*c + y*z"), v) == one);
}

TEST_CASE("sphere suites") {
    CHECK(classical_report().all_pass());
    CHECK(quantum_report(5).all_pass());
    CHECK(semiclassical_report().all_pass());
    CHECK(operator_report(6, 4, 2).all_pass());
}
