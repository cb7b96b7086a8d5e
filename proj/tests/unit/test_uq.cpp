#include <random>

#include "doctest.h"
#include "qs4/uq.hpp"

using namespace qs4;
using namespace qs4::uq;

namespace {

NCPoly P(const std::string& s) { return parse(s); }
NCPoly nf(const NCPoly& x) { return algebra().reduce(x); }

// number of (a, d, c, b) with a + 3d + 2c + b = n: F-word lengths of the PBW factors
std::size_t pbw_count(int n) {
    std::size_t k = 0;
    for (int d = 0; 3 * d <= n; ++d)
        for (int c = 0; 3 * d + 2 * c <= n; ++c) k += static_cast<std::size_t>(n - 3 * d - 2 * c + 1);
    return k;
}

Word random_word(std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> l(0, kGenerators - 1);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(l(rng)));
    return w;
}

} // namespace

TEST_CASE("completed system") {
    const RewriteSystem& A = algebra();
    CHECK(A.rules().size() == 34);
    CHECK(A.max_lhs_length() == 5);
    CHECK(A.globally_confluent());
    CHECK(defining_system().rules().size() == 32);
}

TEST_CASE("defining and Serre relations reduce to zero") {
    CHECK(nf(P("Ea*Fa - Fa*Ea - (Ka - Ka^-1)/(q - q^-1)")).is_zero());
    CHECK(nf(P("Eb*Fb - Fb*Eb - (Kb - Kb^-1)/(q^2 - q^-2)")).is_zero());
    CHECK(nf(P("Ka*Ea - q^2*Ea*Ka")).is_zero());
    CHECK(nf(P("Kb*Ea - q^-2*Ea*Kb")).is_zero());
    CHECK(nf(P("Fb*Fb*Fa - (q^2 + q^-2)*Fb*Fa*Fb + Fa*Fb*Fb")).is_zero());
    CHECK(nf(P("Fa^3*Fb - (q^2+1+q^-2)*(Fa^2*Fb*Fa - Fa*Fb*Fa^2) - Fb*Fa^3")).is_zero());
}

TEST_CASE("root vectors") {
    CHECK(root_vector(Root::gamma, false) == nf(P("Fb*Fa - q^-2*Fa*Fb")));
    CHECK(root_vector(Root::gamma, true) == nf(P("Ea*Eb - q^2*Eb*Ea")));
    // f'_delta = f_delta + (q^2 - 1) f_alpha f_gamma
    const NCPoly usual = root_vector(Root::delta, false, true);
    CHECK(nf(usual - P("Fd") - P("(q^2 - 1)*Fa*Fg")).is_zero());
    CHECK(nf(P("Fa*Fd - Fd*Fa")).is_zero());
    CHECK(nf(P("Fb*Fg - q^2*Fg*Fb")).is_zero());
    CHECK(word_weight(root_vector(Root::delta, true).leading_word()) == kDelta);
}

TEST_CASE("PBW counts against the monomial oracle") {
    const std::vector<Letter> F{Fa, Fb}, E{Ea, Eb};
    for (int n = 0; n <= 7; ++n) {
        CHECK(algebra().count_irreducible(n, F) == pbw_count(n));
        CHECK(algebra().count_irreducible(n, E) == pbw_count(n));
    }
}

TEST_CASE("PBW coordinates") {
    const PbwCoords c = to_pbw(nf(P("Fb*Fa")));
    PbwIndex ab, g;
    ab.f = {1, 0, 0, 1};
    g.f = {0, 0, 1, 0};
    REQUIRE(c.size() == 2);
    CHECK(c.at(ab) == Scalar::q_pow(-2));
    CHECK(c.at(g) == Scalar(1));
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        const NCPoly x = nf(NCPoly::monomial(random_word(rng, 4)));
        CHECK(from_pbw(to_pbw(x)) == x);
    }
}

TEST_CASE("Hopf axioms on random words") {
    std::mt19937 rng(11);
    const RewriteSystem& A = algebra();
    for (int t = 0; t < 10; ++t) {
        const NCPoly x = nf(NCPoly::monomial(random_word(rng, 3)));
        const NCPoly y = nf(NCPoly::monomial(random_word(rng, 2)));
        // S anti-multiplicative, Delta multiplicative
        CHECK(antipode(A.mul(x, y)) == A.mul(antipode(y), antipode(x)));
        CHECK(coproduct(A.mul(x, y)) == coproduct(x).mul(coproduct(y), A));
        // m(S x id) Delta = eps
        NCPoly lhs;
        for (const auto& [k, c] : coproduct(x).terms)
            lhs.add_scaled(A.mul(antipode(NCPoly::monomial(k.first)), NCPoly::monomial(k.second)), c);
        CHECK(lhs == NCPoly(counit(x)));
    }
}

TEST_CASE("Cartan involution is an automorphism") {
    const RewriteSystem& A = algebra();
    CHECK(omega(gen(Ea)) == gen(Fa));
    CHECK(omega(gen(Ka)) == gen(Kai));
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        const NCPoly x = nf(NCPoly::monomial(random_word(rng, 2)));
        const NCPoly y = nf(NCPoly::monomial(random_word(rng, 2)));
        CHECK(omega(A.mul(x, y)) == A.mul(omega(x), omega(y)));
        CHECK(omega(omega(x)) == x);
    }
}

TEST_CASE("antipode of the twisted lowering vector") {
    // anti-multiplicative S: K_gamma^-1 (q^2 Ea Eb - Eb Ea)
    CHECK(antipode(x2_tilde()) == nf(P("Ka^-1*Kb^-1*(q^2*Ea*Eb - Eb*Ea)")));
}

TEST_CASE("Levi projection") {
    CHECK(project_l(P("Ka"), Mode::generic) == Scalar::mu(Mode::generic));
    CHECK(project_l(P("Kb"), Mode::generic) == Scalar(1));
    CHECK(project_l(P("Fa*Ea"), Mode::generic).is_zero());
    // lambda([Ea, Fa]) = (mu - mu^-1)/(q - q^-1)
    const Scalar mu = Scalar::mu(Mode::special), q = Scalar::q();
    CHECK(project_l(nf(P("Ea*Fa")), Mode::special) == (mu - mu.inverse()) / (q - q.inverse()));
}

TEST_CASE("suites pass on the built-in system") {
    CHECK(presentation_report(algebra()).all_pass());
    CHECK(pbw_report(6).all_pass());
}
