#include <random>
#include <sstream>

#include "doctest.h"
#include "qs4/error.hpp"
#include "qs4/expr.hpp"
#include "qs4/ncalg.hpp"

using namespace qs4;

namespace {

// x < y < z, commutative polynomial ring as a rewriting system
RewriteSystem commutative() {
    RewriteSystem s(Alphabet({"x", "y", "z"}));
    const Letter x = 0, y = 1, z = 2;
    auto w = [](std::initializer_list<Letter> ls) {
        Word r;
        for (Letter l : ls) r.push_back(static_cast<char>(l));
        return r;
    };
    s.add_rule(w({y, x}), NCPoly::monomial(w({x, y})), "yx = xy");
    s.add_rule(w({z, x}), NCPoly::monomial(w({x, z})), "zx = xz");
    s.add_rule(w({z, y}), NCPoly::monomial(w({y, z})), "zy = yz");
    return s;
}

ParseContext ctx_for(const RewriteSystem& s) {
    ParseContext c;
    c.alphabet = &s.alphabet();
    return c;
}

} // namespace

TEST_CASE("deglex order") {
    CHECK(deglex_less("b", "aa"));
    CHECK(deglex_less("ab", "ba"));
    CHECK_FALSE(deglex_less("ba", "ab"));
    CHECK_FALSE(deglex_less("a", "a"));
}

TEST_CASE("alphabet lookups and inverses") {
    Alphabet a({"Ka", "Ka^-1", "Ea"});
    CHECK(a.at("Ea") == 2);
    CHECK_FALSE(a.find("Eb").has_value());
    REQUIRE(a.inverse(0).has_value());
    CHECK(*a.inverse(0) == 1);
    CHECK(a.render(a.word({"Ka", "Ea"})) == "Ka*Ea");
}

TEST_CASE("normal forms in the commutative ring") {
    RewriteSystem s = commutative();
    const auto ctx = ctx_for(s);
    const NCPoly a = parse_expr("z*y*x - x*y*z", ctx);
    CHECK(s.reduce(a).is_zero());
    const NCPoly b = s.reduce(parse_expr("(x + y)*(x - y)", ctx));
    CHECK(b == parse_expr("x*x - y*y", ctx));
    CHECK(s.is_irreducible(Word{0, 1, 2}));
    CHECK_FALSE(s.is_irreducible(Word{2, 0}));
}

TEST_CASE("commutative system is confluent and counts monomials") {
    RewriteSystem s = commutative();
    auto amb = s.overlap_report(4);
    CHECK_FALSE(amb.empty());
    for (const auto& a : amb) CHECK(a.residual.is_zero());
    s.complete(3);
    CHECK(s.globally_confluent());
    // C(n+2, 2) monomials of degree n in three commuting variables
    for (int n = 0; n <= 6; ++n)
        CHECK(s.count_irreducible(n, {0, 1, 2}) == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
}

TEST_CASE("completion adds the missing overlap rule") {
    // yy -> x and yx -> xx; the overlap yyx resolves to xx and xxx
    RewriteSystem s(Alphabet({"x", "y"}));
    const auto ctx = ctx_for(s);
    s.add_relation(parse_expr("y*y - x", ctx), "yy = x");
    s.add_relation(parse_expr("y*x - x*x", ctx), "yx = xx");
    CHECK_FALSE(s.reduce(parse_expr("x*x*x - x*x", ctx)).is_zero());
    CompletionLog log;
    RewriteSystem c = s.completed(6, &log);
    CHECK_FALSE(log.added.empty());
    for (const auto& a : c.overlap_report(6)) CHECK(a.residual.is_zero());
    CHECK(c.reduce(parse_expr("x*x*x - x*x", ctx)).is_zero());
}

TEST_CASE("orientation errors") {
    RewriteSystem s(Alphabet({"x", "y"}));
    CHECK_THROWS_AS(s.add_rule(Word{0}, NCPoly::monomial(Word{1, 1})), OrderError);
}

TEST_CASE("parser errors carry offsets") {
    RewriteSystem s = commutative();
    const auto ctx = ctx_for(s);
    try {
        parse_expr("q^(2", ctx);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
    CHECK_THROWS_AS(parse_expr("x y", ctx), ParseError);
    CHECK_THROWS_AS(parse_expr("x*", ctx), ParseError);
    try {
        parse_expr("xx*y", ctx);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("'x'") != std::string::npos);
    }
    CHECK(suggest("Ex", {"Ea", "Fb"}) == "Ea");
    CHECK(suggest("completely_off", {"Ea", "Fb"}).empty());
}

TEST_CASE("render and parse round trip on random polynomials") {
    RewriteSystem s = commutative();
    const auto ctx = ctx_for(s);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> len(0, 4), let(0, 2), coef(-5, 5), ex(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        NCPoly p;
        for (int t = 0; t < 4; ++t) {
            Word w;
            for (int i = len(rng); i > 0; --i) w.push_back(static_cast<char>(let(rng)));
            Scalar c = Scalar(coef(rng)) * Scalar::q_pow(ex(rng));
            if (t == 3) c = c / (Scalar::q() + Scalar(1));
            p.add_term(w, c);
        }
        CHECK(parse_expr(p.str(s.alphabet()), ctx) == p);
    }
}

TEST_CASE("presentation files round trip") {
    RewriteSystem s = commutative();
    s.complete(3);
    std::stringstream buf;
    write_presentation(buf, s, "three commuting letters");
    RewriteSystem back = read_presentation(buf);
    REQUIRE(back.rules().size() == s.rules().size());
    for (std::size_t i = 0; i < s.rules().size(); ++i) {
        CHECK(back.rules()[i].lhs == s.rules()[i].lhs);
        CHECK(back.rules()[i].rhs == s.rules()[i].rhs);
    }
    std::stringstream bad("alphabet: x y\nrule: x -> y*y\n");
    CHECK_THROWS(read_presentation(bad));
}
