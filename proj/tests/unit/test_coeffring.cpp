#include <random>

#include "doctest.h"
#include "qs4/coeffring.hpp"

using namespace qs4;

namespace {

Scalar lp(std::initializer_list<long> coeffs, int shift) {
    std::vector<Integer> c;
    for (long v : coeffs) c.emplace_back(v);
    return Scalar(QFunc::laurent(ZPoly(c), shift));
}

QFunc random_qfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2), sh(-2, 2);
    auto poly = [&] {
        std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        return ZPoly(c);
    };
    ZPoly den = poly();
    while (den.is_zero()) den = poly();
    return QFunc(sh(rng), poly(), den) ;
}

Scalar random_scalar(std::mt19937& rng, Mode m) {
    Scalar s(random_qfunc(rng));
    if (m == Mode::plain) return s;
    Scalar t(random_qfunc(rng));
    if (m == Mode::special) return s + t * Scalar::mu(m);
    std::uniform_int_distribution<int> k(1, 3);
    return (s + t * Scalar::mu(m)) / (Scalar::mu(m) + Scalar(k(rng)) * Scalar::q_pow(k(rng) - 2));
}

} // namespace

TEST_CASE("zpoly gcd and exact division") {
    ZPoly a(std::vector<Integer>{-1, 0, 1}); // q^2 - 1
    ZPoly b(std::vector<Integer>{-1, 1});    // q - 1
    CHECK(ZPoly::gcd(a, b) == b);
    CHECK(ZPoly::divexact(a, b) == ZPoly(std::vector<Integer>{1, 1}));
    ZPoly c(std::vector<Integer>{2, 4});
    CHECK(ZPoly::gcd(c, ZPoly(std::vector<Integer>{6, 12})) == c);
    CHECK_THROWS_AS(ZPoly::divexact(a, ZPoly(std::vector<Integer>{1, 0, 0, 1})), Error);
}

TEST_CASE("canonical rational functions") {
    QFunc x(0, ZPoly(std::vector<Integer>{-1, 0, 1}), ZPoly(std::vector<Integer>{-1, 1}));
    CHECK(x.is_laurent());
    CHECK(x == QFunc::laurent(ZPoly(std::vector<Integer>{1, 1})));
    QFunc y(0, ZPoly(std::vector<Integer>{0, 0, 3}), ZPoly(std::vector<Integer>{0, -6}));
    CHECK(y.shift() == 1);
    CHECK(y == QFunc(Rational(-1, 2)) * QFunc::q_pow(1));
    CHECK(y.at_one() == Rational(-1, 2));
    CHECK_THROWS_AS(QFunc(0, ZPoly(1), ZPoly(0)), DivisionByZero);
}

TEST_CASE("q-integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(2) == Scalar::q() + Scalar::q_pow(-1));
    CHECK(qint(-3) == -(Scalar::q_pow(2) + Scalar(1) + Scalar::q_pow(-2)));
    const Scalar q = Scalar::q();
    for (int n = -6; n <= 6; ++n) {
        Scalar expect = (q.pow(n) - q.pow(-n)) / (q - q.inverse());
        CHECK(qint(n) == expect);
        CHECK(qint(n).invert_q() == qint(n));
    }
    CHECK(qint_base(3, 2) == lp({1, 0, 0, 0, 1, 0, 0, 0, 1}, -4));
}

TEST_CASE("double factorial") {
    CHECK(qdoublefact(0).is_one());
    CHECK(qdoublefact(1) == qint(2));
    const Scalar q = Scalar::q();
    CHECK(qdoublefact(2) == (q + q.inverse()) * (q.pow(3) + q + q.inverse() + q.pow(-3)));
    CHECK_THROWS(qdoublefact(-1));
    CHECK(qfact(3) == qint(2) * qint(3));
}

TEST_CASE("limit at q = 1") {
    const Scalar q = Scalar::q();
    CHECK(limit_q1((q.pow(2) - 1) / (q - 1)) == 2);
    CHECK(limit_q1(q.pow(-4)) == 1);
    CHECK(limit_q1((q.pow(4) - 1) / (q.pow(2) - 1)) == 2);
    CHECK_THROWS_AS(limit_q1(Scalar(1) / (q - 1)), PoleError);
    CHECK_THROWS_AS(limit_q1(Scalar::mu(Mode::special)), ModeMismatch);
}

TEST_CASE("special mu field") {
    const Scalar mu = Scalar::mu(Mode::special);
    CHECK(mu * mu == -Scalar::q_pow(-2));
    CHECK(mu / (mu * mu) == -Scalar::q_pow(2) * mu);
    CHECK(mu.inverse() == -Scalar::q_pow(2) * mu);
    CHECK(Scalar::mu_pow(Mode::special, -3) == mu.pow(-3));
    CHECK(Scalar::mu_pow(Mode::special, 5) == mu.pow(5));
    Scalar x = Scalar::q() + mu;
    CHECK(x * Scalar(1) == x);
    CHECK(mu.mode() == Mode::special);
    CHECK((mu * mu).mode() == Mode::plain);
}

TEST_CASE("generic mu field") {
    const Scalar mu = Scalar::mu(Mode::generic);
    CHECK(mu.mode() == Mode::generic);
    CHECK(!(mu * mu == -Scalar::q_pow(-2)));
    const Scalar x = (mu - mu.inverse()) / (Scalar::q() - Scalar::q_pow(-1));
    CHECK((x * (Scalar::q() - Scalar::q_pow(-1)) + mu.inverse()) == mu);
    CHECK((mu / mu).is_one());
    CHECK(((mu * mu + 1) / (mu + Scalar::q())).specialize() ==
          (Scalar(1) - Scalar::q_pow(-2)) / (Scalar::mu(Mode::special) + Scalar::q()));
}

TEST_CASE("mode mixing and division errors") {
    CHECK_THROWS_AS(Scalar::mu(Mode::generic) + Scalar::mu(Mode::special), ModeMismatch);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    CHECK_THROWS_AS(Scalar::mu(Mode::plain), ModeMismatch);
}

TEST_CASE("field laws on random scalars") {
    std::mt19937 rng(7);
    for (Mode m : {Mode::plain, Mode::special, Mode::generic}) {
        for (int it = 0; it < 15; ++it) {
            Scalar a = random_scalar(rng, m), b = random_scalar(rng, m), c = random_scalar(rng, m);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("norm form in the special field") {
    std::mt19937 rng(11);
    const Scalar mu = Scalar::mu(Mode::special);
    for (int it = 0; it < 20; ++it) {
        Scalar s0(random_qfunc(rng)), s1(random_qfunc(rng));
        CHECK((s0 + s1 * mu) * (s0 - s1 * mu) == s0 * s0 + Scalar::q_pow(-2) * s1 * s1);
    }
}

TEST_CASE("canonical form is idempotent") {
    std::mt19937 rng(3);
    for (int it = 0; it < 30; ++it) {
        QFunc a = random_qfunc(rng);
        QFunc b(a.shift(), a.num(), a.den());
        CHECK(a == b);
        QFunc c = a * QFunc(0, ZPoly(std::vector<Integer>{1, 1}), ZPoly(std::vector<Integer>{1, 1}));
        CHECK(c == a);
    }
}

TEST_CASE("render and parse round trip") {
    std::mt19937 rng(5);
    CHECK(parse_scalar("(q^2+1)/(q-1) + (3)*mu") ==
          (Scalar::q_pow(2) + 1) / (Scalar::q() - 1) + Scalar(3) * Scalar::mu(Mode::special));
    CHECK(parse_scalar("mu*mu") == -Scalar::q_pow(-2));
    for (Mode m : {Mode::plain, Mode::special, Mode::generic}) {
        for (int it = 0; it < 20; ++it) {
            Scalar a = random_scalar(rng, m);
            CHECK(parse_scalar(a.str(), m == Mode::plain ? Mode::special : m) == a);
        }
    }
    CHECK_THROWS_AS(parse_scalar("q^(2"), ParseError);
    try {
        parse_scalar("q^(2");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
}
