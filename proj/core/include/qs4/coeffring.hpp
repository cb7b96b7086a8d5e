#pragma once

// Exact coefficient arithmetic.
//
//   ZPoly    dense polynomials in q over the integers
//   QFunc    elements of Q(q), stored as q^e * N/D in lowest terms
//   MuFunc   elements of Q(q)(mu) with mu transcendental over Q(q)
//   Scalar   tagged union: plain Q(q), generic-mu Q(q)(mu), or the special
//            quadratic field Q(q)[mu]/(mu^2 + q^-2)

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "qs4/error.hpp"

namespace qs4 {

using Integer = mpz_class;
using Rational = mpq_class;

class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long c);
    explicit ZPoly(Integer c);
    explicit ZPoly(std::vector<Integer> coeffs);

    static ZPoly monomial(const Integer& c, int degree);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Integer& lc() const { return c_.back(); }
    const Integer& operator[](std::size_t i) const { return c_[i]; }
    std::size_t size() const { return c_.size(); }
    const std::vector<Integer>& coeffs() const { return c_; }

    /// Index of the lowest nonzero coefficient (the q-adic valuation).
    int valuation() const;
    /// Divide by q^k; requires k <= valuation().
    ZPoly shifted_down(int k) const;
    ZPoly shifted_up(int k) const;

    Integer content() const;
    ZPoly primitive() const;
    Integer eval(const Integer& x) const;

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const Integer& k);
    ZPoly divexact(const Integer& k) const;

    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    /// Exact quotient a / b; throws if b does not divide a in Z[q].
    static ZPoly divexact(const ZPoly& a, const ZPoly& b);
    /// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
    static ZPoly prem(const ZPoly& a, const ZPoly& b);
    /// Greatest common divisor in Z[q] with positive leading coefficient.
    static ZPoly gcd(const ZPoly& a, const ZPoly& b);

    std::size_t hash() const;

private:
    void trim();
    std::vector<Integer> c_;
};

/// Element q^e * num/den of Q(q). Canonical: q divides neither num nor den,
/// gcd(num, den) = 1 in Z[q], lc(den) > 0. Zero has empty num, e = 0.
class QFunc {
public:
    QFunc() : den_(1) {}
    QFunc(long c);
    explicit QFunc(const Integer& c);
    explicit QFunc(const Rational& c);
    QFunc(int shift, ZPoly num, ZPoly den);
    /// Laurent polynomial q^shift * p.
    static QFunc laurent(const ZPoly& p, int shift = 0);

    static QFunc q_pow(int n);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    int shift() const { return shift_; }
    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    QFunc operator-() const;
    QFunc& operator+=(const QFunc& o);
    QFunc& operator-=(const QFunc& o);
    QFunc& operator*=(const QFunc& o);
    QFunc& operator/=(const QFunc& o);
    QFunc inverse() const;
    QFunc pow(int n) const;

    friend QFunc operator+(QFunc a, const QFunc& b) { return a += b; }
    friend QFunc operator-(QFunc a, const QFunc& b) { return a -= b; }
    friend QFunc operator*(QFunc a, const QFunc& b) { return a *= b; }
    friend QFunc operator/(QFunc a, const QFunc& b) { return a /= b; }
    friend bool operator==(const QFunc& a, const QFunc& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// q -> 1/q.
    QFunc invert_q() const;
    /// Value at q = 1; throws PoleError if den(1) = 0.
    Rational at_one() const;
    /// Value at an integer point (den must not vanish there).
    Rational at(const Integer& x) const;

    std::string str() const;
    std::size_t hash() const;

private:
    void normalize();
    int shift_ = 0;
    ZPoly num_;
    ZPoly den_;
};

/// Dense polynomial in mu with Q(q) coefficients; helper for MuFunc.
using MuPoly = std::vector<QFunc>;

/// Element mu^e * P(mu)/D(mu) of Q(q)(mu). Canonical: mu divides neither P
/// nor D, D monic, gcd(P, D) = 1.
class MuFunc {
public:
    MuFunc() : den_{QFunc(1)} {}
    explicit MuFunc(const QFunc& c);
    MuFunc(int shift, MuPoly num, MuPoly den);
    static MuFunc mu_pow(int n);

    bool is_zero() const { return num_.empty(); }
    int shift() const { return shift_; }
    const MuPoly& num() const { return num_; }
    const MuPoly& den() const { return den_; }
    bool is_laurent() const { return den_.size() == 1; }
    /// True if the element lies in Q(q) (no mu dependence).
    bool is_constant() const { return shift_ == 0 && num_.size() <= 1 && is_laurent(); }
    QFunc constant_value() const;

    MuFunc operator-() const;
    MuFunc& operator+=(const MuFunc& o);
    MuFunc& operator-=(const MuFunc& o);
    MuFunc& operator*=(const MuFunc& o);
    MuFunc& operator/=(const MuFunc& o);
    MuFunc inverse() const;

    friend bool operator==(const MuFunc& a, const MuFunc& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::size_t hash() const;

private:
    void normalize();
    int shift_ = 0;
    MuPoly num_;
    MuPoly den_;
};

enum class Mode : std::uint8_t { plain, generic, special };

std::string_view mode_name(Mode m);
Mode parse_mode(std::string_view s);

/// s0 + s1 * mu with mu^2 = -q^-2.
struct SpecialElt {
    QFunc s0;
    QFunc s1;
    friend bool operator==(const SpecialElt&, const SpecialElt&) = default;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(long c) : v_(QFunc(c)) {}
    Scalar(QFunc c) : v_(std::move(c)) {}
    Scalar(SpecialElt s);
    Scalar(MuFunc g);

    static Scalar q() { return QFunc::q_pow(1); }
    static Scalar q_pow(int n) { return QFunc::q_pow(n); }
    /// The weight symbol mu = q^{(alpha, lambda)} in the requested mode.
    static Scalar mu(Mode m);
    static Scalar mu_pow(Mode m, int n);

    Mode mode() const {
        static constexpr Mode by_index[] = {Mode::plain, Mode::special, Mode::generic};
        return by_index[v_.index()];
    }
    bool is_zero() const;
    bool is_one() const;

    const QFunc& plain() const;
    const SpecialElt& special() const;
    const MuFunc& generic() const;
    /// The Q(q) value when the element has no mu component in any mode.
    bool is_rational() const;
    QFunc rational_value() const;
    /// Coefficient of mu in special mode (zero for plain values).
    QFunc mu_component() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;
    Scalar pow(int n) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Map a generic-mu element to the special field (substitute mu^2 = -q^-2).
    Scalar specialize() const;
    /// q -> 1/q on a plain element.
    Scalar invert_q() const;

    std::string str() const;
    std::size_t hash() const;

private:
    std::variant<QFunc, SpecialElt, MuFunc> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const QFunc& s);

/// q-integer [n]_q = (q^n - q^-n)/(q - q^-1).
Scalar qint(int n);
/// [n]_q with base q^k, i.e. (q^{kn} - q^{-kn})/(q^k - q^{-k}).
Scalar qint_base(int n, int k);
/// [n]_q! = [1]_q ... [n]_q.
Scalar qfact(int n);
/// [2l]_q!! = [2]_q [4]_q ... [2l]_q, [0]_q!! = 1.
Scalar qdoublefact(int l);

/// Value at q = 1 of a plain scalar.
Rational limit_q1(const Scalar& s);

/// Parse a scalar expression over q and mu (grammar of the renderer).
Scalar parse_scalar(std::string_view text, Mode mu_mode = Mode::special);

} // namespace qs4

template <>
struct std::hash<qs4::Scalar> {
    std::size_t operator()(const qs4::Scalar& s) const { return s.hash(); }
};
