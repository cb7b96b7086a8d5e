#include "qs4/coeffring.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

namespace qs4 {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_integer(const Integer& z) {
    return std::hash<long>{}(mpz_fdiv_ui(z.get_mpz_t(), 1000000007UL)) ^
           (static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) << 1);
}

} // namespace

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

ZPoly::ZPoly(Integer c) {
    if (c != 0) c_.push_back(std::move(c));
}

ZPoly::ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(const Integer& c, int degree) {
    ZPoly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Integer(0));
    p.c_.back() = c;
    return p;
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int ZPoly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

ZPoly ZPoly::shifted_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    ZPoly p;
    p.c_.assign(c_.begin() + k, c_.end());
    return p;
}

ZPoly ZPoly::shifted_up(int k) const {
    if (k == 0 || is_zero()) return *this;
    ZPoly p;
    p.c_.assign(static_cast<std::size_t>(k), Integer(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

Integer ZPoly::content() const {
    Integer g = 0;
    for (const auto& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive() const {
    if (is_zero()) return *this;
    Integer g = content();
    if (lc() < 0) g = -g;
    if (g == 1) return *this;
    return divexact(g);
}

Integer ZPoly::eval(const Integer& x) const {
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

ZPoly ZPoly::operator-() const {
    ZPoly p = *this;
    for (auto& a : p.c_) a = -a;
    return p;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator*=(const Integer& k) {
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= k;
    return *this;
}

ZPoly ZPoly::divexact(const Integer& k) const {
    ZPoly p = *this;
    for (auto& a : p.c_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), k.get_mpz_t());
    return p;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    ZPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    if (b.size() == 1) {
        p = a;
        return p *= b.c_[0];
    }
    if (a.size() == 1) {
        p = b;
        return p *= a.c_[0];
    }
    p.c_.assign(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(p.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    p.trim();
    return p;
}

ZPoly ZPoly::divexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return a;
    if (b.size() == 1) return a.divexact(b.c_[0]);
    if (a.degree() < b.degree()) throw Error("ZPoly::divexact: not divisible");
    std::vector<Integer> r = a.c_;
    std::vector<Integer> qt(static_cast<std::size_t>(a.degree() - b.degree() + 1), Integer(0));
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        Integer& top = r[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t()))
            throw Error("ZPoly::divexact: not divisible");
        Integer t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
        const std::size_t off = static_cast<std::size_t>(i - db);
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[off + j].get_mpz_t(), t.get_mpz_t(), b.c_[j].get_mpz_t());
        qt[off] = std::move(t);
    }
    for (int i = 0; i < db; ++i)
        if (r[static_cast<std::size_t>(i)] != 0) throw Error("ZPoly::divexact: not divisible");
    return ZPoly(std::move(qt));
}

ZPoly ZPoly::prem(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return a;
    std::vector<Integer> r = a.c_;
    const int db = b.degree();
    const Integer& l = b.lc();
    int da = a.degree();
    int steps = da - db + 1;
    while (da >= db) {
        Integer t = r[static_cast<std::size_t>(da)];
        for (int i = 0; i <= da; ++i) r[static_cast<std::size_t>(i)] *= l;
        const std::size_t off = static_cast<std::size_t>(da - db);
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[off + j].get_mpz_t(), t.get_mpz_t(), b.c_[j].get_mpz_t());
        --steps;
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
        da = static_cast<int>(r.size()) - 1;
    }
    ZPoly res(std::move(r));
    if (steps > 0) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(steps));
        res *= f;
    }
    return res;
}

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.lc() < 0 ? -b : b;
    if (b.is_zero()) return a.lc() < 0 ? -a : a;
    Integer ca = a.content();
    Integer cb = b.content();
    Integer c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.degree() == 0 || b.degree() == 0) return ZPoly(c);
    ZPoly u = a.primitive();
    ZPoly v = b.primitive();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        if (v.degree() == 0) return ZPoly(c);
        ZPoly r = prem(u, v);
        u = std::move(v);
        v = r.primitive();
    }
    u = u.primitive();
    u *= c;
    return u;
}

std::size_t ZPoly::hash() const {
    std::size_t h = c_.size();
    for (const auto& a : c_) h = mix(h, hash_integer(a));
    return h;
}

// ---------------------------------------------------------------- QFunc

QFunc::QFunc(long c) : num_(c), den_(1) {}

QFunc::QFunc(const Integer& c) : num_(c), den_(1) {}

QFunc::QFunc(const Rational& c) : num_(c.get_num()), den_(c.get_den()) {}

QFunc::QFunc(int shift, ZPoly num, ZPoly den)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

QFunc QFunc::laurent(const ZPoly& p, int shift) {
    QFunc r;
    r.num_ = p;
    r.shift_ = shift;
    if (r.num_.is_zero()) {
        r.shift_ = 0;
        return r;
    }
    const int v = r.num_.valuation();
    if (v) {
        r.num_ = r.num_.shifted_down(v);
        r.shift_ += v;
    }
    return r;
}

QFunc QFunc::q_pow(int n) {
    QFunc r(1);
    r.shift_ = n;
    return r;
}

void QFunc::normalize() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = ZPoly(1);
        return;
    }
    int v = num_.valuation();
    if (v) {
        num_ = num_.shifted_down(v);
        shift_ += v;
    }
    v = den_.valuation();
    if (v) {
        den_ = den_.shifted_down(v);
        shift_ -= v;
    }
    if (!den_.is_one()) {
        ZPoly g = ZPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = ZPoly::divexact(num_, g);
            den_ = ZPoly::divexact(den_, g);
        }
        if (den_.lc() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
}

QFunc QFunc::operator-() const {
    QFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

QFunc& QFunc::operator+=(const QFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int e = std::min(shift_, o.shift_);
    ZPoly a = num_.shifted_up(shift_ - e);
    ZPoly b = o.num_.shifted_up(o.shift_ - e);
    if (den_ == o.den_) {
        num_ = a + b;
    } else if (den_.is_one()) {
        num_ = a * o.den_ + b;
        den_ = o.den_;
    } else if (o.den_.is_one()) {
        num_ = a + b * den_;
    } else {
        ZPoly g = ZPoly::gcd(den_, o.den_);
        ZPoly d1 = ZPoly::divexact(den_, g);
        ZPoly d2 = ZPoly::divexact(o.den_, g);
        num_ = a * d2 + b * d1;
        den_ = d1 * o.den_;
    }
    shift_ = e;
    normalize();
    return *this;
}

QFunc& QFunc::operator-=(const QFunc& o) { return *this += -o; }

QFunc& QFunc::operator*=(const QFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = o;
    shift_ += o.shift_;
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    ZPoly n1 = num_, n2 = o.num_, d1 = den_, d2 = o.den_;
    if (!d2.is_one()) {
        ZPoly g = ZPoly::gcd(n1, d2);
        if (!g.is_one()) {
            n1 = ZPoly::divexact(n1, g);
            d2 = ZPoly::divexact(d2, g);
        }
    }
    if (!d1.is_one()) {
        ZPoly g = ZPoly::gcd(n2, d1);
        if (!g.is_one()) {
            n2 = ZPoly::divexact(n2, g);
            d1 = ZPoly::divexact(d1, g);
        }
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    if (den_.lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

QFunc QFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    QFunc r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.lc() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QFunc& QFunc::operator/=(const QFunc& o) { return *this *= o.inverse(); }

QFunc QFunc::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    QFunc r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

QFunc QFunc::invert_q() const {
    if (is_zero()) return *this;
    // p(1/q) = q^-deg p * reversed(p)
    auto rev = [](const ZPoly& p) {
        std::vector<Integer> c(p.coeffs().rbegin(), p.coeffs().rend());
        return ZPoly(std::move(c));
    };
    return QFunc(-shift_ - num_.degree() + den_.degree(), rev(num_), rev(den_));
}

Rational QFunc::at_one() const {
    Integer d = den_.eval(1);
    if (d == 0) throw PoleError("pole at q = 1");
    Rational r(num_.eval(1), d);
    r.canonicalize();
    return r;
}

Rational QFunc::at(const Integer& x) const {
    Integer d = den_.eval(x);
    if (d == 0) throw PoleError("pole at evaluation point");
    Rational r(num_.eval(x), d);
    r.canonicalize();
    Rational s = 1;
    if (shift_ != 0) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(std::abs(shift_)));
        s = shift_ > 0 ? Rational(p) : Rational(Integer(1), p);
        s.canonicalize();
    }
    return r * s;
}

namespace {

// Laurent polynomial q^shift * p rendered with descending exponents.
std::string laurent_str(const ZPoly& p, int shift) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Integer& c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const int e = i + shift;
        Integer a = abs(c);
        if (c < 0)
            os << (first ? "-" : "-");
        else if (!first)
            os << "+";
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

int term_count(const ZPoly& p) {
    int n = 0;
    for (const auto& c : p.coeffs()) n += (c != 0);
    return n;
}

} // namespace

std::string QFunc::str() const {
    if (is_zero()) return "0";
    if (den_.is_one()) return laurent_str(num_, shift_);
    std::string n = laurent_str(num_, shift_);
    if (term_count(num_) > 1) n = "(" + n + ")";
    return n + "/(" + laurent_str(den_, 0) + ")";
}

std::size_t QFunc::hash() const { return mix(mix(num_.hash(), den_.hash()), std::hash<int>{}(shift_)); }

std::ostream& operator<<(std::ostream& os, const QFunc& s) { return os << s.str(); }

// ---------------------------------------------------------------- MuPoly helpers

namespace {

void mp_trim(MuPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

MuPoly mp_add(const MuPoly& a, const MuPoly& b) {
    MuPoly r = a.size() >= b.size() ? a : b;
    const MuPoly& s = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
    mp_trim(r);
    return r;
}

MuPoly mp_neg(MuPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

MuPoly mp_mul(const MuPoly& a, const MuPoly& b) {
    if (a.empty() || b.empty()) return {};
    MuPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    mp_trim(r);
    return r;
}

MuPoly mp_scale(MuPoly a, const QFunc& k) {
    if (k.is_zero()) return {};
    for (auto& c : a) c *= k;
    return a;
}

MuPoly mp_shift_up(const MuPoly& a, int k) {
    if (k == 0 || a.empty()) return a;
    MuPoly r(static_cast<std::size_t>(k));
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

void mp_divmod(const MuPoly& a, const MuPoly& b, MuPoly& quo, MuPoly& rem) {
    if (b.empty()) throw DivisionByZero();
    rem = a;
    quo.clear();
    if (a.size() < b.size()) return;
    quo.assign(a.size() - b.size() + 1, QFunc());
    QFunc inv = b.back().inverse();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (i >= rem.size() || rem[i].is_zero()) continue;
        QFunc t = rem[i] * inv;
        const std::size_t off = i - (b.size() - 1);
        for (std::size_t j = 0; j < b.size(); ++j) rem[off + j] -= t * b[j];
        quo[off] = t;
        if (i == 0) break;
    }
    mp_trim(rem);
    mp_trim(quo);
}

MuPoly mp_monic(MuPoly a) {
    if (a.empty()) return a;
    QFunc inv = a.back().inverse();
    for (auto& c : a) c *= inv;
    return a;
}

MuPoly mp_gcd(MuPoly a, MuPoly b) {
    while (!b.empty()) {
        MuPoly qt, r;
        mp_divmod(a, b, qt, r);
        a = std::move(b);
        b = mp_monic(std::move(r));
    }
    return mp_monic(std::move(a));
}

int mp_valuation(const MuPoly& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) return static_cast<int>(i);
    return 0;
}

} // namespace

// ---------------------------------------------------------------- MuFunc

MuFunc::MuFunc(const QFunc& c) : den_{QFunc(1)} {
    if (!c.is_zero()) num_.push_back(c);
}

MuFunc::MuFunc(int shift, MuPoly num, MuPoly den)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
    mp_trim(num_);
    mp_trim(den_);
    if (den_.empty()) throw DivisionByZero();
    normalize();
}

MuFunc MuFunc::mu_pow(int n) {
    MuFunc r(QFunc(1));
    r.shift_ = n;
    return r;
}

QFunc MuFunc::constant_value() const {
    if (!is_constant()) throw ModeMismatch("element depends on mu");
    return num_.empty() ? QFunc() : num_[0];
}

void MuFunc::normalize() {
    if (num_.empty()) {
        shift_ = 0;
        den_ = {QFunc(1)};
        return;
    }
    int v = mp_valuation(num_);
    if (v) {
        num_.erase(num_.begin(), num_.begin() + v);
        shift_ += v;
    }
    v = mp_valuation(den_);
    if (v) {
        den_.erase(den_.begin(), den_.begin() + v);
        shift_ -= v;
    }
    if (den_.size() > 1) {
        MuPoly g = mp_gcd(num_, den_);
        if (g.size() > 1) {
            MuPoly qt, r;
            mp_divmod(num_, g, qt, r);
            num_ = std::move(qt);
            mp_divmod(den_, g, qt, r);
            den_ = std::move(qt);
        }
    }
    if (!den_.back().is_one()) {
        QFunc inv = den_.back().inverse();
        num_ = mp_scale(std::move(num_), inv);
        den_ = mp_scale(std::move(den_), inv);
    }
}

MuFunc MuFunc::operator-() const {
    MuFunc r = *this;
    r.num_ = mp_neg(std::move(r.num_));
    return r;
}

MuFunc& MuFunc::operator+=(const MuFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int e = std::min(shift_, o.shift_);
    MuPoly a = mp_shift_up(num_, shift_ - e);
    MuPoly b = mp_shift_up(o.num_, o.shift_ - e);
    if (den_ == o.den_) {
        num_ = mp_add(a, b);
    } else if (den_.size() == 1 || o.den_.size() == 1) {
        num_ = mp_add(mp_mul(a, o.den_), mp_mul(b, den_));
        den_ = mp_mul(den_, o.den_);
    } else {
        MuPoly g = mp_gcd(den_, o.den_);
        MuPoly d1, d2, r;
        mp_divmod(den_, g, d1, r);
        mp_divmod(o.den_, g, d2, r);
        num_ = mp_add(mp_mul(a, d2), mp_mul(b, d1));
        den_ = mp_mul(d1, o.den_);
    }
    shift_ = e;
    normalize();
    return *this;
}

MuFunc& MuFunc::operator-=(const MuFunc& o) { return *this += -o; }

MuFunc& MuFunc::operator*=(const MuFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = o;
    shift_ += o.shift_;
    num_ = mp_mul(num_, o.num_);
    const bool laurent = is_laurent() && o.is_laurent();
    den_ = mp_mul(den_, o.den_);
    if (!laurent) normalize();
    return *this;
}

MuFunc MuFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return MuFunc(-shift_, den_, num_);
}

MuFunc& MuFunc::operator/=(const MuFunc& o) { return *this *= o.inverse(); }

std::size_t MuFunc::hash() const {
    std::size_t h = std::hash<int>{}(shift_);
    for (const auto& c : num_) h = mix(h, c.hash());
    for (const auto& c : den_) h = mix(h, c.hash());
    return h;
}

// ---------------------------------------------------------------- Scalar

std::string_view mode_name(Mode m) {
    switch (m) {
    case Mode::plain: return "plain";
    case Mode::generic: return "generic";
    case Mode::special: return "special";
    }
    return "?";
}

Mode parse_mode(std::string_view s) {
    if (s == "plain") return Mode::plain;
    if (s == "generic") return Mode::generic;
    if (s == "special") return Mode::special;
    throw ConfigError("unknown mode '" + std::string(s) + "'");
}

namespace {

// mu^2 = -q^-2
const QFunc& mu_square() {
    static const QFunc v = -QFunc::q_pow(-2);
    return v;
}

SpecialElt sp_mul(const SpecialElt& a, const SpecialElt& b) {
    SpecialElt r;
    r.s0 = a.s0 * b.s0;
    if (!a.s1.is_zero() && !b.s1.is_zero()) r.s0 += mu_square() * a.s1 * b.s1;
    if (!a.s1.is_zero() || !b.s1.is_zero()) r.s1 = a.s0 * b.s1 + a.s1 * b.s0;
    return r;
}

SpecialElt sp_inv(const SpecialElt& a) {
    // (s0 + s1 mu)^-1 = (s0 - s1 mu) / (s0^2 + q^-2 s1^2)
    if (a.s1.is_zero()) return {a.s0.inverse(), QFunc()};
    QFunc nrm = a.s0 * a.s0 - mu_square() * a.s1 * a.s1;
    if (nrm.is_zero()) throw DivisionByZero();
    QFunc inv = nrm.inverse();
    return {a.s0 * inv, -a.s1 * inv};
}

SpecialElt as_special(const std::variant<QFunc, SpecialElt, MuFunc>& v) {
    if (v.index() == 0) return {std::get<0>(v), QFunc()};
    return std::get<1>(v);
}

MuFunc as_generic(const std::variant<QFunc, SpecialElt, MuFunc>& v) {
    if (v.index() == 0) return MuFunc(std::get<0>(v));
    return std::get<2>(v);
}

Mode common_mode(Mode a, Mode b) {
    if (a == b) return a;
    if (a == Mode::plain) return b;
    if (b == Mode::plain) return a;
    throw ModeMismatch("cannot mix generic-mu and special-mu scalars");
}

} // namespace

Scalar::Scalar(SpecialElt s) {
    if (s.s1.is_zero())
        v_ = std::move(s.s0);
    else
        v_ = std::move(s);
}

Scalar::Scalar(MuFunc g) {
    if (g.is_constant())
        v_ = g.constant_value();
    else
        v_ = std::move(g);
}

Scalar Scalar::mu(Mode m) { return mu_pow(m, 1); }

Scalar Scalar::mu_pow(Mode m, int n) {
    switch (m) {
    case Mode::plain: throw ModeMismatch("mu is not available in plain mode");
    case Mode::generic: return Scalar(MuFunc::mu_pow(n));
    case Mode::special: {
        // mu^(2k) = (-q^-2)^k ; mu^(2k+1) = (-q^-2)^k mu
        const int k = (n >= 0) ? n / 2 : -((-n + 1) / 2);
        const int odd = n - 2 * k;
        QFunc c = mu_square().pow(k);
        if (odd == 0) return Scalar(c);
        return Scalar(SpecialElt{QFunc(), c});
    }
    }
    return {};
}

bool Scalar::is_zero() const {
    return v_.index() == 0 && std::get<0>(v_).is_zero();
}

bool Scalar::is_one() const {
    return v_.index() == 0 && std::get<0>(v_).is_one();
}

const QFunc& Scalar::plain() const {
    if (v_.index() != 0) throw ModeMismatch("scalar is not plain");
    return std::get<0>(v_);
}

const SpecialElt& Scalar::special() const {
    if (v_.index() != 1) throw ModeMismatch("scalar is not special-mu");
    return std::get<1>(v_);
}

const MuFunc& Scalar::generic() const {
    if (v_.index() != 2) throw ModeMismatch("scalar is not generic-mu");
    return std::get<2>(v_);
}

bool Scalar::is_rational() const { return v_.index() == 0; }

QFunc Scalar::rational_value() const { return plain(); }

QFunc Scalar::mu_component() const {
    if (v_.index() == 0) return QFunc();
    return special().s1;
}

Scalar Scalar::operator-() const {
    switch (v_.index()) {
    case 0: return Scalar(-std::get<0>(v_));
    case 1: {
        auto s = std::get<1>(v_);
        return Scalar(SpecialElt{-s.s0, -s.s1});
    }
    default: return Scalar(-std::get<2>(v_));
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Mode m = common_mode(mode(), o.mode());
    switch (m) {
    case Mode::plain: std::get<0>(v_) += std::get<0>(o.v_); break;
    case Mode::special: {
        SpecialElt a = as_special(v_), b = as_special(o.v_);
        *this = Scalar(SpecialElt{a.s0 + b.s0, a.s1 + b.s1});
        break;
    }
    case Mode::generic: {
        MuFunc a = as_generic(v_);
        a += as_generic(o.v_);
        *this = Scalar(std::move(a));
        break;
    }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    Mode m = common_mode(mode(), o.mode());
    switch (m) {
    case Mode::plain: std::get<0>(v_) *= std::get<0>(o.v_); break;
    case Mode::special: *this = Scalar(sp_mul(as_special(v_), as_special(o.v_))); break;
    case Mode::generic: {
        MuFunc a = as_generic(v_);
        a *= as_generic(o.v_);
        *this = Scalar(std::move(a));
        break;
    }
    }
    return *this;
}

Scalar Scalar::inverse() const {
    switch (v_.index()) {
    case 0: return Scalar(std::get<0>(v_).inverse());
    case 1: return Scalar(sp_inv(std::get<1>(v_)));
    default: return Scalar(std::get<2>(v_).inverse());
    }
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    common_mode(mode(), o.mode());
    return *this *= o.inverse();
}

Scalar Scalar::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

Scalar Scalar::specialize() const {
    if (v_.index() != 2) return *this;
    const MuFunc& g = std::get<2>(v_);
    auto eval = [](const MuPoly& p) {
        Scalar r;
        Scalar m = Scalar::mu(Mode::special);
        for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * m + Scalar(*it);
        return r;
    };
    Scalar den = eval(g.den());
    if (den.is_zero()) throw PoleError("generic element has a pole at mu^2 = -q^-2");
    return eval(g.num()) * Scalar::mu_pow(Mode::special, g.shift()) / den;
}

Scalar Scalar::invert_q() const { return Scalar(plain().invert_q()); }

namespace {

std::string wrap(const QFunc& c) {
    return "(" + c.str() + ")";
}

std::string mupoly_str(const MuPoly& p, int shift) {
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const int e = static_cast<int>(i) + shift;
        out += wrap(p[i]);
        if (e != 0) {
            out += "*mu";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string Scalar::str() const {
    switch (v_.index()) {
    case 0: return std::get<0>(v_).str();
    case 1: {
        const auto& s = std::get<1>(v_);
        std::string r;
        if (!s.s0.is_zero()) r = s.s0.str() + " + ";
        return r + wrap(s.s1) + "*mu";
    }
    default: {
        const auto& g = std::get<2>(v_);
        std::string n = mupoly_str(g.num(), g.shift());
        if (g.is_laurent()) return n;
        return "(" + n + ")/(" + mupoly_str(g.den(), 0) + ")";
    }
    }
}

std::size_t Scalar::hash() const {
    switch (v_.index()) {
    case 0: return std::get<0>(v_).hash();
    case 1: return mix(std::get<1>(v_).s0.hash(), std::get<1>(v_).s1.hash()) ^ 0x51;
    default: return std::get<2>(v_).hash() ^ 0x77;
    }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ---------------------------------------------------------------- q-numbers

Scalar qint_base(int n, int k) {
    if (n == 0) return Scalar(0);
    if (n < 0) return -qint_base(-n, k);
    // q^{k(n-1)} + q^{k(n-3)} + ... + q^{-k(n-1)}
    std::vector<Integer> c(static_cast<std::size_t>(2 * k * (n - 1) + 1), Integer(0));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(2 * k * i)] = 1;
    return Scalar(QFunc::laurent(ZPoly(std::move(c)), -k * (n - 1)));
}

Scalar qint(int n) { return qint_base(n, 1); }

Scalar qfact(int n) {
    if (n < 0) throw Error("qfact: negative argument");
    Scalar r(1);
    for (int i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

Scalar qdoublefact(int l) {
    if (l < 0) throw Error("qdoublefact: negative argument");
    Scalar r(1);
    for (int i = 1; i <= l; ++i) r *= qint(2 * i);
    return r;
}

Rational limit_q1(const Scalar& s) {
    if (s.mode() != Mode::plain) throw ModeMismatch("limit_q1 needs a plain scalar");
    return s.plain().at_one();
}

} // namespace qs4
