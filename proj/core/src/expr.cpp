#include "qs4/expr.hpp"

#include <algorithm>
#include <cctype>

namespace qs4 {

namespace {

enum class Tok { end, integer, ident, plus, minus, star, slash, caret, lparen, rparen };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t offset = 0;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        Token t;
        t.offset = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            t.kind = Tok::integer;
            t.text = std::string(s.substr(i, j - i));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            t.kind = Tok::ident;
            t.text = std::string(s.substr(i, j - i));
            i = j;
        } else {
            switch (ch) {
            case '+': t.kind = Tok::plus; break;
            case '-': t.kind = Tok::minus; break;
            case '*': t.kind = Tok::star; break;
            case '/': t.kind = Tok::slash; break;
            case '^': t.kind = Tok::caret; break;
            case '(': t.kind = Tok::lparen; break;
            case ')': t.kind = Tok::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + ch + "'", i);
            }
            t.text = std::string(1, ch);
            ++i;
        }
        out.push_back(std::move(t));
    }
    Token e;
    e.kind = Tok::end;
    // an unexpected end is reported at the last character of the input
    e.offset = s.empty() ? 0 : s.size() - 1;
    out.push_back(e);
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const ParseContext& ctx) : toks_(tokenize(text)), ctx_(ctx) {}

    NCPoly run() {
        NCPoly v = expr();
        if (peek().kind != Tok::end) {
            if (peek().kind == Tok::ident || peek().kind == Tok::integer || peek().kind == Tok::lparen)
                fail("missing operator (use '*' for products)");
            fail("unexpected '" + peek().text + "'");
        }
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        if (peek().kind == Tok::end) throw ParseError("unexpected end of input: " + msg, peek().offset);
        throw ParseError(msg, peek().offset);
    }
    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        ++pos_;
    }

    NCPoly expr() {
        NCPoly v = term();
        for (;;) {
            if (peek().kind == Tok::plus) {
                ++pos_;
                v += term();
            } else if (peek().kind == Tok::minus) {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    NCPoly term() {
        NCPoly v = unary();
        for (;;) {
            if (peek().kind == Tok::star) {
                ++pos_;
                NCPoly r = unary();
                v = v * r;
            } else if (peek().kind == Tok::slash) {
                ++pos_;
                const std::size_t at = peek().offset;
                NCPoly r = unary();
                if (!r.is_scalar()) throw ParseError("division by a non-scalar", at);
                if (r.is_zero()) throw ParseError("division by zero", at);
                v *= r.as_scalar().inverse();
            } else {
                return v;
            }
        }
    }

    NCPoly unary() {
        if (peek().kind == Tok::minus) {
            ++pos_;
            return -unary();
        }
        if (peek().kind == Tok::plus) {
            ++pos_;
            return unary();
        }
        return power();
    }

    long exponent() {
        bool paren = false;
        if (peek().kind == Tok::lparen) {
            paren = true;
            ++pos_;
        }
        bool neg = false;
        if (peek().kind == Tok::minus) {
            neg = true;
            ++pos_;
        }
        if (peek().kind != Tok::integer) fail("expected integer exponent");
        const Token& t = next();
        if (t.text.size() > 6) throw ParseError("exponent too large", t.offset);
        long n = std::stol(t.text);
        if (paren) expect(Tok::rparen, "')'");
        return neg ? -n : n;
    }

    NCPoly power() {
        const std::size_t at = peek().offset;
        std::optional<Letter> single;
        NCPoly base = atom(single);
        if (peek().kind != Tok::caret) return base;
        ++pos_;
        const long n = exponent();
        if (n >= 0) return base.pow(static_cast<int>(n));
        if (base.is_scalar()) {
            if (base.is_zero()) throw ParseError("negative power of zero", at);
            return NCPoly(base.as_scalar().pow(static_cast<int>(n)));
        }
        if (single && ctx_.alphabet) {
            if (auto inv = ctx_.alphabet->inverse(*single))
                return NCPoly::letter(*inv).pow(static_cast<int>(-n));
        }
        throw ParseError("negative power of a non-invertible element", at);
    }

    NCPoly atom(std::optional<Letter>& single) {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::integer: {
            ++pos_;
            return NCPoly(Scalar(QFunc(Integer(t.text))));
        }
        case Tok::lparen: {
            ++pos_;
            NCPoly v = expr();
            expect(Tok::rparen, "')'");
            return v;
        }
        case Tok::ident: {
            ++pos_;
            return identifier(t, single);
        }
        default: fail(t.kind == Tok::end ? "expected an operand" : "unexpected '" + t.text + "'");
        }
    }

    NCPoly identifier(const Token& t, std::optional<Letter>& single) {
        if (ctx_.alphabet) {
            if (auto l = ctx_.alphabet->find(t.text)) {
                single = *l;
                return NCPoly::letter(*l);
            }
        }
        if (auto it = ctx_.macros.find(t.text); it != ctx_.macros.end()) return it->second;
        if (t.text == "q") return NCPoly(Scalar::q());
        if (t.text == "mu") {
            if (ctx_.mu_mode == Mode::plain) throw ParseError("mu is not available in plain mode", t.offset);
            return NCPoly(Scalar::mu(ctx_.mu_mode));
        }
        std::vector<std::string> cands{"q", "mu"};
        if (ctx_.alphabet)
            for (const auto& n : ctx_.alphabet->names())
                if (n.find('^') == std::string::npos) cands.push_back(n);
        for (const auto& [n, p] : ctx_.macros) cands.push_back(n);
        std::string msg = "unknown identifier '" + t.text + "'";
        const std::string s = suggest(t.text, cands);
        if (!s.empty()) msg += " (did you mean '" + s + "'?)";
        throw ParseError(msg, t.offset);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const ParseContext& ctx_;
};

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (std::tolower(a[i - 1]) == std::tolower(b[j - 1]) ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

} // namespace

std::string suggest(const std::string& name, const std::vector<std::string>& candidates) {
    std::string best;
    std::size_t bd = std::max<std::size_t>(2, name.size() / 2) + 1;
    for (const auto& c : candidates) {
        const std::size_t d = edit_distance(name, c);
        if (d < bd) {
            bd = d;
            best = c;
        }
    }
    return best;
}

NCPoly parse_expr(std::string_view text, const ParseContext& ctx) { return Parser(text, ctx).run(); }

Scalar parse_scalar(std::string_view text, Mode mu_mode) {
    ParseContext ctx;
    ctx.mu_mode = mu_mode;
    NCPoly p = parse_expr(text, ctx);
    return p.as_scalar();
}

} // namespace qs4
