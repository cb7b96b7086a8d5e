#pragma once

// Free associative algebra over Scalar, deglex monomial order, and a
// rewriting engine with degree-bounded completion.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qs4/coeffring.hpp"

namespace qs4 {

using Letter = unsigned char;
// One byte per letter. std::string keeps short words inline.
using Word = std::string;

struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline bool deglex_less(const Word& a, const Word& b) { return DegLex{}(a, b); }

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Letter l) const { return names_[l]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Letter> find(const std::string& name) const;
    Letter at(const std::string& name) const;
    /// Letter whose name is `name^-1`, if declared.
    std::optional<Letter> inverse(Letter l) const;

    std::string render(const Word& w) const;
    Word word(std::initializer_list<const char*> letters) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Letter> index_;
    std::vector<int> inverse_;
};

class NCPoly {
public:
    using Terms = std::map<Word, Scalar, DegLex>;

    NCPoly() = default;
    NCPoly(const Scalar& c);
    static NCPoly monomial(const Word& w, const Scalar& c = Scalar(1));
    static NCPoly letter(Letter l) { return monomial(Word(1, static_cast<char>(l))); }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Terms& terms() const { return t_; }
    /// Largest word in deglex; requires a nonzero polynomial.
    const Word& leading_word() const { return t_.rbegin()->first; }
    const Scalar& leading_coeff() const { return t_.rbegin()->second; }
    int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.size()); }
    Scalar coeff(const Word& w) const;
    /// Constant term when the polynomial is a scalar; throws otherwise.
    Scalar as_scalar() const;
    bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

    void add_term(const Word& w, const Scalar& c);
    void add_scaled(const NCPoly& p, const Scalar& c);
    void add_scaled(const NCPoly& p, const Scalar& c, const Word& left, const Word& right);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Scalar& c);

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
    friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }

    NCPoly pow(int n) const;
    /// Replace every coefficient by f(coefficient).
    template <class F>
    NCPoly map_coeffs(F&& f) const {
        NCPoly r;
        for (const auto& [w, c] : t_) r.add_term(w, f(c));
        return r;
    }

    std::string str(const Alphabet& a) const;

private:
    Terms t_;
};

struct Rule {
    Word lhs;
    NCPoly rhs;
    std::string origin;
};

/// An ambiguity of two rules together with its reduced S-polynomial.
struct Ambiguity {
    Word word;
    std::size_t first = 0;
    std::size_t second = 0;
    bool inclusion = false;
    NCPoly residual;
};

struct CompletionLog {
    int max_degree = 0;
    int passes = 0;
    std::size_t ambiguities_checked = 0;
    std::vector<std::string> added;   // rendered new rules with their source
    std::vector<std::string> removed; // rules dropped by interreduction
};

class RewriteSystem {
public:
    explicit RewriteSystem(Alphabet alphabet);
    RewriteSystem(const RewriteSystem& o);
    RewriteSystem& operator=(const RewriteSystem& o);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Rule>& rules() const { return rules_; }

    /// Orient p = 0 by its leading word.
    void add_relation(const NCPoly& p, const std::string& origin = "");
    /// lhs -> rhs; every word of rhs must be deglex-smaller than lhs.
    void add_rule(const Word& lhs, const NCPoly& rhs, const std::string& origin = "");
    bool remove_rule(const Word& lhs);

    const NCPoly& normal_form(const Word& w) const;
    NCPoly reduce(const NCPoly& p) const;
    /// Multiply by a single letter on the left and reduce; p must be reduced.
    NCPoly left_mul(Letter x, const NCPoly& p) const;
    NCPoly mul(const NCPoly& a, const NCPoly& b) const;
    bool is_irreducible(const Word& w) const;

    std::vector<Ambiguity> overlap_report(int max_degree) const;
    CompletionLog complete(int max_degree);
    RewriteSystem completed(int max_degree, CompletionLog* log = nullptr) const;

    /// Degree through which every ambiguity was checked (-1 if never).
    int confluent_degree() const { return confluent_degree_; }
    /// True when the checked degree covers every ambiguity of the rule set.
    bool globally_confluent() const;
    int max_lhs_length() const { return max_lhs_; }

    /// Irreducible words of exactly `length` letters drawn from `letters`.
    std::vector<Word> irreducible_words(int length, const std::vector<Letter>& letters) const;
    std::size_t count_irreducible(int length, const std::vector<Letter>& letters) const;

    std::string status() const;
    void clear_cache() const;
    std::size_t cache_size() const;

private:
    void reindex();
    std::optional<std::size_t> prefix_rule(const Word& w) const;
    NCPoly spoly(const Ambiguity& a) const;
    std::vector<Ambiguity> ambiguities(int max_degree) const;

    Alphabet alphabet_;
    std::vector<Rule> rules_;
    std::unordered_map<Word, std::size_t> lhs_index_;
    int max_lhs_ = 0;
    int confluent_degree_ = -1;

    mutable std::unordered_map<Word, NCPoly> cache_;
    mutable std::unique_ptr<std::mutex> mu_;
};

/// Plain-text presentation:
///   alphabet: Fa Fb Ka Ka^-1 ...
///   order: deglex
///   relation: lhs = rhs
///   rule: lhs -> rhs
/// Lines starting with '#' are comments.
RewriteSystem read_presentation(std::istream& in, Mode mu_mode = Mode::special);
RewriteSystem read_presentation_file(const std::string& path, Mode mu_mode = Mode::special);
void write_presentation(std::ostream& out, const RewriteSystem& sys, const std::string& header = "");

} // namespace qs4
