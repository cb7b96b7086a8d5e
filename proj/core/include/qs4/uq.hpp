#pragma once

// U_q(sp4) on the letters Fa Fb Ka Ka^-1 Kb Kb^-1 Ea Eb: relations, Hopf
// structure, root vectors, PBW coordinates and the Levi projection.

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qs4/expr.hpp"
#include "qs4/ncalg.hpp"
#include "qs4/report.hpp"

namespace qs4::uq {

enum Gen : Letter { Fa = 0, Fb, Ka, Kai, Kb, Kbi, Ea, Eb };
inline constexpr int kGenerators = 8;

// ---- Cartan data. Weights are kept in the epsilon basis.
using EpsWeight = std::array<int, 2>;

inline constexpr EpsWeight kAlpha{1, -1};
inline constexpr EpsWeight kBeta{0, 2};
inline constexpr EpsWeight kGamma{1, 1};
inline constexpr EpsWeight kDelta{2, 0};
inline constexpr std::array<int, 4> kRho{2, 1, -1, -2};
inline constexpr std::array<int, 4> kSign{1, 1, -1, -1};
/// Weights of the standard basis w1..w4 of C^4.
inline constexpr std::array<EpsWeight, 4> kVectorWeights{{{1, 0}, {0, 1}, {0, -1}, {-1, 0}}};

inline int inner(EpsWeight a, EpsWeight b) { return a[0] * b[0] + a[1] * b[1]; }
inline EpsWeight operator+(EpsWeight a, EpsWeight b) { return {a[0] + b[0], a[1] + b[1]}; }
inline EpsWeight operator-(EpsWeight a, EpsWeight b) { return {a[0] - b[0], a[1] - b[1]}; }
inline EpsWeight scale(int k, EpsWeight a) { return {k * a[0], k * a[1]}; }
/// i' = 5 - i on 1-based indices; here 0-based: 3 - i.
inline int dual_index(int i) { return 3 - i; }

/// Weight of a letter; zero for the Cartan letters.
EpsWeight letter_weight(Letter l);
EpsWeight word_weight(const Word& w);

const Alphabet& alphabet();
/// Oriented defining relations, not yet completed.
RewriteSystem defining_system();
/// Defining relations completed through the default degree; shared.
const RewriteSystem& algebra();
const CompletionLog& completion_log();
inline constexpr int kCompletionDegree = 8;

NCPoly gen(Gen g);
/// K_gamma = Ka*Kb and friends as normal-form words.
NCPoly K(int a_power, int b_power);

enum class Root { alpha, beta, gamma, delta };
/// Root vector as a Chevalley-word polynomial. `usual` selects the
/// commutator definitions e'_delta = [e_alpha,e_gamma], f'_delta = [f_gamma,f_alpha].
NCPoly root_vector(Root r, bool positive, bool usual = false);
/// The twisted lowering vector q^4 Eb Ea - q^2 Ea Eb.
NCPoly x2_tilde();

ParseContext parse_context(Mode mu_mode = Mode::special);
NCPoly parse(const std::string& text, Mode mu_mode = Mode::special);

// ---- Hopf structure
class TensorElement {
public:
    using Key = std::pair<Word, Word>;
    std::map<Key, Scalar> terms;

    void add(const Word& a, const Word& b, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const TensorElement& x, const TensorElement& y) { return x.terms == y.terms; }
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    /// Product in U (x) U with both legs reduced.
    TensorElement mul(const TensorElement& o, const RewriteSystem& sys) const;
    std::string str() const;
};

TensorElement coproduct(const NCPoly& x);
NCPoly antipode(const NCPoly& x);
Scalar counit(const NCPoly& x);
/// Cartan involution: E <-> F, K <-> K^-1 (an algebra automorphism).
NCPoly omega(const NCPoly& x);
/// Letter-level images used by module code.
Letter omega_letter(Letter l);

// ---- PBW coordinates
// F_a^a F_d^d F_g^c F_b^b * K_a^r K_b^s * E_b^b' E_g^c' E_d^d' E_a^a'
struct PbwIndex {
    std::array<int, 4> f{}; // a, d, c, b
    int r = 0, s = 0;
    std::array<int, 4> e{}; // b', c', d', a'
    auto tie() const { return std::tie(f, r, s, e); }
    friend bool operator<(const PbwIndex& x, const PbwIndex& y) { return x.tie() < y.tie(); }
    friend bool operator==(const PbwIndex& x, const PbwIndex& y) { return x.tie() == y.tie(); }
    std::string str() const;
};
using PbwCoords = std::map<PbwIndex, Scalar>;

/// PBW coordinates of a normal-form word that contains only F letters.
const std::map<std::array<int, 4>, Scalar>& f_word_coords(const Word& w);
const std::map<std::array<int, 4>, Scalar>& e_word_coords(const Word& w);
/// Chevalley normal form of the F-side PBW monomial (a, d, c, b).
const NCPoly& f_monomial(const std::array<int, 4>& adcb);
const NCPoly& e_monomial(const std::array<int, 4>& bcda);

PbwCoords to_pbw(const NCPoly& x);
NCPoly from_pbw(const PbwCoords& c);

/// Splits a normal-form word into its F, K, E blocks; throws if the word is
/// not of that shape.
struct Triangular {
    Word f;
    int r = 0, s = 0;
    Word e;
};
Triangular split(const Word& w);

/// lambda([x]_l): Levi projection followed by Ka -> mu, Kb -> 1.
Scalar project_l(const NCPoly& x, Mode mu_mode);

// ---- verification suites
Report presentation_report(const RewriteSystem& sys);
Report pbw_report(int max_degree);
Report hopf_report(unsigned seed, int samples);

} // namespace qs4::uq
