#pragma once

// The four-sphere: the classical Poisson algebra on a, b, c, y, z, the
// quantum algebra by generators and relations, its realization by entries of
// Q on M_lambda, and the comparison at q = 1.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qs4/ncalg.hpp"
#include "qs4/report.hpp"
#include "qs4/rmat.hpp"

namespace qs4::sphere {

enum Var { kA = 0, kB, kC, kY, kZ };
inline constexpr int kVars = 5;
inline constexpr const char* kVarNames[kVars] = {"a", "b", "c", "y", "z"};

// ---- classical side
class PoissonPoly {
public:
    using Exps = std::array<int, kVars>;

    PoissonPoly() = default;
    PoissonPoly(const Rational& c);
    static PoissonPoly var(Var v);
    static PoissonPoly monomial(const Exps& e, const Rational& c = 1);

    const std::map<Exps, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const Exps& e, const Rational& c);
    PoissonPoly derivative(Var v) const;

    PoissonPoly& operator+=(const PoissonPoly& o);
    PoissonPoly& operator-=(const PoissonPoly& o);
    friend PoissonPoly operator+(PoissonPoly x, const PoissonPoly& o) { return x += o; }
    friend PoissonPoly operator-(PoissonPoly x, const PoissonPoly& o) { return x -= o; }
    friend PoissonPoly operator*(const PoissonPoly& x, const PoissonPoly& o);
    friend PoissonPoly operator*(const Rational& k, const PoissonPoly& x);
    friend bool operator==(const PoissonPoly& x, const PoissonPoly& o) { return x.t_ == o.t_; }

    std::string str() const;

private:
    std::map<Exps, Rational> t_;
};

/// Bracket of two generators from the table.
PoissonPoly generator_bracket(Var x, Var w);
PoissonPoly poisson_bracket(const PoissonPoly& f, const PoissonPoly& g);
/// a^2 + bc + yz - 1
PoissonPoly sphere_polynomial();

using ClassMatrix = std::array<std::array<PoissonPoly, 4>, 4>;
ClassMatrix class_matrix();

// ---- quantum side
const Alphabet& alphabet();
/// The eleven relations as p = 0, in the order they are listed.
struct Relation {
    std::string name;
    std::string text;
    NCPoly poly;
};
const std::vector<Relation>& relations();
/// Oriented and completed; yz is the word removed by the inhomogeneous relation.
const RewriteSystem& quantum_system();
inline constexpr int kSphereCompletionDegree = 6;

/// Filtered dimension sum_{e <= d} of irreducible words of length e.
std::size_t quantum_filtered_dim(int d);
std::size_t classical_filtered_dim(int d);

struct Generators {
    const rmat::OperatorMatrix* Q = nullptr;
    verma::ModuleVector apply(Var v, const verma::ModuleVector& x) const;
    /// Value of a polynomial in a..z applied to x.
    verma::ModuleVector apply(const NCPoly& p, const verma::ModuleVector& x) const;
};
/// a = Q11, b = Q12, y = Q13, c = Q21, z = Q31; throws when another entry
/// leaves the generator-matrix pattern.
Generators extract_generators(const rmat::OperatorMatrix& Q);

// ---- suites
Report classical_report();
Report quantum_report(int max_hilbert_degree);
Report operator_report(int N, int guard, unsigned seed);
Report semiclassical_report();

} // namespace qs4::sphere
