#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equiloc/rational.hpp"

namespace equiloc {

// Graded lexicographic order on exponent vectors: total degree first, then
// lex. This is the canonical term order used for serialization and for every
// deterministic tie-break in the library.
struct GradedLexLess {
    bool operator()(const IntVec& a, const IntVec& b) const {
        long long da = 0, db = 0;
        for (long long c : a) da += c;
        for (long long c : b) db += c;
        if (da != db) return da < db;
        return a < b;
    }
};

// Exact multivariate polynomial over Q in variables X1..Xr (coordinates on
// the Lie algebra of the torus). No zero coefficients are stored.
class MultiPoly {
public:
    using TermMap = std::map<IntVec, Rational, GradedLexLess>;

    explicit MultiPoly(int rank = 0) : rank_(rank) {}

    static MultiPoly constant(int rank, const Rational& c);
    static MultiPoly monomial(int rank, const IntVec& exp, const Rational& c);
    // The linear form <alpha, X> = sum alpha_i * Xi.
    static MultiPoly linear_form(const IntVec& alpha);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // -1 for the zero polynomial.
    long long total_degree() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == IntVec(rank_, 0)); }
    Rational constant_term() const;

    void add_term(const IntVec& exp, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const Rational& c) const;

    bool operator==(const MultiPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Rational evaluate(const RatVec& x) const;
    // Value of the homogeneous degree-d part at a lattice point.
    Rational evaluate_homogeneous(long long d, const IntVec& x) const;
    MultiPoly homogeneous_component(long long d) const;

    MultiPoly derivative(int var) const;
    MultiPoly antiderivative(int var) const;
    // Composition X_var := g.
    MultiPoly substitute_var(int var, const MultiPoly& g) const;
    // X_i := X_i - c_i for all i.
    MultiPoly shift(const RatVec& c) const;

    // Exact quotient by <alpha, X>; nullopt when the form does not divide.
    std::optional<MultiPoly> divided_by_linear(const IntVec& alpha) const;

    // Interpret this polynomial as a constant-coefficient differential
    // operator (X^e -> d^e/dxi^e) and apply it to p.
    MultiPoly apply_as_differential_operator(const MultiPoly& p) const;

    // Canonical text form, graded-lex descending, e.g. "3/2*X1^2*X2 + -1".
    std::string to_string() const;

private:
    int rank_;
    TermMap terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

} // namespace equiloc
