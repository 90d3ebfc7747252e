#pragma once

#include <map>
#include <string>
#include <vector>

#include "equiloc/multipoly.hpp"

namespace equiloc {

// Rational function whose denominator is a product of integer linear forms,
// kept factored: num / prod <d,X>^mult. Directions d are stored primitive
// with canonical sign (first nonzero component positive); scalar contents
// are absorbed into the numerator. Cancellation against Euler classes is
// factor-by-factor and exact, so the denominator is never expanded.
class RatFun {
public:
    using DenomMap = std::map<IntVec, int>;

    explicit RatFun(int rank = 0) : num_(rank) {}
    explicit RatFun(MultiPoly num) : num_(std::move(num)) {}

    // num / prod_i <weights[i], X>.
    static RatFun quotient(MultiPoly num, const std::vector<IntVec>& weights);

    int rank() const { return num_.rank(); }
    bool is_zero() const { return num_.is_zero(); }
    const MultiPoly& numerator() const { return num_; }
    const DenomMap& denominator_factors() const { return denom_; }

    RatFun operator*(const RatFun& o) const;
    RatFun operator*(const Rational& c) const;

    bool operator==(const RatFun& o) const { return num_ == o.num_ && denom_ == o.denom_; }

    // Cancels every denominator factor that divides the numerator.
    void normalize();

    std::string to_string() const;

private:
    MultiPoly num_;
    DenomMap denom_;

    void push_factor(const IntVec& alpha, int mult);
    friend RatFun ratfun_sum_normalize(const std::vector<RatFun>& terms);
};

// Exact sum over the least common multiple of the denominator factor
// multisets, followed by factor cancellation. Associative and commutative up
// to normal form.
RatFun ratfun_sum_normalize(const std::vector<RatFun>& terms);

// The numerator when no denominator factors remain; NotPolynomial otherwise.
MultiPoly as_polynomial(const RatFun& f);

// One summand e^{<mu,X>} * R(X) of a fixed-point expansion.
struct ExpRatTerm {
    RatVec exponent;
    RatFun coeff;

    int rank() const { return coeff.rank(); }
};

// Homogeneous degree-d part of sum_t e^{<mu_t,X>} R_t(X), expanded at X = 0.
// Expansion runs along deterministically chosen generic lattice lines and the
// multivariate coefficient is rebuilt by exact interpolation on a lattice
// grid. A nonzero negative-degree Laurent coefficient on any sample line
// raises PoleAtZero (inconsistent fixed-point data).
MultiPoly taylor_coefficient(const std::vector<ExpRatTerm>& terms, long long degree, int rank);

} // namespace equiloc
