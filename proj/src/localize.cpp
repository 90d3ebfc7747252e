#include "equiloc/localize.hpp"

namespace equiloc {

EquivariantClass EquivariantClass::one(const HamiltonianSpace& space, bool exponential) {
    EquivariantClass c;
    c.include_symplectic_exponential = exponential;
    for (const auto& p : space.points)
        c.values.emplace(p.label, MultiPoly::constant(space.rank, Rational(1)));
    return c;
}

const MultiPoly& EquivariantClass::at(const std::string& label) const {
    auto it = values.find(label);
    if (it == values.end())
        throw invalid_parameter("equivariant class has no value at fixed point '" + label + "'");
    return it->second;
}

MultiPoly abbv_integrate_polynomial(const HamiltonianSpace& space, const EquivariantClass& eta) {
    if (eta.include_symplectic_exponential)
        throw invalid_parameter("polynomial localization requested with the exponential flag set");
    std::vector<RatFun> terms;
    for (const auto& p : space.points)
        terms.push_back(RatFun::quotient(eta.at(p.label), p.tangent_weights));
    return as_polynomial(ratfun_sum_normalize(terms));
}

std::vector<ExpRatTerm> abbv_integrate_exponential(const HamiltonianSpace& space,
                                                   const EquivariantClass& eta) {
    std::vector<ExpRatTerm> out;
    for (const auto& p : space.points) {
        ExpRatTerm t;
        t.exponent = p.moment;
        t.coeff = RatFun::quotient(eta.at(p.label), p.tangent_weights);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<ExpRatTerm> dh_fourier(const HamiltonianSpace& space) {
    return abbv_integrate_exponential(space, EquivariantClass::one(space, true));
}

Rational symplectic_volume(const HamiltonianSpace& space) {
    // Orientation constant (-1)^n, fixed once by positivity of the volume on
    // validated spaces.
    MultiPoly c0 = taylor_coefficient(dh_fourier(space), 0, space.rank);
    Rational vol = c0.constant_term();
    if (space.half_dim % 2 == 1) vol = -vol;

    // Rescale to the effective normalization when every fixed point covers
    // the weight lattice with the same index; volumes then measure the
    // moment polytope in lattice units.
    if (!space.points.empty()) {
        Int c = tangent_content_product(space.points.front());
        bool uniform = true;
        for (const auto& p : space.points)
            if (tangent_content_product(p) != c) { uniform = false; break; }
        if (uniform) vol *= Rational(c);
    }
    return vol;
}

} // namespace equiloc
