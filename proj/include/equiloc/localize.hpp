#pragma once

#include <map>
#include <string>
#include <vector>

#include "equiloc/geometry.hpp"

namespace equiloc {

// An equivariant class given by its polynomial restrictions to the fixed
// points, optionally multiplied by the symplectic exponential.
struct EquivariantClass {
    std::map<std::string, MultiPoly> values; // fixed-point label -> restriction
    bool include_symplectic_exponential = false;

    static EquivariantClass one(const HamiltonianSpace& space, bool exponential);

    const MultiPoly& at(const std::string& label) const;
};

// Fixed-point localization of a closed polynomial class: the normalized sum
// of eta|_p / Eul_p, which must be a polynomial (NotPolynomial signals
// inconsistent data).
MultiPoly abbv_integrate_polynomial(const HamiltonianSpace& space, const EquivariantClass& eta);

// With the symplectic exponential the per-point summands are kept as
// e^{<Phi(p),X>} eta|_p / Eul_p.
std::vector<ExpRatTerm> abbv_integrate_exponential(const HamiltonianSpace& space,
                                                   const EquivariantClass& eta);

// The list { (Phi(p), 1/Eul_p) }_p.
std::vector<ExpRatTerm> dh_fourier(const HamiltonianSpace& space);

// Degree-0 coefficient of the fixed-point expansion, sign-normalized
// positive and rescaled to the effective lattice normalization (volumes of
// moment polytopes come out in lattice units).
Rational symplectic_volume(const HamiltonianSpace& space);

} // namespace equiloc
