#pragma once

#include <string>
#include <vector>

#include "equiloc/character.hpp"
#include "equiloc/linalg.hpp"

namespace equiloc {

// Orthogonal (w.r.t. the invariant product) lattice map on weight
// coordinates, with its determinant.
struct WeylElement {
    std::vector<IntVec> matrix; // row i: coefficients of (w mu)_i
    int sign = 1;

    IntVec apply(const IntVec& mu) const;
    RatVec apply(const RatVec& mu) const;
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    bool operator<(const WeylElement& o) const { return matrix < o.matrix; }
};

// Root data of rank <= 3 in fundamental-weight coordinates: the weight
// lattice is Z^r, a weight is dominant iff its coordinates are nonnegative,
// and the pairing of a weight with a coroot (stored in simple-coroot
// coordinates) is the plain dot product. The invariant inner product makes
// short roots have squared length 2.
struct RootSystem {
    std::string label;
    int rank = 0;
    std::vector<IntVec> simple_roots;
    std::vector<IntVec> positive_roots;
    std::vector<IntVec> positive_coroots; // aligned with positive_roots
    RatVec rho;                           // half-sum of positive roots
    std::vector<RatVec> fundamental_weights;
    RatMat inner_product;                 // Gram matrix of fundamental weights

    bool is_dominant(const IntVec& mu) const {
        for (long long c : mu)
            if (c < 0) return false;
        return true;
    }
    bool is_strictly_dominant(const IntVec& mu) const {
        for (long long c : mu)
            if (c <= 0) return false;
        return true;
    }
};

// label in {A1, A1xA1, A2, B2, A3}; the returned data is validated.
RootSystem build_root_system(const std::string& label);

// All elements generated by the simple reflections, identity included,
// in a deterministic order.
std::vector<WeylElement> weyl_group(const RootSystem& rs);

// prod_{alpha>0} <lambda+rho, alpha> / <rho, alpha>, an exact integer.
Int weyl_dimension(const RootSystem& rs, const IntVec& lambda);

// Finitely supported character of the irreducible of highest weight lambda,
// by the Kostant multiplicity formula.
Character weyl_character(const RootSystem& rs, const IntVec& lambda);

// Number of ways to write mu as a nonnegative integer combination of parts;
// the parts must lie in an open half-space (UnpointedParts otherwise).
Int kostant_partition(const IntVec& mu, const std::vector<IntVec>& parts);

// Greedy highest-weight stripping of a W-symmetric finitely supported
// character; the result reconstructs the input exactly.
std::vector<std::pair<IntVec, Int>> decompose_character(const RootSystem& rs, const Character& chi);

// prod_{alpha>0} <alpha, X>^2, the Weyl integration factor det_{k/t}(ad X).
MultiPoly weyl_integration_factor(const RootSystem& rs);

} // namespace equiloc
