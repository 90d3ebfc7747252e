#pragma once

#include <vector>

#include "equiloc/geometry.hpp"

namespace equiloc {

// Affine hyperplane <normal, xi> = offset, normal primitive with canonical
// sign. A wall is spurious when the density continues polynomially across it
// (the conservative arrangement may generate such walls; they are kept but
// flagged).
struct Wall {
    IntVec normal;
    Rational offset;
    bool spurious = false;

    Rational evaluate(const RatVec& xi) const {
        Rational s = -offset;
        for (size_t i = 0; i < normal.size(); ++i) s += rational_of(normal[i]) * xi[i];
        return s;
    }
};

struct MeasureChamber {
    RatVec sample;
    MultiPoly density;
    std::vector<int> cell_signs; // sign against every wall, spurious included
};

// Wall arrangement plus per-chamber polynomial densities, rank 1 or 2.
struct PiecewisePolyMeasure {
    int rank = 0;
    std::vector<Wall> walls;
    std::vector<MeasureChamber> chambers;
    Rational total_mass;          // exact integral over the bounded cells
    bool unbounded_support = false;

    std::vector<Wall> real_walls() const;
    // OnWall when xi lies on a non-spurious wall.
    const MeasureChamber& chamber_at(const RatVec& xi) const;
    Rational density_at(const RatVec& xi) const;
};

// Signed polarized-cone decomposition of the pushforward of Liouville
// measure: per fixed point, the cone of beta-polarized effective tangent
// weights at the moment image, with sign (-1)^{#flips}. Chamber densities
// are assembled by exact recursive cone convolution.
PiecewisePolyMeasure dh_measure(const HamiltonianSpace& space, const IntVec& beta);

// Jump of the density across the rank-1 wall at a, by the residue rule:
// the sum over fixed points sitting at a of the s^{-1}-Laurent coefficient
// of e^{(xi-a)s}/Eul_p(s). direction=-1 reports the jump crossed the other
// way. Independent of dh_measure and exactly equal to its chamber
// difference.
MultiPoly wall_jump(const HamiltonianSpace& space, const Rational& a, int direction = 1);

// Martin-type reduced integral at 0 for a space with declared k_structure:
// (c / |W|) * [Pi^2(d/dxi) density](0) with Pi^2 the Weyl integration
// factor. When 0 sits on a wall the value is accepted only if the adjacent
// chamber jets agree up to the operator order; otherwise OnWall.
Rational nonabelian_reduced_integral(const HamiltonianSpace& space);

} // namespace equiloc
