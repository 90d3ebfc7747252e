#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equiloc/lie.hpp"
#include "equiloc/ratfun.hpp"

namespace equiloc {

// An isolated fixed point: moment image, isotropy weights on the tangent
// space, and the weight of the torus on the prequantum line at the point.
struct FixedPointDatum {
    std::string label;
    RatVec moment;
    std::vector<IntVec> tangent_weights;
    IntVec bundle_weight;
};

// A compact Hamiltonian torus space encoded entirely by its fixed-point
// data. If k_structure is set the torus data is the maximal-torus
// restriction of an action of the compact group with that root system.
struct HamiltonianSpace {
    int rank = 0;
    int half_dim = 0;
    std::vector<FixedPointDatum> points;
    std::optional<RootSystem> k_structure;

    const FixedPointDatum& point(const std::string& label) const;
};

struct DelzantPolytope {
    int rank = 0;
    std::vector<RatVec> vertices;
    std::vector<std::vector<IntVec>> vertex_edges; // primitive inward edge generators

    // exact membership: x lies in k*P iff it lies in every scaled vertex cone
    bool contains(const RatVec& x, long long k = 1) const;
};

// One fixed point per vertex; moments and bundle weights are k * vertex,
// tangent weights the inward primitive edge generators.
HamiltonianSpace build_toric(const DelzantPolytope& p, long long level);

// Regular coadjoint orbit through a strictly dominant lambda: fixed points
// w*lambda with tangent weights {-w alpha : alpha in R+}.
HamiltonianSpace build_coadjoint(const RootSystem& rs, const IntVec& lambda);

// Same torus acting diagonally; moments add, weight lists concatenate.
HamiltonianSpace product(const HamiltonianSpace& a, const HamiltonianSpace& b);

HamiltonianSpace dualize(const HamiltonianSpace& space);

// Applies a surjective lattice map iota (r' x r) to all moments and weights.
// FixedSubmanifold when some tangent weight maps to zero.
HamiltonianSpace restrict_subtorus(const HamiltonianSpace& space,
                                   const std::vector<IntVec>& iota);

struct ValidationCheck {
    std::string name;
    bool pass;
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Checks the compactness witness (the fixed-point Euler sum normalizes to
// zero), prequantum integrality (bundle weight equals the moment image, a
// lattice point), and Weyl symmetry when a k_structure is declared.
ValidationReport validate(const HamiltonianSpace& space);

enum class PhiPositivity { Strict, Weak, None };

std::string to_string(PhiPositivity p);

// Pointwise positivity of a line bundle given by per-point weights a_p
// against the moment map: weak needs a_p = c_p Phi(p) with c_p >= 0 (or
// Phi(p) = 0), strict needs c_p > 0 whenever Phi(p) != 0.
PhiPositivity phi_positivity(const HamiltonianSpace& space,
                             const std::vector<IntVec>& bundle);

// 1 / prod <alpha_i(p), X> for every fixed point.
std::vector<RatFun> euler_inverses(const HamiltonianSpace& space);

// Product of the contents of the tangent weights at p; the index of the
// lattice the weights span inside the weight lattice, per point.
Int tangent_content_product(const FixedPointDatum& p);

// A lattice direction generic for every tangent weight of every point,
// chosen from the canonical enumeration.
IntVec generic_polarization(const HamiltonianSpace& space);

} // namespace equiloc
