#pragma once

#include <map>
#include <vector>

#include "equiloc/dhmeasure.hpp"
#include "equiloc/localize.hpp"

namespace equiloc {

// Per-point replacement weights for twisted (Spin-c style) bundles.
using TwistData = std::map<std::string, IntVec>; // fixed-point label -> weight

struct QRRow {
    IntVec mu;
    Int from_character;
    Int from_reduction;
    bool agree = false;
};

struct QRReport {
    std::vector<QRRow> rows;
    bool all_agree() const {
        for (const auto& r : rows)
            if (!r.agree) return false;
        return true;
    }
};

// Equivariant index character by fixed-point summation: each point contributes
// the window truncation of t^{k*bundle(p)} * prod_i (1-t^{alpha_i})^{-1},
// expanded with the beta-oriented branches. Exact inside the window and
// independent of the generic beta.
Character rr_character(const HamiltonianSpace& space, long long level, const IntVec& beta,
                       const Box& window, const TwistData* twist = nullptr);

// Window chosen from the moment images; covers the full support for valid
// compact data.
Character rr_character_auto(const HamiltonianSpace& space, long long level,
                            const TwistData* twist = nullptr);

// Multiplicity 1 at each lattice point of level*P.
Character lattice_multiplicities(const DelzantPolytope& p, long long level);

// Index character against the lattice-point count of the scaled polytope.
QRReport qr_report_toric(const DelzantPolytope& p, long long level);

// Multiplicities of the irreducibles in the index character of a space with
// k_structure, by highest-weight stripping.
std::vector<std::pair<IntVec, Int>> k_multiplicities(const HamiltonianSpace& space,
                                                     long long level);

// Spin-c model: the regular orbit through mu+rho with the bundle weight at
// w(mu+rho) replaced by w(mu). Equals the irreducible character of mu.
Character spinc_quantize_flag(const RootSystem& rs, const IntVec& mu);

// For every dominant model weight in the window: the coefficient of each
// dominant mu in the model's decomposition against the Kronecker pattern
// (the reduced space at mu+rho is a point for mu equal to the model weight
// and empty otherwise).
QRReport qr_report_spinc_flag(const RootSystem& rs, const Box& window);

struct BlattnerResult {
    Character blattner;      // partition-function route
    Character reduced_count; // threshold-and-parity route
    bool agree = false;
};

// K-type multiplicities of the holomorphic discrete series of SL(2,R) with
// Harish-Chandra parameter lambda >= 1, on the window of the first J+1
// K-types: both routes must agree (1 on lambda+1, lambda+3, ...).
BlattnerResult blattner_sl2(long long lambda, long long window_steps);

// True iff no fixed point carries an invariant exponent: for every p there
// is no nonnegative integer solution of
//   <bundle(p), beta> + sum_i n_i |<alpha_i(p), beta>| = 0.
bool e_beta_vanishing(const HamiltonianSpace& space, const std::vector<IntVec>& bundle,
                      const IntVec& beta);

} // namespace equiloc
