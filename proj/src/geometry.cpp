#include "equiloc/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace equiloc {

const FixedPointDatum& HamiltonianSpace::point(const std::string& label) const {
    for (const auto& p : points)
        if (p.label == label) return p;
    throw invalid_parameter("no fixed point labelled '" + label + "'");
}

bool DelzantPolytope::contains(const RatVec& x, long long k) const {
    for (size_t v = 0; v < vertices.size(); ++v) {
        RatMat cols(rank, RatVec(rank, Rational(0)));
        for (int j = 0; j < rank; ++j)
            for (int i = 0; i < rank; ++i) cols[i][j] = rational_of(vertex_edges[v][j][i]);
        RatVec rhs(rank, Rational(0));
        for (int i = 0; i < rank; ++i) rhs[i] = x[i] - rational_of(k) * vertices[v][i];
        auto t = solve(cols, rhs);
        if (!t) throw not_delzant("degenerate edge basis at vertex " + std::to_string(v));
        for (const auto& c : *t)
            if (c < 0) return false;
    }
    return true;
}

HamiltonianSpace build_toric(const DelzantPolytope& p, long long level) {
    if (level <= 0) throw invalid_parameter("level must be positive");
    if (p.vertices.size() != p.vertex_edges.size())
        throw not_delzant("vertex/edge tables of different length");
    HamiltonianSpace space;
    space.rank = p.rank;
    space.half_dim = p.rank;
    for (size_t v = 0; v < p.vertices.size(); ++v) {
        if (static_cast<int>(p.vertex_edges[v].size()) != p.rank)
            throw not_delzant("vertex " + std::to_string(v) + " does not have rank many edges");
        long long d = det_int(p.vertex_edges[v]);
        if (d != 1 && d != -1)
            throw not_delzant("edge generators at vertex " + std::to_string(v) +
                              " are not a lattice basis (det " + std::to_string(d) + ")");
        FixedPointDatum fp;
        fp.label = "v" + std::to_string(v);
        for (int i = 0; i < p.rank; ++i) {
            Rational m = rational_of(level) * p.vertices[v][i];
            if (m.get_den() != 1)
                throw non_integral_vertex("vertex " + std::to_string(v) +
                                          " is not a lattice point at this level");
            fp.moment.push_back(m);
            fp.bundle_weight.push_back(m.get_num().get_si());
        }
        fp.tangent_weights = p.vertex_edges[v];
        space.points.push_back(std::move(fp));
    }
    return space;
}

HamiltonianSpace build_coadjoint(const RootSystem& rs, const IntVec& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank)
        throw rank_mismatch("lambda has wrong rank");
    if (!rs.is_strictly_dominant(lambda))
        throw not_regular("lambda " + to_string(lambda) + " lies on a wall of the Weyl chamber");
    HamiltonianSpace space;
    space.rank = rs.rank;
    space.half_dim = static_cast<int>(rs.positive_roots.size());
    auto w_group = weyl_group(rs);
    for (size_t k = 0; k < w_group.size(); ++k) {
        const auto& w = w_group[k];
        FixedPointDatum fp;
        fp.label = "w" + std::to_string(k);
        fp.bundle_weight = w.apply(lambda);
        fp.moment = to_rat_vec(fp.bundle_weight);
        for (const auto& a : rs.positive_roots)
            fp.tangent_weights.push_back(negated(w.apply(a)));
        space.points.push_back(std::move(fp));
    }
    space.k_structure = rs;
    return space;
}

HamiltonianSpace product(const HamiltonianSpace& a, const HamiltonianSpace& b) {
    if (a.rank != b.rank) throw rank_mismatch("product factors have different rank");
    HamiltonianSpace space;
    space.rank = a.rank;
    space.half_dim = a.half_dim + b.half_dim;
    for (const auto& pa : a.points)
        for (const auto& pb : b.points) {
            FixedPointDatum fp;
            fp.label = pa.label + "*" + pb.label;
            fp.moment = add_vectors(pa.moment, pb.moment);
            fp.bundle_weight = add_vectors(pa.bundle_weight, pb.bundle_weight);
            fp.tangent_weights = pa.tangent_weights;
            fp.tangent_weights.insert(fp.tangent_weights.end(), pb.tangent_weights.begin(),
                                      pb.tangent_weights.end());
            space.points.push_back(std::move(fp));
        }
    if (a.k_structure && b.k_structure && a.k_structure->label == b.k_structure->label)
        space.k_structure = a.k_structure;
    return space;
}

HamiltonianSpace dualize(const HamiltonianSpace& space) {
    HamiltonianSpace out = space;
    for (auto& p : out.points) {
        p.moment = negated(p.moment);
        p.bundle_weight = negated(p.bundle_weight);
        for (auto& w : p.tangent_weights) w = negated(w);
    }
    return out;
}

HamiltonianSpace restrict_subtorus(const HamiltonianSpace& space,
                                   const std::vector<IntVec>& iota) {
    const int rp = static_cast<int>(iota.size());
    if (rp == 0 || rp > space.rank) throw invalid_parameter("iota has invalid shape");
    for (const auto& row : iota)
        if (static_cast<int>(row.size()) != space.rank)
            throw rank_mismatch("iota row of wrong length");

    // surjectivity onto Z^{r'}: the gcd of the maximal minors must be 1
    {
        std::vector<int> cols(space.rank);
        for (int i = 0; i < space.rank; ++i) cols[i] = i;
        std::vector<int> pick(rp);
        long long g = 0;
        std::function<void(int, int)> rec = [&](int idx, int from) {
            if (idx == rp) {
                std::vector<IntVec> sub(rp, IntVec(rp, 0));
                for (int i = 0; i < rp; ++i)
                    for (int j = 0; j < rp; ++j) sub[i][j] = iota[i][pick[j]];
                g = gcd_ll(g, det_int(sub));
                return;
            }
            for (int c = from; c < space.rank; ++c) {
                pick[idx] = c;
                rec(idx + 1, c + 1);
            }
        };
        rec(0, 0);
        if (g != 1)
            throw invalid_parameter("iota is not surjective onto the sublattice");
    }

    auto apply_int = [&](const IntVec& v) {
        IntVec out(rp, 0);
        for (int i = 0; i < rp; ++i)
            for (int j = 0; j < space.rank; ++j) out[i] += iota[i][j] * v[j];
        return out;
    };
    auto apply_rat = [&](const RatVec& v) {
        RatVec out(rp, Rational(0));
        for (int i = 0; i < rp; ++i)
            for (int j = 0; j < space.rank; ++j) out[i] += rational_of(iota[i][j]) * v[j];
        return out;
    };

    HamiltonianSpace out;
    out.rank = rp;
    out.half_dim = space.half_dim;
    for (const auto& p : space.points) {
        FixedPointDatum fp;
        fp.label = p.label;
        fp.moment = apply_rat(p.moment);
        fp.bundle_weight = apply_int(p.bundle_weight);
        for (const auto& w : p.tangent_weights) {
            IntVec img = apply_int(w);
            if (is_zero(img))
                throw fixed_submanifold("tangent weight " + to_string(w) + " at " + p.label +
                                        " maps to zero (non-isolated fixed set)");
            fp.tangent_weights.push_back(img);
        }
        out.points.push_back(std::move(fp));
    }
    return out;
}

std::vector<RatFun> euler_inverses(const HamiltonianSpace& space) {
    std::vector<RatFun> out;
    for (const auto& p : space.points)
        out.push_back(RatFun::quotient(MultiPoly::constant(space.rank, Rational(1)),
                                       p.tangent_weights));
    return out;
}

Int tangent_content_product(const FixedPointDatum& p) {
    Int c(1);
    for (const auto& w : p.tangent_weights) c *= int_of(content(w));
    return c;
}

IntVec generic_polarization(const HamiltonianSpace& space) {
    LatticeEnumerator lattice(space.rank);
    for (int tries = 0; tries < 100000; ++tries) {
        IntVec beta = lattice.next();
        bool ok = true;
        for (const auto& p : space.points) {
            for (const auto& w : p.tangent_weights)
                if (dot(w, beta) == 0) { ok = false; break; }
            if (!ok) break;
        }
        if (ok) return beta;
    }
    throw non_generic_polarization("no generic direction found");
}

ValidationReport validate(const HamiltonianSpace& space) {
    ValidationReport report;

    {
        bool pass = true;
        std::string witness;
        for (const auto& p : space.points) {
            if (static_cast<int>(p.tangent_weights.size()) != space.half_dim) {
                pass = false;
                witness = p.label + " has " + std::to_string(p.tangent_weights.size()) +
                          " tangent weights, expected " + std::to_string(space.half_dim);
                break;
            }
            for (const auto& w : p.tangent_weights)
                if (is_zero(w)) {
                    pass = false;
                    witness = p.label + " carries a zero tangent weight";
                    break;
                }
        }
        report.checks.push_back({"isolated_fixed_points", pass, witness});
    }

    if (space.half_dim >= 1) {
        RatFun sum = ratfun_sum_normalize(euler_inverses(space));
        bool pass = sum.is_zero();
        report.checks.push_back(
            {"euler_sum_vanishing", pass, pass ? "" : "sum normalizes to " + sum.to_string()});
    }

    {
        bool pass = true;
        std::string witness;
        for (const auto& p : space.points) {
            for (size_t i = 0; i < p.moment.size(); ++i) {
                if (p.moment[i].get_den() != 1 ||
                    p.moment[i].get_num() != int_of(p.bundle_weight[i])) {
                    pass = false;
                    witness = p.label + ": bundle weight " + to_string(p.bundle_weight) +
                              " differs from moment " + to_string(p.moment);
                    break;
                }
            }
            if (!pass) break;
        }
        report.checks.push_back({"prequantum_integrality", pass, witness});
    }

    if (space.k_structure) {
        auto w_group = weyl_group(*space.k_structure);
        auto key = [](const FixedPointDatum& p) {
            std::vector<IntVec> ws = p.tangent_weights;
            std::sort(ws.begin(), ws.end());
            return std::make_pair(p.moment, ws);
        };
        std::multiset<std::pair<RatVec, std::vector<IntVec>>> data;
        for (const auto& p : space.points) data.insert(key(p));
        bool pass = true;
        std::string witness;
        for (const auto& w : w_group) {
            std::multiset<std::pair<RatVec, std::vector<IntVec>>> image;
            for (const auto& p : space.points) {
                FixedPointDatum q;
                q.moment = w.apply(p.moment);
                for (const auto& tw : p.tangent_weights) q.tangent_weights.push_back(w.apply(tw));
                image.insert(key(q));
            }
            if (image != data) {
                pass = false;
                witness = "fixed-point data is not Weyl invariant";
                break;
            }
        }
        report.checks.push_back({"weyl_symmetry", pass, witness});
    }

    return report;
}

std::string to_string(PhiPositivity p) {
    switch (p) {
        case PhiPositivity::Strict: return "strict";
        case PhiPositivity::Weak: return "weak";
        default: return "none";
    }
}

PhiPositivity phi_positivity(const HamiltonianSpace& space, const std::vector<IntVec>& bundle) {
    if (bundle.size() != space.points.size())
        throw invalid_parameter("bundle must provide one weight per fixed point");
    bool strict = true;
    for (size_t i = 0; i < space.points.size(); ++i) {
        const RatVec& phi = space.points[i].moment;
        const IntVec& a = bundle[i];
        if (is_zero(phi)) continue; // no condition at zeros of the moment map
        if (is_zero(a)) {
            strict = false;
            continue;
        }
        // need a = c * phi with c > 0 (strict) or c >= 0 (weak)
        Rational c;
        bool have_c = false, proportional = true;
        for (size_t j = 0; j < phi.size(); ++j) {
            if (phi[j] == 0) {
                if (a[j] != 0) { proportional = false; break; }
                continue;
            }
            Rational cj = rational_of(a[j]) / phi[j];
            if (!have_c) {
                c = cj;
                have_c = true;
            } else if (cj != c) {
                proportional = false;
                break;
            }
        }
        if (!proportional || !have_c || c < 0) return PhiPositivity::None;
        if (c == 0) strict = false;
    }
    return strict ? PhiPositivity::Strict : PhiPositivity::Weak;
}

} // namespace equiloc
