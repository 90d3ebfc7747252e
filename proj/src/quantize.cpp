#include "equiloc/quantize.hpp"

#include <algorithm>

#include "equiloc/parallel.hpp"

namespace equiloc {

namespace {

IntVec scaled_bundle(const FixedPointDatum& p, long long level, const TwistData* twist) {
    if (twist) {
        auto it = twist->find(p.label);
        if (it != twist->end()) return it->second;
    }
    IntVec apex = p.bundle_weight;
    for (auto& c : apex) c *= level;
    return apex;
}

Box moment_hull_window(const HamiltonianSpace& space, long long level, const TwistData* twist) {
    IntVec lo(space.rank, 0), hi(space.rank, 0);
    bool first = true;
    for (const auto& p : space.points) {
        IntVec apex = scaled_bundle(p, level, twist);
        for (int i = 0; i < space.rank; ++i) {
            if (first || apex[i] < lo[i]) lo[i] = apex[i];
            if (first || apex[i] > hi[i]) hi[i] = apex[i];
        }
        first = false;
    }
    return Box{lo, hi}.inflated(1);
}

} // namespace

Character rr_character(const HamiltonianSpace& space, long long level, const IntVec& beta,
                       const Box& window, const TwistData* twist) {
    if (level <= 0) throw invalid_parameter("level must be positive");
    if (window.rank() != space.rank || static_cast<int>(beta.size()) != space.rank)
        throw rank_mismatch("beta/window rank mismatch");

    auto parts = parallel_map<Character>(space.points.size(), [&](size_t i) {
        const auto& p = space.points[i];
        return geometric_expand(scaled_bundle(p, level, twist), p.tangent_weights, beta, window);
    });

    Character out(space.rank, window);
    for (const auto& part : parts) out += part;
    return out;
}

Character rr_character_auto(const HamiltonianSpace& space, long long level,
                            const TwistData* twist) {
    return rr_character(space, level, generic_polarization(space),
                        moment_hull_window(space, level, twist), twist);
}

Character lattice_multiplicities(const DelzantPolytope& p, long long level) {
    if (level <= 0) throw invalid_parameter("level must be positive");
    IntVec lo(p.rank, 0), hi(p.rank, 0);
    bool first = true;
    for (const auto& v : p.vertices) {
        for (int i = 0; i < p.rank; ++i) {
            Rational c = rational_of(level) * v[i];
            long long fl = static_cast<long long>(mpz_class(c.get_num() / c.get_den()).get_si());
            while (rational_of(fl) > c) --fl;
            long long ce = fl;
            while (rational_of(ce) < c) ++ce;
            if (first || fl < lo[i]) lo[i] = fl;
            if (first || ce > hi[i]) hi[i] = ce;
        }
        first = false;
    }
    Character chi(p.rank, Box{lo, hi});
    IntVec x = lo;
    while (true) {
        if (p.contains(to_rat_vec(x), level)) chi.add(x, Int(1));
        int i = p.rank - 1;
        while (i >= 0 && x[i] == hi[i]) { x[i] = lo[i]; --i; }
        if (i < 0) break;
        ++x[i];
    }
    return chi;
}

QRReport qr_report_toric(const DelzantPolytope& p, long long level) {
    HamiltonianSpace space = build_toric(p, level);
    Box window = moment_hull_window(space, 1, nullptr); // moments already carry the level
    Character from_index = rr_character(space, 1, generic_polarization(space), window, nullptr);
    Character from_lattice = lattice_multiplicities(p, level).truncated(window);

    QRReport report;
    IntVec mu = window.lo;
    while (true) {
        QRRow row;
        row.mu = mu;
        row.from_character = from_index.multiplicity(mu);
        row.from_reduction = from_lattice.multiplicity(mu);
        row.agree = row.from_character == row.from_reduction;
        report.rows.push_back(std::move(row));
        int i = space.rank - 1;
        while (i >= 0 && mu[i] == window.hi[i]) { mu[i] = window.lo[i]; --i; }
        if (i < 0) break;
        ++mu[i];
    }
    return report;
}

std::vector<std::pair<IntVec, Int>> k_multiplicities(const HamiltonianSpace& space,
                                                     long long level) {
    if (!space.k_structure)
        throw missing_k_structure("k_multiplicities needs a declared compact-group structure");
    Character chi = rr_character_auto(space, level);
    return decompose_character(*space.k_structure, chi);
}

Character spinc_quantize_flag(const RootSystem& rs, const IntVec& mu) {
    if (!rs.is_dominant(mu)) throw invalid_parameter("mu must be dominant");
    IntVec lambda = mu;
    for (int i = 0; i < rs.rank; ++i) {
        if (rs.rho[i].get_den() != 1)
            throw invalid_parameter("non-integral rho (unsupported root data)");
        lambda[i] += rs.rho[i].get_num().get_si();
    }
    HamiltonianSpace orbit = build_coadjoint(rs, lambda);

    TwistData twist;
    auto w_group = weyl_group(rs);
    for (size_t k = 0; k < w_group.size(); ++k)
        twist.emplace("w" + std::to_string(k), w_group[k].apply(mu));

    return rr_character_auto(orbit, 1, &twist);
}

QRReport qr_report_spinc_flag(const RootSystem& rs, const Box& window) {
    std::vector<IntVec> dominants;
    IntVec mu = window.lo;
    while (true) {
        if (rs.is_dominant(mu)) dominants.push_back(mu);
        int i = rs.rank - 1;
        while (i >= 0 && mu[i] == window.hi[i]) { mu[i] = window.lo[i]; --i; }
        if (i < 0) break;
        ++mu[i];
    }

    QRReport report;
    for (const auto& model : dominants) {
        auto decomposition = decompose_character(rs, spinc_quantize_flag(rs, model));
        for (const auto& probe : dominants) {
            QRRow row;
            row.mu = probe; // multiplicity of V_probe in the model of V_model
            row.from_character = 0;
            for (const auto& [lam, m] : decomposition)
                if (lam == probe) row.from_character = m;
            row.from_reduction = probe == model ? 1 : 0;
            row.agree = row.from_character == row.from_reduction;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

BlattnerResult blattner_sl2(long long lambda, long long window_steps) {
    if (lambda < 1) throw invalid_parameter("the Harish-Chandra parameter must be >= 1");
    if (window_steps < 0) throw invalid_parameter("window must be nonnegative");
    long long top = lambda + 1 + 2 * window_steps;
    Box window{{0}, {top}};

    BlattnerResult out;
    out.blattner = Character(1, window);
    out.reduced_count = Character(1, window);
    const std::vector<IntVec> noncompact_parts{{2}}; // one noncompact positive root
    for (long long mu = 0; mu <= top; ++mu) {
        out.blattner.add({mu}, kostant_partition({mu - (lambda + 1)}, noncompact_parts));
        bool in_image = mu >= lambda + 1 && (mu - lambda - 1) % 2 == 0;
        out.reduced_count.add({mu}, Int(in_image ? 1 : 0));
    }
    out.agree = out.blattner.same_multiplicities(out.reduced_count);
    return out;
}

bool e_beta_vanishing(const HamiltonianSpace& space, const std::vector<IntVec>& bundle,
                      const IntVec& beta) {
    if (is_zero(beta)) throw invalid_parameter("beta must be nonzero");
    if (bundle.size() != space.points.size())
        throw invalid_parameter("bundle must provide one weight per fixed point");
    for (size_t i = 0; i < space.points.size(); ++i) {
        const auto& p = space.points[i];
        long long b = dot(bundle[i], beta);
        std::vector<long long> steps;
        for (const auto& w : p.tangent_weights) {
            long long c = dot(w, beta);
            if (c == 0)
                throw non_generic_polarization("beta is orthogonal to a tangent weight at " +
                                               p.label);
            steps.push_back(c < 0 ? -c : c);
        }
        // solvable iff -b is reachable by nonnegative combinations of steps
        if (b > 0) continue;
        long long target = -b;
        std::vector<char> reach(static_cast<size_t>(target) + 1, 0);
        reach[0] = 1;
        for (long long s : steps)
            for (long long v = s; v <= target; ++v)
                if (reach[static_cast<size_t>(v - s)]) reach[static_cast<size_t>(v)] = 1;
        if (reach[static_cast<size_t>(target)]) return false; // invariant exponent survives
    }
    return true;
}

} // namespace equiloc
