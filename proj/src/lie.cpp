#include "equiloc/lie.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace equiloc {

IntVec WeylElement::apply(const IntVec& mu) const {
    IntVec out(matrix.size(), 0);
    for (size_t i = 0; i < matrix.size(); ++i)
        for (size_t j = 0; j < matrix.size(); ++j) out[i] += matrix[i][j] * mu[j];
    return out;
}

RatVec WeylElement::apply(const RatVec& mu) const {
    RatVec out(matrix.size(), Rational(0));
    for (size_t i = 0; i < matrix.size(); ++i)
        for (size_t j = 0; j < matrix.size(); ++j) out[i] += rational_of(matrix[i][j]) * mu[j];
    return out;
}

namespace {

RatMat scaled(const std::vector<std::vector<long long>>& num, long long den) {
    RatMat m;
    for (const auto& row : num) {
        RatVec r;
        for (long long c : row) r.push_back(rational_of(c, den));
        m.push_back(r);
    }
    return m;
}

void validate_root_system(const RootSystem& rs);

} // namespace

RootSystem build_root_system(const std::string& label) {
    RootSystem rs;
    rs.label = label;
    if (label == "A1") {
        rs.rank = 1;
        rs.simple_roots = {{2}};
        rs.positive_roots = {{2}};
        rs.positive_coroots = {{1}};
        rs.inner_product = scaled({{1}}, 2);
    } else if (label == "A1xA1") {
        rs.rank = 2;
        rs.simple_roots = {{2, 0}, {0, 2}};
        rs.positive_roots = {{2, 0}, {0, 2}};
        rs.positive_coroots = {{1, 0}, {0, 1}};
        rs.inner_product = scaled({{1, 0}, {0, 1}}, 2);
    } else if (label == "A2") {
        rs.rank = 2;
        rs.simple_roots = {{2, -1}, {-1, 2}};
        rs.positive_roots = {{2, -1}, {-1, 2}, {1, 1}};
        rs.positive_coroots = {{1, 0}, {0, 1}, {1, 1}};
        rs.inner_product = scaled({{2, 1}, {1, 2}}, 3);
    } else if (label == "B2") {
        // alpha1 long, alpha2 short; short roots have squared length 2.
        rs.rank = 2;
        rs.simple_roots = {{2, -2}, {-1, 2}};
        rs.positive_roots = {{2, -2}, {-1, 2}, {1, 0}, {0, 2}};
        rs.positive_coroots = {{1, 0}, {0, 1}, {2, 1}, {1, 1}};
        rs.inner_product = scaled({{2, 1}, {1, 1}}, 1);
    } else if (label == "A3") {
        rs.rank = 3;
        rs.simple_roots = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
        rs.positive_roots = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2},
                             {1, 1, -1}, {-1, 1, 1}, {1, 0, 1}};
        rs.positive_coroots = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                               {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
        rs.inner_product = scaled({{3, 2, 1}, {2, 4, 2}, {1, 2, 3}}, 4);
    } else {
        throw unsupported_type("root system '" + label + "' (supported: A1, A1xA1, A2, B2, A3)");
    }
    rs.rho.assign(rs.rank, Rational(0));
    for (const auto& a : rs.positive_roots)
        for (int i = 0; i < rs.rank; ++i) rs.rho[i] += rational_of(a[i], 2);
    for (int i = 0; i < rs.rank; ++i) {
        RatVec w(rs.rank, Rational(0));
        w[i] = 1;
        rs.fundamental_weights.push_back(w);
    }
    validate_root_system(rs);
    return rs;
}

namespace {

IntVec reflect_simple(const RootSystem& rs, int i, const IntVec& mu) {
    IntVec out = mu;
    long long pairing = mu[i]; // <mu, alpha_i^vee>
    for (int k = 0; k < rs.rank; ++k) out[k] -= pairing * rs.simple_roots[i][k];
    return out;
}

std::vector<IntVec> simple_reflection_matrix(const RootSystem& rs, int i) {
    std::vector<IntVec> m(rs.rank, IntVec(rs.rank, 0));
    for (int col = 0; col < rs.rank; ++col) {
        IntVec e(rs.rank, 0);
        e[col] = 1;
        IntVec im = reflect_simple(rs, i, e);
        for (int row = 0; row < rs.rank; ++row) m[row][col] = im[row];
    }
    return m;
}

void validate_root_system(const RootSystem& rs) {
    // positive roots are nonnegative integer combinations of simple roots
    for (const auto& a : rs.positive_roots) {
        RatMat cols(rs.rank, RatVec(rs.rank, Rational(0)));
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) cols[i][j] = rational_of(rs.simple_roots[j][i]);
        auto sol = solve(cols, to_rat_vec(a));
        if (!sol) throw unsupported_type("degenerate simple root set for " + rs.label);
        for (const auto& c : *sol)
            if (c < 0 || c.get_den() != 1)
                throw unsupported_type("positive root outside the simple cone for " + rs.label);
    }
    // each simple reflection permutes the other positive roots
    for (int i = 0; i < rs.rank; ++i) {
        std::multiset<IntVec> others, images;
        for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
            if (rs.positive_roots[k] == rs.simple_roots[i]) continue;
            others.insert(rs.positive_roots[k]);
            images.insert(reflect_simple(rs, i, rs.positive_roots[k]));
        }
        if (others != images)
            throw unsupported_type("simple reflection does not permute R+ for " + rs.label);
    }
}

} // namespace

std::vector<WeylElement> weyl_group(const RootSystem& rs) {
    std::vector<std::vector<IntVec>> gens;
    for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection_matrix(rs, i));

    auto mul = [&](const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
        std::vector<IntVec> c(rs.rank, IntVec(rs.rank, 0));
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j)
                for (int k = 0; k < rs.rank; ++k) c[i][j] += a[i][k] * b[k][j];
        return c;
    };

    std::vector<IntVec> id(rs.rank, IntVec(rs.rank, 0));
    for (int i = 0; i < rs.rank; ++i) id[i][i] = 1;

    std::set<std::vector<IntVec>> seen{id};
    std::vector<std::vector<IntVec>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<IntVec>> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                auto wg = mul(g, w);
                if (seen.insert(wg).second) next.push_back(wg);
            }
        frontier.swap(next);
    }

    std::vector<WeylElement> out;
    for (const auto& m : seen) {
        WeylElement w;
        w.matrix = m;
        std::vector<IntVec> mm = m;
        w.sign = det_int(mm) > 0 ? 1 : -1;
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int weyl_dimension(const RootSystem& rs, const IntVec& lambda) {
    if (!rs.is_dominant(lambda)) throw invalid_parameter("weight is not dominant");
    Rational num(1), den(1);
    for (const auto& c : rs.positive_coroots) {
        Rational lp(0), rp(0);
        for (int i = 0; i < rs.rank; ++i) {
            lp += rational_of(c[i]) * (rational_of(lambda[i]) + rs.rho[i]);
            rp += rational_of(c[i]) * rs.rho[i];
        }
        num *= lp;
        den *= rp;
    }
    Rational d = num / den;
    if (d.get_den() != 1) throw invalid_parameter("non-integral Weyl dimension (bad root data)");
    return d.get_num();
}

namespace {

// Certifies pointedness by exhibiting beta with <p,beta> > 0 for all parts.
IntVec pointedness_witness(const std::vector<IntVec>& parts) {
    if (parts.empty()) throw invalid_parameter("empty part multiset");
    const int rank = static_cast<int>(parts.front().size());
    LatticeEnumerator lattice(rank);
    for (int tries = 0; tries < 100000; ++tries) {
        IntVec beta = lattice.next();
        bool ok = true;
        long long shell = 0;
        for (long long c : beta) shell = std::max(shell, c < 0 ? -c : c);
        if (shell > 40) break;
        for (const auto& p : parts)
            if (dot(p, beta) <= 0) { ok = false; break; }
        if (ok) return beta;
    }
    throw unpointed_parts("parts are not contained in an open half-space");
}

struct PartitionCounter {
    const std::vector<IntVec>& parts;
    IntVec beta;
    std::vector<long long> pairings;
    std::map<std::pair<size_t, IntVec>, Int> memo;

    explicit PartitionCounter(const std::vector<IntVec>& p)
        : parts(p), beta(pointedness_witness(p)) {
        for (const auto& q : parts) {
            if (is_zero(q)) throw unpointed_parts("zero vector among parts");
            pairings.push_back(dot(q, beta));
        }
    }

    Int count(size_t idx, const IntVec& residual) {
        long long h = dot(residual, beta);
        if (h == 0) return is_zero(residual) ? Int(1) : Int(0);
        if (h < 0 || idx == parts.size()) return Int(0);
        auto key = std::make_pair(idx, residual);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int total(0);
        IntVec r = residual;
        for (long long n = 0; n * pairings[idx] <= h; ++n) {
            total += count(idx + 1, r);
            for (size_t i = 0; i < r.size(); ++i) r[i] -= parts[idx][i];
        }
        memo.emplace(key, total);
        return total;
    }
};

} // namespace

Int kostant_partition(const IntVec& mu, const std::vector<IntVec>& parts) {
    if (parts.empty()) return is_zero(mu) ? Int(1) : Int(0);
    PartitionCounter counter(parts);
    return counter.count(0, mu);
}

Character weyl_character(const RootSystem& rs, const IntVec& lambda) {
    if (!rs.is_dominant(lambda)) throw invalid_parameter("weight is not dominant");
    auto w_group = weyl_group(rs);

    RatVec lam_rho = add_vectors(to_rat_vec(lambda), rs.rho);
    std::vector<IntVec> shifted; // w(lambda+rho), integral since rho is
    for (const auto& w : w_group) {
        RatVec v = w.apply(lam_rho);
        IntVec iv;
        for (const auto& c : v) {
            if (c.get_den() != 1) throw invalid_parameter("non-integral lambda+rho orbit");
            iv.push_back(c.get_num().get_si());
        }
        shifted.push_back(iv);
    }

    // candidate support: lattice box spanned by the W-orbit of lambda
    IntVec lo(rs.rank, 0), hi(rs.rank, 0);
    for (const auto& w : w_group) {
        IntVec img = w.apply(lambda);
        for (int i = 0; i < rs.rank; ++i) {
            lo[i] = std::min(lo[i], img[i]);
            hi[i] = std::max(hi[i], img[i]);
        }
    }

    PartitionCounter counter(rs.positive_roots);
    IntVec rho_i;
    for (const auto& c : rs.rho) rho_i.push_back(c.get_num().get_si());

    Character chi(rs.rank);
    IntVec mu = lo;
    while (true) {
        Int m(0);
        for (size_t k = 0; k < w_group.size(); ++k) {
            IntVec arg = shifted[k];
            for (int i = 0; i < rs.rank; ++i) arg[i] -= mu[i] + rho_i[i];
            Int p = counter.count(0, arg);
            if (p != 0) m += Int(w_group[k].sign) * p;
        }
        chi.add(mu, m);

        int i = rs.rank - 1;
        while (i >= 0 && mu[i] == hi[i]) { mu[i] = lo[i]; --i; }
        if (i < 0) break;
        ++mu[i];
    }
    return chi;
}

MultiPoly weyl_integration_factor(const RootSystem& rs) {
    MultiPoly p = MultiPoly::constant(rs.rank, Rational(1));
    for (const auto& a : rs.positive_roots) {
        MultiPoly f = MultiPoly::linear_form(a);
        p = p * f * f;
    }
    return p;
}

namespace {

RatVec rho_coroot_coords(const RootSystem& rs) {
    RatVec rv(rs.rank, Rational(0));
    for (const auto& c : rs.positive_coroots)
        for (int i = 0; i < rs.rank; ++i) rv[i] += rational_of(c[i], 2);
    return rv;
}

} // namespace

std::vector<std::pair<IntVec, Int>> decompose_character(const RootSystem& rs, const Character& chi) {
    auto w_group = weyl_group(rs);
    for (const auto& [w, m] : chi.multiplicities())
        for (const auto& g : w_group)
            if (chi.multiplicity(g.apply(w)) != m)
                throw not_weyl_symmetric("multiplicity differs along the orbit of " + to_string(w));

    RatVec rho_v = rho_coroot_coords(rs);
    Character rest = chi;
    std::vector<std::pair<IntVec, Int>> out;
    while (!rest.is_zero()) {
        // maximal height <mu, rho_vee>, graded-lex tie-break
        const IntVec* best = nullptr;
        Rational best_h;
        for (const auto& [w, m] : rest.multiplicities()) {
            Rational h = dot(rho_v, w);
            if (!best || h > best_h || (h == best_h && GradedLexLess{}(*best, w))) {
                best = &w;
                best_h = h;
            }
        }
        IntVec lambda = *best;
        if (!rs.is_dominant(lambda))
            throw not_weyl_symmetric("height-maximal weight " + to_string(lambda) + " is not dominant");
        Int m = rest.multiplicity(lambda);
        rest = rest - weyl_character(rs, lambda) * m;
        out.emplace_back(lambda, m);
    }
    return out;
}

} // namespace equiloc
