#include "equiloc/dhmeasure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace equiloc {

namespace {

struct ConeContribution {
    RatVec apex;
    std::vector<IntVec> generators; // primitive, polarized: <g,beta> > 0
    int sign = 1;
    int num_weights = 0; // before effectivization, = m
};

std::vector<ConeContribution> polarized_cones(const HamiltonianSpace& space, const IntVec& beta) {
    std::vector<ConeContribution> out;
    for (const auto& p : space.points) {
        ConeContribution c;
        c.apex = p.moment;
        c.num_weights = static_cast<int>(p.tangent_weights.size());
        for (const auto& w : p.tangent_weights) {
            long long pairing = dot(w, beta);
            if (pairing == 0)
                throw non_generic_polarization("beta " + to_string(beta) +
                                               " is orthogonal to tangent weight " + to_string(w));
            IntVec g = primitive_part(w);
            if (pairing < 0) {
                g = negated(g);
                c.sign = -c.sign;
            }
            c.generators.push_back(g);
        }
        std::sort(c.generators.begin(), c.generators.end());
        out.push_back(std::move(c));
    }
    return out;
}

IntVec canonical_normal(const IntVec& dir) {
    IntVec n{-dir[1], dir[0]};
    n = primitive_part(n);
    for (long long c : n) {
        if (c != 0) {
            if (c < 0) n = negated(n);
            break;
        }
    }
    return n;
}

long long det2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

Rational det2_rat(const IntVec& a, const RatVec& b) {
    return rational_of(a[0]) * b[1] - rational_of(a[1]) * b[0];
}

// Branch polynomials of the cone volume function T_G (the pushforward of
// Lebesgue measure on R_{>=0}^G under t -> sum t_i g_i), evaluated region by
// region. Regions are cells of the central arrangement of the generator
// lines; the key records the sign pattern of the sample against them.
class ConeBranches {
public:
    MultiPoly branch(const std::vector<IntVec>& gens, const RatVec& eta) {
        std::vector<IntVec> dirs;
        for (const auto& g : gens) dirs.push_back(g);
        std::sort(dirs.begin(), dirs.end());
        dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
        std::vector<int> signs;
        for (const auto& d : dirs) {
            Rational v = det2_rat(d, eta);
            signs.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
        }
        auto key = std::make_pair(gens, signs);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        MultiPoly poly = compute(gens, eta);
        cache_.emplace(std::move(key), poly);
        return poly;
    }

private:
    std::map<std::pair<std::vector<IntVec>, std::vector<int>>, MultiPoly> cache_;

    static MultiPoly embed3(const MultiPoly& p) {
        MultiPoly out(3);
        for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[1], 0}, c);
        return out;
    }

    static MultiPoly project2(const MultiPoly& p) {
        MultiPoly out(2);
        for (const auto& [e, c] : p.terms()) {
            if (e[2] != 0) throw degenerate_cone("integration variable survived projection");
            out.add_term({e[0], e[1]}, c);
        }
        return out;
    }

    MultiPoly compute(const std::vector<IntVec>& gens, const RatVec& eta) {
        if (gens.size() < 2) throw degenerate_cone("cone with fewer than two generators in rank 2");
        if (gens.size() == 2) {
            long long d = det2(gens[0], gens[1]);
            if (d == 0) throw degenerate_cone("parallel cone generators (singular measure)");
            Rational s = det2_rat(gens[1], eta) / rational_of(-d);
            Rational t = det2_rat(gens[0], eta) / rational_of(d);
            if (s > 0 && t > 0)
                return MultiPoly::constant(2, Rational(1) / rational_of(d < 0 ? -d : d));
            return MultiPoly(2);
        }

        // integrate over a generator whose removal keeps the rest spanning
        size_t pick = gens.size();
        for (size_t i = gens.size(); i-- > 0;) {
            std::vector<IntVec> rest;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != i) rest.push_back(gens[j]);
            bool spans = false;
            for (size_t a = 0; a + 1 < rest.size() && !spans; ++a)
                for (size_t b = a + 1; b < rest.size() && !spans; ++b)
                    if (det2(rest[a], rest[b]) != 0) spans = true;
            if (spans) { pick = i; break; }
        }
        if (pick == gens.size()) throw degenerate_cone("generators do not span the plane");
        IntVec g = gens[pick];
        std::vector<IntVec> rest;
        for (size_t j = 0; j < gens.size(); ++j)
            if (j != pick) rest.push_back(gens[j]);

        // crossing times of the ray eta - t g with the central lines of rest
        std::vector<IntVec> dirs = rest;
        std::sort(dirs.begin(), dirs.end());
        dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
        std::vector<std::pair<Rational, IntVec>> crossings;
        for (const auto& u : dirs) {
            long long du = det2(u, g);
            if (du == 0) continue;
            Rational t = det2_rat(u, eta) / rational_of(du);
            if (t > 0) crossings.emplace_back(t, u);
        }
        std::sort(crossings.begin(), crossings.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        // behind the last crossing the inner density must vanish
        {
            Rational t_far = crossings.empty() ? Rational(1) : crossings.back().first + 1;
            RatVec far_pt{eta[0] - t_far * rational_of(g[0]), eta[1] - t_far * rational_of(g[1])};
            if (!branch(rest, far_pt).is_zero())
                throw degenerate_cone("cone support is unbounded along the integration ray");
        }

        MultiPoly total(2);
        Rational prev_t(0);
        // bound functions: t = det(u, xi)/det(u, g), affine in xi; 0 at the start
        // crossing time as a function of xi: t = det(u, xi)/det(u, g)
        auto bound_poly = [&](const IntVec& u) {
            long long du = det2(u, g);
            MultiPoly d(3);
            d.add_term({0, 1, 0}, rational_of(u[0], du));
            d.add_term({1, 0, 0}, -rational_of(u[1], du));
            return d;
        };
        for (size_t k = 0; k < crossings.size(); ++k) {
            Rational t_mid = (prev_t + crossings[k].first) / 2;
            RatVec mid{eta[0] - t_mid * rational_of(g[0]), eta[1] - t_mid * rational_of(g[1])};
            MultiPoly q = branch(rest, mid);
            prev_t = crossings[k].first;
            if (q.is_zero()) continue;

            MultiPoly q3 = embed3(q);
            // substitute xi -> xi - t g
            MultiPoly xt(3), yt(3);
            xt.add_term({1, 0, 0}, Rational(1));
            xt.add_term({0, 0, 1}, -rational_of(g[0]));
            yt.add_term({0, 1, 0}, Rational(1));
            yt.add_term({0, 0, 1}, -rational_of(g[1]));
            q3 = q3.substitute_var(0, xt).substitute_var(1, yt);
            MultiPoly anti = q3.antiderivative(2);

            MultiPoly hi = bound_poly(crossings[k].second);
            MultiPoly lo(3);
            if (k > 0) lo = bound_poly(crossings[k - 1].second);
            total += project2(anti.substitute_var(2, hi) - anti.substitute_var(2, lo));
        }
        return total;
    }
};

std::string rat_str(const Rational& q) { return q.get_str(); }

} // namespace

std::vector<Wall> PiecewisePolyMeasure::real_walls() const {
    std::vector<Wall> out;
    for (const auto& w : walls)
        if (!w.spurious) out.push_back(w);
    return out;
}

const MeasureChamber& PiecewisePolyMeasure::chamber_at(const RatVec& xi) const {
    std::vector<int> signs;
    for (const auto& w : walls) {
        Rational v = w.evaluate(xi);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0 && !w.spurious)
            throw on_wall("point " + to_string(xi) + " lies on the wall <" + to_string(w.normal) +
                          ",xi> = " + rat_str(w.offset));
        signs.push_back(s);
    }
    for (const auto& ch : chambers) {
        bool match = true;
        for (size_t i = 0; i < walls.size(); ++i)
            if (signs[i] != 0 && ch.cell_signs[i] != signs[i]) { match = false; break; }
        if (match) return ch;
    }
    throw invalid_parameter("point " + to_string(xi) + " not located in any chamber");
}

Rational PiecewisePolyMeasure::density_at(const RatVec& xi) const {
    return chamber_at(xi).density.evaluate(xi);
}

namespace {

PiecewisePolyMeasure dh_measure_rank1(const HamiltonianSpace& space, const IntVec& beta) {
    auto cones = polarized_cones(space, beta);
    const int sigma = beta[0] > 0 ? 1 : -1;

    std::set<Rational> wall_set;
    for (const auto& c : cones) wall_set.insert(c.apex[0]);
    std::vector<Rational> wall_pos(wall_set.begin(), wall_set.end());

    PiecewisePolyMeasure m;
    m.rank = 1;
    for (const auto& a : wall_pos) m.walls.push_back(Wall{{1}, a, false});

    std::vector<Rational> samples;
    samples.push_back(wall_pos.front() - 1);
    for (size_t i = 0; i + 1 < wall_pos.size(); ++i)
        samples.push_back((wall_pos[i] + wall_pos[i + 1]) / 2);
    samples.push_back(wall_pos.back() + 1);

    for (const auto& s : samples) {
        MeasureChamber ch;
        ch.sample = {s};
        MultiPoly density(1);
        for (const auto& c : cones) {
            Rational rel = (s - c.apex[0]) * sigma;
            if (rel <= 0) continue;
            int mdeg = static_cast<int>(c.generators.size());
            Rational scale(1);
            for (const auto& g : c.generators) scale *= rational_of(g[0] < 0 ? -g[0] : g[0]);
            scale *= Rational(factorial(static_cast<unsigned>(mdeg - 1)));
            // sign * (sigma (xi - a))^{m-1} / ((m-1)! prod |g|)
            MultiPoly base(1);
            base.add_term({1}, rational_of(sigma));
            base.add_term({0}, -c.apex[0] * sigma);
            MultiPoly pw = MultiPoly::constant(1, Rational(c.sign) / scale);
            for (int k = 0; k < mdeg - 1; ++k) pw = pw * base;
            density += pw;
        }
        ch.density = density;
        for (const auto& w : m.walls) {
            Rational v = w.evaluate(ch.sample);
            ch.cell_signs.push_back(v > 0 ? 1 : -1);
        }
        m.chambers.push_back(std::move(ch));
    }

    // spurious walls: identical density on both sides
    for (size_t i = 0; i < m.walls.size(); ++i)
        if (m.chambers[i].density == m.chambers[i + 1].density) m.walls[i].spurious = true;

    // exact mass over the bounded intervals; the outer cells must be empty
    m.total_mass = 0;
    for (size_t i = 0; i + 1 < wall_pos.size(); ++i) {
        MultiPoly anti = m.chambers[i + 1].density.antiderivative(0);
        m.total_mass += anti.evaluate({wall_pos[i + 1]}) - anti.evaluate({wall_pos[i]});
    }
    if (!m.chambers.front().density.is_zero() || !m.chambers.back().density.is_zero())
        m.unbounded_support = true;
    return m;
}

PiecewisePolyMeasure dh_measure_rank2(const HamiltonianSpace& space, const IntVec& beta) {
    auto cones = polarized_cones(space, beta);

    // conservative wall family: every apex translated central line of its cone
    std::vector<Wall> walls;
    auto push_wall = [&](const IntVec& normal, const Rational& offset) {
        for (const auto& w : walls)
            if (w.normal == normal && w.offset == offset) return;
        walls.push_back(Wall{normal, offset, false});
    };
    for (const auto& c : cones) {
        std::vector<IntVec> dirs = c.generators;
        std::sort(dirs.begin(), dirs.end());
        dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
        for (const auto& d : dirs) {
            IntVec n = canonical_normal(d);
            push_wall(n, dot(c.apex, n));
        }
    }
    std::sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    });

    PiecewisePolyMeasure m;
    m.rank = 2;
    m.walls = walls;

    // x-breakpoints: pairwise wall intersections, vertical wall offsets
    std::set<Rational> xb;
    for (size_t i = 0; i < walls.size(); ++i) {
        if (walls[i].normal[1] == 0)
            xb.insert(walls[i].offset / rational_of(walls[i].normal[0]));
        for (size_t j = i + 1; j < walls.size(); ++j) {
            long long d = det2(walls[i].normal, walls[j].normal);
            if (d == 0) continue;
            // solve n_i . xi = c_i, n_j . xi = c_j
            Rational x = (walls[i].offset * rational_of(walls[j].normal[1]) -
                          walls[j].offset * rational_of(walls[i].normal[1])) /
                         rational_of(d);
            xb.insert(x);
        }
    }
    for (const auto& c : cones) xb.insert(c.apex[0]);
    std::vector<Rational> breaks(xb.begin(), xb.end());
    if (breaks.empty()) breaks.push_back(Rational(0));

    std::vector<std::pair<Rational, bool>> slab_samples; // (x, bounded)
    slab_samples.emplace_back(breaks.front() - 1, false);
    for (size_t i = 0; i + 1 < breaks.size(); ++i)
        slab_samples.emplace_back((breaks[i] + breaks[i + 1]) / 2, true);
    slab_samples.emplace_back(breaks.back() + 1, false);

    ConeBranches branches;
    auto density_for = [&](const RatVec& sample) {
        MultiPoly density(2);
        for (const auto& c : cones) {
            RatVec eta{sample[0] - c.apex[0], sample[1] - c.apex[1]};
            MultiPoly b = branches.branch(c.generators, eta);
            if (b.is_zero()) continue;
            density += b.shift(c.apex) * Rational(c.sign);
        }
        return density;
    };

    std::map<std::vector<int>, size_t> seen_cells;
    m.total_mass = 0;

    for (size_t si = 0; si < slab_samples.size(); ++si) {
        const Rational x0 = slab_samples[si].first;
        const bool bounded_x = slab_samples[si].second;
        const Rational slab_lo = bounded_x ? breaks[si - 1] : Rational(0);
        const Rational slab_hi = bounded_x ? breaks[si] : Rational(0);

        // wall crossings at x = x0 (vertical walls never cross a slab interior)
        std::vector<std::pair<Rational, size_t>> ys;
        for (size_t wi = 0; wi < walls.size(); ++wi) {
            if (walls[wi].normal[1] == 0) continue;
            Rational y = (walls[wi].offset - rational_of(walls[wi].normal[0]) * x0) /
                         rational_of(walls[wi].normal[1]);
            ys.emplace_back(y, wi);
        }
        std::sort(ys.begin(), ys.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        std::vector<Rational> ysamples;
        std::vector<bool> ybounded;
        if (ys.empty()) {
            ysamples.push_back(Rational(0));
            ybounded.push_back(false);
        } else {
            ysamples.push_back(ys.front().first - 1);
            ybounded.push_back(false);
            for (size_t i = 0; i + 1 < ys.size(); ++i) {
                ysamples.push_back((ys[i].first + ys[i + 1].first) / 2);
                ybounded.push_back(true);
            }
            ysamples.push_back(ys.back().first + 1);
            ybounded.push_back(false);
        }

        for (size_t yi = 0; yi < ysamples.size(); ++yi) {
            RatVec sample{x0, ysamples[yi]};
            std::vector<int> signs;
            for (const auto& w : walls) {
                Rational v = w.evaluate(sample);
                if (v == 0) throw invalid_parameter("degenerate cell sample (internal)");
                signs.push_back(v > 0 ? 1 : -1);
            }
            MultiPoly density(2);
            auto it = seen_cells.find(signs);
            if (it == seen_cells.end()) {
                density = density_for(sample);
                MeasureChamber ch;
                ch.sample = sample;
                ch.density = density;
                ch.cell_signs = signs;
                seen_cells.emplace(signs, m.chambers.size());
                m.chambers.push_back(std::move(ch));
            } else {
                density = m.chambers[it->second].density;
            }

            const bool bounded = bounded_x && ybounded[yi];
            if (!bounded) {
                if (!density.is_zero()) m.unbounded_support = true;
                continue;
            }
            if (density.is_zero()) continue;

            // integrate over the slab piece: y between the two crossing lines
            auto line_poly = [&](size_t wi) {
                const Wall& w = walls[wi];
                MultiPoly l(2);
                l.add_term({0, 0}, w.offset / rational_of(w.normal[1]));
                l.add_term({1, 0}, -rational_of(w.normal[0]) / rational_of(w.normal[1]));
                return l;
            };
            MultiPoly anti_y = density.antiderivative(1);
            MultiPoly upper = anti_y.substitute_var(1, line_poly(ys[yi].second));
            MultiPoly lower = anti_y.substitute_var(1, line_poly(ys[yi - 1].second));
            MultiPoly anti_x = (upper - lower).antiderivative(0);
            m.total_mass += anti_x.evaluate({slab_hi, Rational(0)}) -
                            anti_x.evaluate({slab_lo, Rational(0)});
        }
    }

    // spurious walls: every pair of cells differing only at the wall agrees
    for (size_t wi = 0; wi < m.walls.size(); ++wi) {
        bool spurious = true;
        for (size_t a = 0; a < m.chambers.size() && spurious; ++a)
            for (size_t b = a + 1; b < m.chambers.size() && spurious; ++b) {
                bool differ_only_here = m.chambers[a].cell_signs[wi] != m.chambers[b].cell_signs[wi];
                if (!differ_only_here) continue;
                for (size_t k = 0; k < m.walls.size(); ++k)
                    if (k != wi &&
                        m.chambers[a].cell_signs[k] != m.chambers[b].cell_signs[k]) {
                        differ_only_here = false;
                        break;
                    }
                if (differ_only_here && !(m.chambers[a].density == m.chambers[b].density))
                    spurious = false;
            }
        m.walls[wi].spurious = spurious;
    }

    return m;
}

} // namespace

PiecewisePolyMeasure dh_measure(const HamiltonianSpace& space, const IntVec& beta) {
    if (space.rank < 1 || space.rank > 2)
        throw rank_unsupported("measures are computed for rank 1 and 2 only");
    if (static_cast<int>(beta.size()) != space.rank)
        throw rank_mismatch("beta has wrong rank");
    if (space.points.empty()) throw invalid_parameter("space has no fixed points");
    return space.rank == 1 ? dh_measure_rank1(space, beta) : dh_measure_rank2(space, beta);
}

MultiPoly wall_jump(const HamiltonianSpace& space, const Rational& a, int direction) {
    if (space.rank != 1)
        throw rank_unsupported("wall jumps are computed on rank-1 spaces; restrict first");
    bool found = false;
    MultiPoly jump(1);
    for (const auto& p : space.points) {
        if (p.moment[0] != a) continue;
        found = true;
        int mdeg = static_cast<int>(p.tangent_weights.size());
        Rational scale = Rational(factorial(static_cast<unsigned>(mdeg - 1)));
        for (const auto& w : p.tangent_weights) {
            long long c = primitive_part(w)[0];
            scale *= rational_of(c);
        }
        MultiPoly base(1);
        base.add_term({1}, Rational(1));
        base.add_term({0}, -a);
        MultiPoly pw = MultiPoly::constant(1, Rational(1) / scale);
        for (int k = 0; k < mdeg - 1; ++k) pw = pw * base;
        jump += pw;
    }
    if (!found)
        throw not_a_wall_point("no fixed point has moment image " + rat_str(a));
    if (direction < 0) jump = -jump;
    return jump;
}

Rational nonabelian_reduced_integral(const HamiltonianSpace& space) {
    if (!space.k_structure)
        throw missing_k_structure("the space declares no compact-group structure");
    const RootSystem& rs = *space.k_structure;
    if (rs.rank != space.rank)
        throw rank_mismatch("k_structure rank differs from the torus rank");

    // Calibration constant of the reduced integral, pinned by the rank-one
    // tensor-power multiplicity oracles in the tests. It multiplies the raw
    // Fourier-gauge density, so the effectivized chamber polynomials are
    // rescaled back by the (uniform) content product.
    static const Rational c_martin(-2);

    Int content = tangent_content_product(space.points.front());
    for (const auto& p : space.points)
        if (tangent_content_product(p) != content)
            throw invalid_parameter("non-uniform weight contents under a k_structure");

    MultiPoly pi2 = weyl_integration_factor(rs);
    const long long op_degree = pi2.total_degree();
    const Rational order(static_cast<long>(weyl_group(rs).size()));

    IntVec beta = generic_polarization(space);
    PiecewisePolyMeasure m = dh_measure(space, beta);
    RatVec origin(space.rank, Rational(0));

    MultiPoly density(space.rank);
    bool on_real_wall = false;
    for (const auto& w : m.walls)
        if (!w.spurious && w.evaluate(origin) == 0) on_real_wall = true;

    if (!on_real_wall) {
        density = m.chamber_at(origin).density;
    } else {
        if (space.rank != 1)
            throw on_wall("0 is a singular value of the moment map");
        // Accept a wall at 0 only when both one-sided jets agree up to the
        // operator order; then the reduced value is side-independent.
        RatVec left{Rational(-1, 1000000)}, right{Rational(1, 1000000)};
        // samples strictly between 0 and the nearest walls
        Rational nearest(1);
        for (const auto& w : m.walls) {
            Rational d = w.offset;
            if (d > 0 && d < nearest) nearest = d;
            if (d < 0 && -d < nearest) nearest = -d;
        }
        left[0] = -nearest / 2;
        right[0] = nearest / 2;
        MultiPoly pl = m.chamber_at(left).density;
        MultiPoly pr = m.chamber_at(right).density;
        MultiPoly dl = pl, dr = pr;
        for (long long k = 0; k <= op_degree; ++k) {
            if (dl.evaluate(origin) != dr.evaluate(origin))
                throw on_wall("0 is a singular value and the chamber jets disagree");
            dl = dl.derivative(0);
            dr = dr.derivative(0);
        }
        density = pl;
    }

    MultiPoly applied = pi2.apply_as_differential_operator(density);
    return c_martin / (order * Rational(content)) * applied.evaluate(origin);
}

} // namespace equiloc
