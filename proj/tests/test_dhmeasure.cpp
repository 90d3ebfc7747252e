#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equiloc/dhmeasure.hpp"
#include "equiloc/localize.hpp"
#include "oracles.hpp"
#include "spaces.hpp"

using namespace equiloc;

namespace {

RatVec pt1(const Rational& x) { return {x}; }
RatVec pt2(const Rational& x, const Rational& y) { return {x, y}; }

// rank-1 chamber polynomials immediately left/right of a wall point
std::pair<MultiPoly, MultiPoly> chambers_around(const PiecewisePolyMeasure& m, const Rational& a) {
    Rational eps(1);
    for (const auto& w : m.walls) {
        Rational d = w.offset - a;
        if (d > 0 && d < eps) eps = d;
        if (d < 0 && -d < eps) eps = -d;
    }
    eps /= 2;
    return {m.chamber_at(pt1(a - eps)).density, m.chamber_at(pt1(a + eps)).density};
}

// the triple and quadruple interval convolutions, built independently
oracles::Pw1 box_power(int factors) {
    oracles::Pw1 f = oracles::box_density(Rational(-1), Rational(1), Rational(1));
    for (int i = 1; i < factors; ++i) f = oracles::convolve_box(f, Rational(-1), Rational(1));
    return f;
}

} // namespace

TEST_CASE("interval measure is the indicator") {
    PiecewisePolyMeasure m = dh_measure(spaces::cp1(), {1});
    REQUIRE(m.walls.size() == 2);
    CHECK(m.walls[0].offset == 0);
    CHECK(m.walls[1].offset == 1);
    CHECK_FALSE(m.walls[0].spurious);
    CHECK_FALSE(m.walls[1].spurious);
    CHECK(m.density_at(pt1(rational_of(1, 2))) == 1);
    CHECK(m.density_at(pt1(rational_of(2))) == 0);
    CHECK(m.density_at(pt1(rational_of(-3, 7))) == 0);
    CHECK_THROWS_AS(m.density_at(pt1(Rational(1))), Error);
    CHECK(m.total_mass == 1);
    CHECK_FALSE(m.unbounded_support);
}

TEST_CASE("triangle measure is the indicator of the triangle") {
    HamiltonianSpace cp2 = build_toric(spaces::triangle(), 1);
    PiecewisePolyMeasure m = dh_measure(cp2, {1, 2});
    CHECK(m.density_at(pt2(rational_of(1, 4), rational_of(1, 4))) == 1);
    CHECK(m.density_at(pt2(rational_of(1, 8), rational_of(1, 3))) == 1);
    CHECK(m.density_at(pt2(rational_of(2, 3), rational_of(2, 3))) == 0);
    CHECK(m.density_at(pt2(rational_of(-1, 5), rational_of(1, 2))) == 0);
    CHECK(m.density_at(pt2(rational_of(3), rational_of(1, 3))) == 0);
    CHECK(m.total_mass == rational_of(1, 2));
    CHECK_FALSE(m.unbounded_support);
}

TEST_CASE("toric measures at higher level") {
    for (long long k : {1, 2}) {
        for (auto builder : {spaces::square, spaces::hirzebruch}) {
            HamiltonianSpace s = build_toric(builder(), k);
            PiecewisePolyMeasure m = dh_measure(s, {2, 1});
            // interior samples scale with the polytope
            RatVec inside = pt2(rational_of(k, 3), rational_of(k, 3));
            CHECK(m.density_at(inside) == 1);
            CHECK(m.total_mass == symplectic_volume(s));
        }
    }
}

TEST_CASE("interior chamber polynomials of toric spaces are constant one") {
    HamiltonianSpace hz = build_toric(spaces::hirzebruch(), 1);
    PiecewisePolyMeasure m = dh_measure(hz, {1, 3});
    DelzantPolytope p = spaces::hirzebruch();
    for (const auto& ch : m.chambers) {
        if (p.contains(ch.sample))
            CHECK(ch.density == MultiPoly::constant(2, Rational(1)));
        else
            CHECK(ch.density.is_zero());
    }
}

TEST_CASE("rank-one orbit measure") {
    PiecewisePolyMeasure m = dh_measure(spaces::a1_orbit(2), {1});
    CHECK(m.density_at(pt1(Rational(0))) == 1);
    CHECK(m.density_at(pt1(rational_of(3))) == 0);
    CHECK(m.total_mass == 4);
}

TEST_CASE("triple orbit convolution against the direct integration oracle") {
    HamiltonianSpace triple = spaces::a1_orbit_power(1, 3);
    PiecewisePolyMeasure m = dh_measure(triple, {1});

    auto walls = m.real_walls();
    std::vector<Rational> offsets;
    for (const auto& w : walls) offsets.push_back(w.offset);
    CHECK(offsets == std::vector<Rational>{Rational(-3), Rational(-1), Rational(1), Rational(3)});

    oracles::Pw1 reference = box_power(3);
    for (long long num = -35; num <= 35; ++num) {
        Rational x = rational_of(num, 10);
        if (x == -3 || x == -1 || x == 1 || x == 3) continue;
        CHECK(m.density_at(pt1(x)) == reference.eval(x));
        CHECK(m.density_at(pt1(x)) == m.density_at(pt1(-x))); // even
    }
    CHECK(m.total_mass == reference.mass());
    CHECK(m.total_mass == symplectic_volume(triple));

    // degree bound: n - r = 2
    for (const auto& ch : m.chambers) CHECK(ch.density.total_degree() <= 2);
}

TEST_CASE("measure is independent of the polarization") {
    SUBCASE("rank one") {
        HamiltonianSpace triple = spaces::a1_orbit_power(1, 3);
        PiecewisePolyMeasure a = dh_measure(triple, {1});
        PiecewisePolyMeasure b = dh_measure(triple, {-1});
        PiecewisePolyMeasure c = dh_measure(triple, {5});
        for (long long num = -7; num <= 7; num += 2) {
            RatVec x = pt1(rational_of(num, 2));
            CHECK(a.density_at(x) == b.density_at(x));
            CHECK(a.density_at(x) == c.density_at(x));
        }
    }
    SUBCASE("rank two") {
        HamiltonianSpace orbit = build_coadjoint(build_root_system("A2"), {1, 1});
        PiecewisePolyMeasure a = dh_measure(orbit, generic_polarization(orbit));
        PiecewisePolyMeasure b = dh_measure(orbit, {5, 1});
        PiecewisePolyMeasure c = dh_measure(orbit, {-1, -3});
        for (long long i = -3; i <= 3; ++i)
            for (long long j = -3; j <= 3; ++j) {
                RatVec x = pt2(rational_of(2 * i + 1, 7), rational_of(2 * j + 1, 11));
                CHECK(a.density_at(x) == b.density_at(x));
                CHECK(a.density_at(x) == c.density_at(x));
            }
    }
}

TEST_CASE("regular orbit measures integrate to the volume") {
    SUBCASE("A2 flag orbit") {
        HamiltonianSpace orbit = build_coadjoint(build_root_system("A2"), {1, 1});
        PiecewisePolyMeasure m = dh_measure(orbit, generic_polarization(orbit));
        CHECK(m.total_mass == symplectic_volume(orbit));
        CHECK_FALSE(m.unbounded_support);
    }
    SUBCASE("B2 flag orbit") {
        HamiltonianSpace orbit = build_coadjoint(build_root_system("B2"), {1, 1});
        PiecewisePolyMeasure m = dh_measure(orbit, generic_polarization(orbit));
        CHECK(m.total_mass == symplectic_volume(orbit));
    }
    SUBCASE("product of two rank-one orbits as a rank-two orbit") {
        HamiltonianSpace orbit = build_coadjoint(build_root_system("A1xA1"), {1, 1});
        PiecewisePolyMeasure m = dh_measure(orbit, {1, 2});
        CHECK(m.total_mass == symplectic_volume(orbit));
        CHECK(m.density_at(pt2(Rational(0), Rational(0))) == 1);
    }
}

TEST_CASE("wall jumps by residue match chamber differences") {
    SUBCASE("interval") {
        for (long long k : {1, 2, 3}) {
            HamiltonianSpace cp1 = spaces::cp1(k);
            PiecewisePolyMeasure m = dh_measure(cp1, {1});
            auto [l0, r0] = chambers_around(m, Rational(0));
            CHECK(wall_jump(cp1, Rational(0)) == r0 - l0);
            auto [lk, rk] = chambers_around(m, rational_of(k));
            CHECK(wall_jump(cp1, rational_of(k)) == rk - lk);
            CHECK(wall_jump(cp1, Rational(0), -1) == l0 - r0);
        }
    }
    SUBCASE("rank-one restrictions of the projective plane") {
        for (IntVec iota_row : {IntVec{1, 2}, IntVec{2, 1}}) {
            HamiltonianSpace r =
                restrict_subtorus(build_toric(spaces::triangle(), 1), {iota_row});
            PiecewisePolyMeasure m = dh_measure(r, {1});
            for (const auto& w : m.real_walls()) {
                auto [left, right] = chambers_around(m, w.offset);
                CHECK(wall_jump(r, w.offset) == right - left);
            }
        }
    }
    SUBCASE("triple orbit") {
        HamiltonianSpace triple = spaces::a1_orbit_power(1, 3);
        PiecewisePolyMeasure m = dh_measure(triple, {1});
        for (const auto& w : m.real_walls()) {
            auto [left, right] = chambers_around(m, w.offset);
            MultiPoly jump = wall_jump(triple, w.offset);
            CHECK(jump == right - left);
            CHECK(jump.total_degree() <= 2);
        }
        // explicit check at the wall a=1: difference of two quadratics
        MultiPoly j1 = wall_jump(triple, Rational(1));
        MultiPoly expected(1);
        // 3 * (xi-1)^2 / 2
        MultiPoly base(1);
        base.add_term({1}, Rational(1));
        base.add_term({0}, Rational(-1));
        expected = base * base * rational_of(3, 2);
        CHECK(j1 == expected);
    }
    SUBCASE("missing wall point") {
        CHECK_THROWS_AS(wall_jump(spaces::cp1(), rational_of(1, 2)), Error);
    }
}

TEST_CASE("continuity degree across walls") {
    // a wall carried by points with m transverse weights is C^{m-2}
    HamiltonianSpace quad = spaces::a1_orbit_power(1, 4);
    for (const Rational& a : {Rational(0), Rational(2)}) {
        MultiPoly jump = wall_jump(quad, a);
        MultiPoly d = jump;
        for (int order = 0; order <= 2; ++order) {
            CHECK(d.evaluate({a}) == 0);
            d = d.derivative(0);
        }
        CHECK(d.evaluate({a}) != 0); // the third derivative genuinely jumps
    }
}

TEST_CASE("density outside the hull vanishes and errors are typed") {
    HamiltonianSpace triple = spaces::a1_orbit_power(1, 3);
    PiecewisePolyMeasure m = dh_measure(triple, {1});
    CHECK(m.density_at(pt1(rational_of(7, 2))) == 0);
    CHECK(m.density_at(pt1(rational_of(-100))) == 0);
    CHECK_THROWS_AS(m.density_at(pt1(Rational(1))), Error);
    CHECK_THROWS_AS(dh_measure(triple, {0}), Error);

    HamiltonianSpace pt;
    pt.rank = 3;
    pt.half_dim = 1;
    pt.points.push_back({"p", {Rational(0), Rational(0), Rational(0)}, {{1, 0, 0}}, {0, 0, 0}});
    CHECK_THROWS_AS(dh_measure(pt, {1, 1, 1}), Error);
}

TEST_CASE("reduced integral at zero: tensor power oracles") {
    SUBCASE("four factors: slope of the invariant count") {
        HamiltonianSpace quad = spaces::a1_orbit_power(1, 4);
        Rational value = nonabelian_reduced_integral(quad);
        CHECK(value == 1);
        // multiplicity oracle at k = 200: m(k)/(k*value) within 5%
        Int m200 = oracles::sl2_tensor_power_invariants(200, 4);
        CHECK(m200 == 201);
        Rational ratio = Rational(m200) / (rational_of(200) * value);
        CHECK(ratio - 1 <= rational_of(1, 20));
        CHECK(Rational(1) - ratio <= rational_of(1, 20));
    }
    SUBCASE("three factors: the reduced space is a single point") {
        HamiltonianSpace triple = spaces::a1_orbit_power(1, 3);
        CHECK(nonabelian_reduced_integral(triple) == 1);
        CHECK(oracles::sl2_tensor_power_invariants(200, 3) == 1);
    }
    SUBCASE("five factors: quadratic growth") {
        HamiltonianSpace five = spaces::a1_orbit_power(1, 5);
        Rational value = nonabelian_reduced_integral(five);
        CHECK(value > 0);
        Int m200 = oracles::sl2_tensor_power_invariants(200, 5);
        Rational ratio = Rational(m200) / (rational_of(200 * 200) * value);
        CHECK(ratio - 1 <= rational_of(1, 20));
        CHECK(Rational(1) - ratio <= rational_of(1, 20));
    }
    SUBCASE("two factors: zero is singular") {
        CHECK_THROWS_AS(nonabelian_reduced_integral(spaces::a1_orbit_power(1, 2)), Error);
    }
    SUBCASE("rank-two product structure factorizes trivially") {
        HamiltonianSpace orbit = build_coadjoint(build_root_system("A1xA1"), {1, 1});
        CHECK(nonabelian_reduced_integral(orbit) == 0);
        CHECK(nonabelian_reduced_integral(spaces::a1_orbit(1)) == 0);
    }
    SUBCASE("missing structure") {
        CHECK_THROWS_AS(nonabelian_reduced_integral(spaces::cp1()), Error);
    }
}
