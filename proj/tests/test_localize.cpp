#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equiloc/localize.hpp"
#include "oracles.hpp"
#include "spaces.hpp"

using namespace equiloc;

namespace {

// closed degree-d class: the restriction of (-<Phi,X>)^d to the fixed points
EquivariantClass moment_power(const HamiltonianSpace& space, int d) {
    EquivariantClass c;
    c.include_symplectic_exponential = false;
    for (const auto& p : space.points) {
        IntVec mu;
        for (const auto& m : p.moment) {
            REQUIRE(m.get_den() == 1);
            mu.push_back(m.get_num().get_si());
        }
        MultiPoly val = MultiPoly::constant(space.rank, Rational(1));
        for (int i = 0; i < d; ++i) val = val * MultiPoly::linear_form(mu) * Rational(-1);
        c.values.emplace(p.label, val);
    }
    return c;
}

} // namespace

TEST_CASE("localization of the unit class vanishes on positive-dimensional spaces") {
    CHECK(abbv_integrate_polynomial(build_toric(spaces::triangle(), 1),
                                    EquivariantClass::one(build_toric(spaces::triangle(), 1), false))
              .is_zero());
}

TEST_CASE("localization of low-degree classes vanishes") {
    std::vector<HamiltonianSpace> list;
    list.push_back(build_toric(spaces::triangle(), 1));
    list.push_back(build_toric(spaces::hirzebruch(), 2));
    list.push_back(build_coadjoint(build_root_system("A2"), {1, 1}));
    list.push_back(spaces::a1_orbit_power(1, 3));
    for (const auto& s : list)
        for (int d = 0; d < s.half_dim; ++d)
            CHECK(abbv_integrate_polynomial(s, moment_power(s, d)).is_zero());
}

TEST_CASE("degree-n localization of the interval") {
    HamiltonianSpace cp1 = spaces::cp1();
    MultiPoly val = abbv_integrate_polynomial(cp1, moment_power(cp1, 1));
    // the moment integral of the interval [0,1] up to the orientation factor
    CHECK(val == MultiPoly::constant(1, Rational(1)));
}

TEST_CASE("localization over a point is the identity") {
    HamiltonianSpace pt;
    pt.rank = 2;
    pt.half_dim = 0;
    pt.points.push_back({"p", {Rational(0), Rational(0)}, {}, {0, 0}});
    EquivariantClass c;
    c.include_symplectic_exponential = false;
    MultiPoly q = MultiPoly::linear_form({3, -2}) * MultiPoly::linear_form({1, 1});
    c.values.emplace("p", q);
    CHECK(abbv_integrate_polynomial(pt, c) == q);
}

TEST_CASE("dh fourier terms") {
    SUBCASE("interval") {
        auto terms = dh_fourier(spaces::cp1());
        REQUIRE(terms.size() == 2);
        CHECK(terms[0].exponent == RatVec{Rational(0)});
        CHECK(terms[0].coeff == RatFun::quotient(MultiPoly::constant(1, Rational(1)), {{1}}));
        CHECK(terms[1].exponent == RatVec{Rational(1)});
        CHECK(terms[1].coeff == RatFun::quotient(MultiPoly::constant(1, Rational(1)), {{-1}}));
    }
    SUBCASE("rank-one orbit keeps its root denominators") {
        auto terms = dh_fourier(spaces::a1_orbit(1));
        REQUIRE(terms.size() == 2);
        for (const auto& t : terms) {
            REQUIRE(t.coeff.denominator_factors().size() == 1);
            CHECK(t.coeff.denominator_factors().begin()->first == IntVec{1});
            // the content 2 of the root is absorbed into the numerator
            Rational c = t.coeff.numerator().constant_term();
            CHECK((c == rational_of(1, 2) || c == rational_of(-1, 2)));
        }
    }
    SUBCASE("products multiply termwise") {
        HamiltonianSpace cp1 = spaces::cp1();
        auto factor = dh_fourier(cp1);
        auto prod = dh_fourier(product(cp1, cp1));
        REQUIRE(prod.size() == factor.size() * factor.size());
        size_t idx = 0;
        for (const auto& ta : factor)
            for (const auto& tb : factor) {
                CHECK(prod[idx].exponent == add_vectors(ta.exponent, tb.exponent));
                CHECK(prod[idx].coeff == ta.coeff * tb.coeff);
                ++idx;
            }
    }
    SUBCASE("stable under subtorus restriction") {
        HamiltonianSpace cp2 = build_toric(spaces::triangle(), 1);
        std::vector<IntVec> iota{{1, 2}};
        auto restricted = dh_fourier(restrict_subtorus(cp2, iota));
        auto full = dh_fourier(cp2);
        REQUIRE(restricted.size() == full.size());
        for (size_t i = 0; i < full.size(); ++i) {
            // map the rank-2 term by hand
            RatVec mu{full[i].exponent[0] + 2 * full[i].exponent[1]};
            CHECK(restricted[i].exponent == mu);
        }
    }
}

TEST_CASE("symplectic volumes of toric builds") {
    for (long long k : {1, 2, 3}) {
        CHECK(symplectic_volume(build_toric(spaces::segment(0, 1), k)) == rational_of(k));
        CHECK(symplectic_volume(build_toric(spaces::triangle(), k)) == rational_of(k * k, 2));
        CHECK(symplectic_volume(build_toric(spaces::square(), k)) == rational_of(k * k));
        CHECK(symplectic_volume(build_toric(spaces::hirzebruch(), k)) ==
              rational_of(3 * k * k, 2));
    }
    // shoelace cross-check of the level-1 polygon areas
    CHECK(oracles::polygon_area({{rational_of(0), rational_of(0)},
                                 {rational_of(1), rational_of(0)},
                                 {rational_of(0), rational_of(1)}}) == rational_of(1, 2));
    CHECK(oracles::polygon_area({{rational_of(0), rational_of(0)},
                                 {rational_of(2), rational_of(0)},
                                 {rational_of(1), rational_of(1)},
                                 {rational_of(0), rational_of(1)}}) == rational_of(3, 2));
}

TEST_CASE("symplectic volumes of orbits") {
    for (long long n : {1, 2, 3}) CHECK(symplectic_volume(spaces::a1_orbit(n)) == rational_of(2 * n));
}

TEST_CASE("volumes multiply over products") {
    HamiltonianSpace cp1 = spaces::cp1();
    CHECK(symplectic_volume(product(cp1, cp1)) == 1);
    HamiltonianSpace oo = spaces::a1_orbit_power(1, 2);
    CHECK(symplectic_volume(oo) == 4);
    CHECK(symplectic_volume(spaces::a1_orbit_power(1, 3)) == 8);
}

TEST_CASE("volume positivity across the corpus") {
    std::vector<HamiltonianSpace> list;
    list.push_back(build_toric(spaces::hirzebruch(), 3));
    list.push_back(build_coadjoint(build_root_system("A2"), {1, 1}));
    list.push_back(build_coadjoint(build_root_system("B2"), {1, 1}));
    list.push_back(build_coadjoint(build_root_system("A1xA1"), {1, 1}));
    for (const auto& s : list) CHECK(symplectic_volume(s) > 0);
}
