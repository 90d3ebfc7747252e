#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "equiloc/character.hpp"
#include "equiloc/ratfun.hpp"

using namespace equiloc;

namespace {

MultiPoly one(int rank) { return MultiPoly::constant(rank, Rational(1)); }

RatFun inv(const std::vector<IntVec>& weights) {
    return RatFun::quotient(one(static_cast<int>(weights.front().size())), weights);
}

ExpRatTerm term(RatVec mu, RatFun f) { return ExpRatTerm{std::move(mu), std::move(f)}; }

// the two fixed-point summands of the interval [0,k]
std::vector<ExpRatTerm> interval_terms(long long k) {
    return {term({rational_of(0)}, inv({{1}})), term({rational_of(k)}, inv({{-1}}))};
}

} // namespace

TEST_CASE("rational serialization") {
    CHECK(to_string(rational_of(3, 6)) == "1/2");
    CHECK(to_string(rational_of(-4, 2)) == "-2");
    CHECK(to_string(parse_rational("7/3")) == "7/3");
    CHECK_THROWS_AS(parse_rational("1/"), Error);
}

TEST_CASE("multipoly arithmetic and printing") {
    MultiPoly x = MultiPoly::linear_form({1, 0});
    MultiPoly y = MultiPoly::linear_form({0, 1});
    MultiPoly p = x * x - y * y;
    CHECK(p.to_string() == "X1^2 + -X2^2");
    CHECK(p.evaluate({rational_of(3), rational_of(2)}) == 5);
    CHECK(p.total_degree() == 2);
    CHECK((p - p).is_zero());

    MultiPoly q = (x + y) * (x + y);
    CHECK(q.homogeneous_component(2) == q);
    CHECK(q.homogeneous_component(1).is_zero());

    // shift: X -> X - c
    MultiPoly s = x.shift({rational_of(2), rational_of(0)});
    CHECK(s.evaluate({rational_of(5), rational_of(0)}) == 3);
}

TEST_CASE("exact division by a linear form") {
    MultiPoly x = MultiPoly::linear_form({1, 0});
    MultiPoly y = MultiPoly::linear_form({0, 1});
    MultiPoly p = x * x - y * y;
    auto q = p.divided_by_linear({1, -1});
    REQUIRE(q.has_value());
    CHECK(*q == x + y);
    CHECK_FALSE((x * x + y).divided_by_linear({1, -1}).has_value());
}

TEST_CASE("ratfun sum: additive inverse pair") {
    RatFun a = inv({{1}});
    RatFun b = inv({{-1}});
    CHECK(ratfun_sum_normalize({a, b}).is_zero());
}

TEST_CASE("ratfun sum: two-variable partial fractions") {
    // 1/(X(X-Y)) + 1/(Y(Y-X)) = -1/(XY): the partial-fraction oracle
    // 1/(X(X-Y)) = -1/(XY) + 1/(Y(X-Y)), checked numerically at (2,1),
    // and the two-variable instance of the vertex-cone vanishing identity.
    RatFun a = inv({{1, 0}, {1, -1}});
    RatFun b = inv({{0, 1}, {-1, 1}});
    RatFun sum = ratfun_sum_normalize({a, b});
    RatFun expected = inv({{1, 0}, {0, 1}}) * Rational(-1);
    CHECK(sum == expected);
    CHECK(sum.numerator().evaluate({rational_of(2), rational_of(1)}) == rational_of(-1, 2) * 2 * 1 * 1);
}

TEST_CASE("ratfun sum: symmetric cancellation to a constant") {
    // X/(X-Y) + Y/(Y-X) = 1
    RatFun a = RatFun::quotient(MultiPoly::linear_form({1, 0}), {{1, -1}});
    RatFun b = RatFun::quotient(MultiPoly::linear_form({0, 1}), {{-1, 1}});
    RatFun sum = ratfun_sum_normalize({a, b});
    CHECK(as_polynomial(sum) == one(2));
}

TEST_CASE("ratfun sum is permutation invariant") {
    std::vector<RatFun> terms = {
        inv({{1, 0}, {1, -1}}),
        inv({{0, 1}, {-1, 1}}),
        RatFun::quotient(MultiPoly::linear_form({2, 1}), {{1, 0}, {0, 1}, {1, 1}}),
    };
    RatFun reference = ratfun_sum_normalize(terms);
    std::vector<size_t> idx{0, 1, 2};
    while (std::next_permutation(idx.begin(), idx.end())) {
        std::vector<RatFun> shuffled;
        for (size_t i : idx) shuffled.push_back(terms[i]);
        CHECK(ratfun_sum_normalize(shuffled) == reference);
    }
}

TEST_CASE("as_polynomial") {
    MultiPoly x = MultiPoly::linear_form({1, 0});
    MultiPoly y = MultiPoly::linear_form({0, 1});
    RatFun f = RatFun::quotient(x * x - y * y, {{1, -1}});
    CHECK(as_polynomial(f) == x + y);
    CHECK_THROWS_AS(as_polynomial(inv({{1}})), Error);
}

TEST_CASE("projective plane Euler inverses sum to zero") {
    // the three vertex cones of the standard triangle
    RatFun p0 = inv({{1, 0}, {0, 1}});
    RatFun p1 = inv({{-1, 0}, {-1, 1}});
    RatFun p2 = inv({{0, -1}, {1, -1}});
    RatFun sum = ratfun_sum_normalize({p0, p1, p2});
    CHECK(sum.is_zero());
    CHECK(as_polynomial(sum).is_zero());
}

TEST_CASE("taylor coefficient of interval data") {
    // degree-0 coefficient carries the orientation factor (-1)^n; the
    // interval length is the independent oracle.
    for (long long k : {1, 2, 3}) {
        MultiPoly c0 = taylor_coefficient(interval_terms(k), 0, 1);
        CHECK(c0 == MultiPoly::constant(1, rational_of(-k)));
    }
}

TEST_CASE("taylor coefficient flags genuine poles") {
    std::vector<ExpRatTerm> bad = {term({rational_of(0)}, inv({{1}}))};
    CHECK_THROWS_AS(taylor_coefficient(bad, 0, 1), Error);
}

TEST_CASE("taylor coefficient reconstructs multivariate parts") {
    // triangle fixed-point data; degree-1 part is the moment of inertia
    // integral (1/6)(X1+X2), computed against the direct area integrals
    // int_T x dA = int_T y dA = 1/6 over the standard triangle.
    std::vector<ExpRatTerm> tri = {
        term({rational_of(0), rational_of(0)}, inv({{1, 0}, {0, 1}})),
        term({rational_of(1), rational_of(0)}, inv({{-1, 0}, {-1, 1}})),
        term({rational_of(0), rational_of(1)}, inv({{0, -1}, {1, -1}})),
    };
    MultiPoly c0 = taylor_coefficient(tri, 0, 2);
    CHECK(c0 == MultiPoly::constant(2, rational_of(1, 2)));
    MultiPoly c1 = taylor_coefficient(tri, 1, 2);
    MultiPoly expected = MultiPoly::linear_form({1, 1}) * rational_of(1, 6);
    CHECK(c1 == expected);
}

TEST_CASE("geometric expansion branches") {
    Box w = Box::cube(1, 3);

    SUBCASE("negative pairing: plain geometric series") {
        Character c = geometric_expand({0}, {{-1}}, {1}, w);
        for (long long j = 0; j >= -3; --j) CHECK(c.multiplicity({j}) == 1);
        CHECK(c.multiplicity({1}) == 0);
    }
    SUBCASE("positive pairing: flipped branch with sign") {
        Character c = geometric_expand({0}, {{1}}, {1}, w);
        for (long long j = -1; j >= -3; --j) CHECK(c.multiplicity({j}) == -1);
        CHECK(c.multiplicity({0}) == 0);
    }
    SUBCASE("empty product") {
        Character c = geometric_expand({0}, {}, {1}, w);
        CHECK(c.multiplicity({0}) == 1);
        CHECK(c.total() == 1);
    }
    SUBCASE("orthogonal weight is rejected") {
        CHECK_THROWS_AS(geometric_expand({0, 0}, {{1, 0}}, {0, 1}, Box::cube(2, 2)), Error);
    }
}

TEST_CASE("polarization depends only on the sign pattern") {
    Box w = Box::cube(2, 4);
    std::vector<IntVec> weights{{1, 0}, {-1, 2}, {0, -1}};
    Character a = geometric_expand({1, 1}, weights, {3, 1}, w);
    Character b = geometric_expand({1, 1}, weights, {6, 2}, w);
    CHECK(a.same_multiplicities(b));
}

TEST_CASE("interval index character is window stable") {
    for (long long k : {1, 3}) {
        Box small = Box{{-2}, {k + 2}};
        Box big = Box{{-7}, {k + 7}};
        Character cs = geometric_expand({0}, {{1}}, {1}, small) +
                       geometric_expand({k}, {{-1}}, {1}, small);
        Character cb = geometric_expand({0}, {{1}}, {1}, big) +
                       geometric_expand({k}, {{-1}}, {1}, big);
        for (long long j = small.lo[0]; j <= small.hi[0]; ++j) {
            CHECK(cs.multiplicity({j}) == cb.multiplicity({j}));
            bool inside = 0 <= j && j <= k;
            CHECK(cs.multiplicity({j}) == (inside ? 1 : 0));
        }
    }
}
