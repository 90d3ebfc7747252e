#pragma once

// Independent oracles used by the test and acceptance suites. Everything in
// here is deliberately written against the plain definitions (direct
// integration, explicit recursions, lattice counting) and never calls the
// fixed-point machinery it is checking.

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "equiloc/multipoly.hpp"

namespace oracles {

using equiloc::Int;
using equiloc::MultiPoly;
using equiloc::RatVec;
using equiloc::Rational;
using equiloc::rational_of;

// Piecewise polynomial of one variable with compact support.
struct Pw1 {
    std::vector<Rational> breaks;    // sorted, size = pieces.size() + 1
    std::vector<MultiPoly> pieces;   // rank-1 polynomials; zero outside

    Rational eval(const Rational& x) const {
        for (size_t i = 0; i + 1 < breaks.size(); ++i)
            if (breaks[i] < x && x < breaks[i + 1]) return pieces[i].evaluate({x});
        return Rational(0);
    }

    Rational mass() const {
        Rational total(0);
        for (size_t i = 0; i < pieces.size(); ++i) {
            MultiPoly anti = pieces[i].antiderivative(0);
            total += anti.evaluate({breaks[i + 1]}) - anti.evaluate({breaks[i]});
        }
        return total;
    }
};

inline Pw1 box_density(const Rational& a, const Rational& b, const Rational& height) {
    Pw1 f;
    f.breaks = {a, b};
    f.pieces = {MultiPoly::constant(1, height)};
    return f;
}

// Cumulative integral F(x) = int_{-inf}^x f, one polynomial per piece plus
// the constant tails.
inline std::vector<MultiPoly> cumulative(const Pw1& f, Rational& total) {
    std::vector<MultiPoly> cum;
    Rational carried(0);
    for (size_t i = 0; i < f.pieces.size(); ++i) {
        MultiPoly anti = f.pieces[i].antiderivative(0);
        MultiPoly piece = anti + MultiPoly::constant(1, carried - anti.evaluate({f.breaks[i]}));
        cum.push_back(piece);
        carried = piece.evaluate({f.breaks[i + 1]});
    }
    total = carried;
    return cum;
}

// Exact convolution with the box height*1_{[a,b]}:
//   (f * box)(x) = height * (F(x-a) - F(x-b)).
inline Pw1 convolve_box(const Pw1& f, const Rational& a, const Rational& b,
                        const Rational& height = Rational(1)) {
    Rational total(0);
    std::vector<MultiPoly> cum = cumulative(f, total);

    auto F_piece = [&](const Rational& point) -> MultiPoly {
        // polynomial representing F near the given evaluation point
        if (point <= f.breaks.front()) return MultiPoly(1);
        if (point >= f.breaks.back()) return MultiPoly::constant(1, total);
        for (size_t i = 0; i + 1 < f.breaks.size(); ++i)
            if (f.breaks[i] <= point && point < f.breaks[i + 1]) return cum[i];
        return MultiPoly::constant(1, total);
    };

    std::vector<Rational> breaks;
    for (const auto& br : f.breaks) {
        breaks.push_back(br + a);
        breaks.push_back(br + b);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    Pw1 out;
    out.breaks = breaks;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        Rational mid = (breaks[i] + breaks[i + 1]) / 2;
        MultiPoly left = F_piece(mid - a).shift({a});   // F(x-a)
        MultiPoly right = F_piece(mid - b).shift({b});  // F(x-b)
        out.pieces.push_back((left - right) * height);
    }
    return out;
}

// Signed area of a convex polygon with vertices in counterclockwise order.
inline Rational polygon_area(const std::vector<RatVec>& verts) {
    Rational twice(0);
    for (size_t i = 0; i < verts.size(); ++i) {
        const RatVec& p = verts[i];
        const RatVec& q = verts[(i + 1) % verts.size()];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return twice / 2;
}

// Invariant dimension [V_k^{(x) m}]^{SU(2)} by the Clebsch-Gordan recursion
// on irreducible multiplicity vectors.
inline Int sl2_tensor_power_invariants(long long k, int power) {
    std::vector<Int> mult(static_cast<size_t>(k * power) + 2, Int(0));
    mult[static_cast<size_t>(k)] = 1;
    for (int step = 1; step < power; ++step) {
        std::vector<Int> next(mult.size(), Int(0));
        for (size_t j = 0; j < mult.size(); ++j) {
            if (mult[j] == 0) continue;
            long long jj = static_cast<long long>(j);
            for (long long c = std::abs(jj - k); c <= jj + k; c += 2)
                if (c < static_cast<long long>(next.size())) next[static_cast<size_t>(c)] += mult[j];
        }
        mult.swap(next);
    }
    return mult[0];
}

// Exact interpolating polynomial through (x_i, y_i); returns coefficients in
// the monomial basis, constant first.
inline std::vector<Rational> lagrange_fit(const std::vector<Rational>& xs,
                                          const std::vector<Rational>& ys) {
    const size_t n = xs.size();
    std::vector<Rational> coeffs(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (x - x_j)/(x_i - x_j)
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= xs[i] - xs[j];
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * xs[j];
            }
            basis.swap(next);
        }
        for (size_t d = 0; d < basis.size(); ++d) coeffs[d] += basis[d] * ys[i] / denom;
    }
    return coeffs;
}

} // namespace oracles
