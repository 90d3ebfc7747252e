#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "equiloc/error.hpp"

namespace equiloc {

// Exact scalars. GMP keeps rationals in lowest terms with positive
// denominator, which is exactly the canonical form we serialize.
using Int = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<long long>;     // lattice vectors (weights, exponents)
using RatVec = std::vector<Rational>;      // points of t* (moments, wall offsets)

inline Int int_of(long long v) { return Int(static_cast<long>(v)); }

inline Rational rational_of(long long n, long long d = 1) {
    Rational q(static_cast<long>(n), static_cast<long>(d));
    q.canonicalize();
    return q;
}

// "p/q", with "/q" omitted when q == 1.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw invalid_parameter("bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

inline Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Rational pow_rational(const Rational& q, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}

inline RatVec to_rat_vec(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (long long c : v) r.push_back(rational_of(c));
    return r;
}

inline Rational dot(const RatVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw rank_mismatch("dot of vectors of different rank");
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * rational_of(b[i]);
    return s;
}

inline long long dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw rank_mismatch("dot of vectors of different rank");
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec negated(const IntVec& v) {
    IntVec r(v);
    for (auto& c : r) c = -c;
    return r;
}

inline RatVec negated(const RatVec& v) {
    RatVec r(v);
    for (auto& c : r) c = -c;
    return r;
}

inline IntVec add_vectors(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw rank_mismatch("adding vectors of different rank");
    IntVec r(a);
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline RatVec add_vectors(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw rank_mismatch("adding vectors of different rank");
    RatVec r(a);
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline bool is_zero(const IntVec& v) {
    for (long long c : v) if (c != 0) return false;
    return true;
}

inline bool is_zero(const RatVec& v) {
    for (const auto& c : v) if (c != 0) return false;
    return true;
}

// gcd of the components; 0 for the zero vector.
inline long long content(const IntVec& v) {
    long long g = 0;
    for (long long c : v) g = gcd_ll(g, c);
    return g;
}

inline IntVec primitive_part(const IntVec& v) {
    long long g = content(v);
    if (g == 0) return v;
    IntVec r(v);
    for (auto& c : r) c /= g;
    return r;
}

inline std::string to_string(const IntVec& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

inline std::string to_string(const RatVec& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + "]";
}

} // namespace equiloc
