#include "equiloc/ratfun.hpp"

#include <algorithm>
#include <functional>

#include "equiloc/linalg.hpp"

namespace equiloc {

namespace {

// Splits alpha = t * p with p primitive and sign-canonical; returns (p, t).
std::pair<IntVec, long long> canonical_direction(const IntVec& alpha) {
    if (is_zero(alpha)) throw invalid_parameter("zero linear form in a denominator");
    long long g = content(alpha);
    IntVec p = primitive_part(alpha);
    long long sign = 1;
    for (long long c : p) {
        if (c != 0) {
            if (c < 0) { p = negated(p); sign = -1; }
            break;
        }
    }
    return {p, sign * g};
}

} // namespace

void RatFun::push_factor(const IntVec& alpha, int mult) {
    auto [dir, scale] = canonical_direction(alpha);
    denom_[dir] += mult;
    Rational s = pow_rational(rational_of(scale), static_cast<unsigned>(mult));
    num_ = num_ * (Rational(1) / s);
}

RatFun RatFun::quotient(MultiPoly num, const std::vector<IntVec>& weights) {
    RatFun f(std::move(num));
    for (const auto& w : weights) {
        if (static_cast<int>(w.size()) != f.rank())
            throw rank_mismatch("denominator form has wrong rank");
        f.push_factor(w, 1);
    }
    f.normalize();
    return f;
}

RatFun RatFun::operator*(const RatFun& o) const {
    if (rank() != o.rank()) throw rank_mismatch("multiplying rational functions of different rank");
    RatFun r(num_ * o.num_);
    r.denom_ = denom_;
    for (const auto& [d, m] : o.denom_) r.denom_[d] += m;
    r.normalize();
    return r;
}

RatFun RatFun::operator*(const Rational& c) const {
    RatFun r(num_ * c);
    if (!r.is_zero()) r.denom_ = denom_;
    return r;
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        denom_.clear();
        return;
    }
    for (auto it = denom_.begin(); it != denom_.end();) {
        while (it->second > 0) {
            auto q = num_.divided_by_linear(it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        if (it->second == 0)
            it = denom_.erase(it);
        else
            ++it;
    }
}

RatFun ratfun_sum_normalize(const std::vector<RatFun>& terms) {
    if (terms.empty()) return RatFun(0);
    int rank = terms.front().rank();
    for (const auto& t : terms)
        if (t.rank() != rank) throw rank_mismatch("summing rational functions of different rank");

    RatFun::DenomMap lcm;
    for (const auto& t : terms)
        for (const auto& [d, m] : t.denominator_factors())
            lcm[d] = std::max(lcm[d], m);

    MultiPoly num(rank);
    for (const auto& t : terms) {
        MultiPoly part = t.numerator();
        for (const auto& [d, m] : lcm) {
            auto it = t.denominator_factors().find(d);
            int have = it == t.denominator_factors().end() ? 0 : it->second;
            for (int k = have; k < m; ++k) part = part * MultiPoly::linear_form(d);
        }
        num += part;
    }

    RatFun out(std::move(num));
    if (!out.is_zero()) out.denom_ = lcm;
    out.normalize();
    return out;
}

MultiPoly as_polynomial(const RatFun& f) {
    if (!f.denominator_factors().empty())
        throw not_polynomial("denominator factors remain after normalization: " + f.to_string());
    return f.numerator();
}

std::string RatFun::to_string() const {
    std::string s = "(" + num_.to_string() + ")";
    if (denom_.empty()) return s;
    s += " / ";
    for (const auto& [d, m] : denom_) {
        s += "(" + MultiPoly::linear_form(d).to_string() + ")";
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
}

namespace {

// Laurent coefficients in s of e^{c s} * N(sY) / (v * s^D), for -D <= m <= top.
void line_series(const ExpRatTerm& term, const IntVec& y, long long top,
                 std::map<long long, Rational>& acc) {
    long long dtot = 0;
    Rational denomval(1);
    for (const auto& [d, m] : term.coeff.denominator_factors()) {
        long long p = dot(d, y);
        if (p == 0) throw invalid_parameter("sample line hits a denominator hyperplane");
        dtot += m;
        denomval *= pow_rational(rational_of(p), static_cast<unsigned>(m));
    }
    Rational c = dot(term.exponent, y);

    const MultiPoly& num = term.coeff.numerator();
    long long ndeg = std::max<long long>(num.total_degree(), 0);
    std::vector<Rational> ncoef;
    for (long long k = 0; k <= ndeg; ++k) ncoef.push_back(num.evaluate_homogeneous(k, y));

    // exp(c s) up to order top + dtot
    long long order = top + dtot;
    std::vector<Rational> e(static_cast<size_t>(order) + 1, Rational(0));
    e[0] = 1;
    for (long long l = 1; l <= order; ++l) e[l] = e[l - 1] * c / rational_of(l);

    for (long long m = -dtot; m <= top; ++m) {
        Rational s(0);
        for (long long k = 0; k <= ndeg; ++k) {
            long long l = m + dtot - k;
            if (l < 0 || l > order) continue;
            s += ncoef[k] * e[l];
        }
        if (s != 0) acc[m] += s / denomval;
    }
}

std::vector<IntVec> monomials_of_degree(int rank, long long d) {
    std::vector<IntVec> out;
    IntVec e(rank, 0);
    // lexicographic enumeration of compositions of d into rank parts
    std::function<void(int, long long)> rec = [&](int pos, long long left) {
        if (pos == rank - 1) {
            e[pos] = left;
            out.push_back(e);
            return;
        }
        for (long long k = left; k >= 0; --k) {
            e[pos] = k;
            rec(pos + 1, left - k);
        }
    };
    if (rank == 0) return out;
    rec(0, d);
    return out;
}

} // namespace

MultiPoly taylor_coefficient(const std::vector<ExpRatTerm>& terms, long long degree, int rank) {
    if (degree < 0) throw invalid_parameter("negative expansion degree");
    if (rank == 0) {
        // no variables: the sum of the constant numerators if degree == 0
        MultiPoly out(0);
        if (degree == 0)
            for (const auto& t : terms) out += as_polynomial(t.coeff);
        return out;
    }
    for (const auto& t : terms)
        if (t.rank() != rank || static_cast<int>(t.exponent.size()) != rank)
            throw rank_mismatch("expansion terms have mixed rank");

    std::vector<IntVec> denoms;
    for (const auto& t : terms)
        for (const auto& [d, m] : t.coeff.denominator_factors()) denoms.push_back(d);

    auto generic = [&](const IntVec& y) {
        for (const auto& d : denoms)
            if (dot(d, y) == 0) return false;
        return true;
    };

    std::vector<IntVec> monos = monomials_of_degree(rank, degree);
    RowBasis basis(monos.size());
    std::vector<std::pair<RatVec, Rational>> extra;

    LatticeEnumerator lattice(rank);
    int used = 0;
    const int max_samples = 500;
    while (basis.rank() < monos.size() || extra.size() < 3) {
        if (++used > max_samples)
            throw pole_at_zero("could not reconstruct a polynomial coefficient (inconsistent data)");
        IntVec y = lattice.next();
        if (!generic(y)) continue;

        std::map<long long, Rational> series;
        for (const auto& t : terms) line_series(t, y, degree, series);
        for (const auto& [m, c] : series)
            if (m < 0 && c != 0)
                throw pole_at_zero("negative Laurent coefficient s^" + std::to_string(m) +
                                   " along line " + equiloc::to_string(y));
        Rational value(0);
        if (auto it = series.find(degree); it != series.end()) value = it->second;

        RatVec row;
        row.reserve(monos.size());
        for (const auto& e : monos) {
            Rational t(1);
            for (int i = 0; i < rank; ++i)
                for (long long k = 0; k < e[i]; ++k) t *= rational_of(y[i]);
            row.push_back(t);
        }
        if (basis.rank() < monos.size()) {
            if (!basis.try_add(row, value)) extra.emplace_back(std::move(row), value);
        } else {
            extra.emplace_back(std::move(row), value);
        }
    }

    auto coeffs = basis.solve_full();
    if (!coeffs) throw pole_at_zero("singular interpolation system");
    for (const auto& [row, rhs] : extra) {
        Rational lhs(0);
        for (size_t i = 0; i < row.size(); ++i) lhs += row[i] * (*coeffs)[i];
        if (lhs != rhs)
            throw pole_at_zero("expansion coefficient is not polynomial (inconsistent data)");
    }

    MultiPoly out(rank);
    for (size_t i = 0; i < monos.size(); ++i) out.add_term(monos[i], (*coeffs)[i]);
    return out;
}

} // namespace equiloc
