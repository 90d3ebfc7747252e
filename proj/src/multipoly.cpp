#include "equiloc/multipoly.hpp"

#include <algorithm>

namespace equiloc {

MultiPoly MultiPoly::constant(int rank, const Rational& c) {
    MultiPoly p(rank);
    p.add_term(IntVec(rank, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int rank, const IntVec& exp, const Rational& c) {
    if (static_cast<int>(exp.size()) != rank)
        throw rank_mismatch("monomial exponent has wrong rank");
    MultiPoly p(rank);
    p.add_term(exp, c);
    return p;
}

MultiPoly MultiPoly::linear_form(const IntVec& alpha) {
    MultiPoly p(static_cast<int>(alpha.size()));
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        IntVec e(alpha.size(), 0);
        e[i] = 1;
        p.add_term(e, rational_of(alpha[i]));
    }
    return p;
}

long long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    long long d = 0;
    for (long long c : terms_.rbegin()->first) d += c;
    return d;
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(IntVec(rank_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const IntVec& exp, const Rational& c) {
    if (static_cast<int>(exp.size()) != rank_)
        throw rank_mismatch("term exponent has wrong rank");
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (rank_ != o.rank_) throw rank_mismatch("adding polynomials of different rank");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (rank_ != o.rank_) throw rank_mismatch("subtracting polynomials of different rank");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r(*this);
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r(*this);
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (rank_ != o.rank_) throw rank_mismatch("multiplying polynomials of different rank");
    MultiPoly r(rank_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            IntVec e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(rank_);
    if (c == 0) return r;
    for (const auto& [e, q] : terms_) r.terms_.emplace(e, q * c);
    return r;
}

Rational MultiPoly::evaluate(const RatVec& x) const {
    if (static_cast<int>(x.size()) != rank_) throw rank_mismatch("evaluation point has wrong rank");
    Rational s(0);
    for (const auto& [e, c] : terms_) {
        Rational t(c);
        for (int i = 0; i < rank_; ++i)
            for (long long k = 0; k < e[i]; ++k) t *= x[i];
        s += t;
    }
    return s;
}

Rational MultiPoly::evaluate_homogeneous(long long d, const IntVec& x) const {
    Rational s(0);
    for (const auto& [e, c] : terms_) {
        long long deg = 0;
        for (long long k : e) deg += k;
        if (deg != d) continue;
        Rational t(c);
        for (int i = 0; i < rank_; ++i)
            for (long long k = 0; k < e[i]; ++k) t *= rational_of(x[i]);
        s += t;
    }
    return s;
}

MultiPoly MultiPoly::homogeneous_component(long long d) const {
    MultiPoly r(rank_);
    for (const auto& [e, c] : terms_) {
        long long deg = 0;
        for (long long k : e) deg += k;
        if (deg == d) r.terms_.emplace(e, c);
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(rank_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        IntVec f(e);
        --f[var];
        r.add_term(f, c * rational_of(e[var]));
    }
    return r;
}

MultiPoly MultiPoly::antiderivative(int var) const {
    MultiPoly r(rank_);
    for (const auto& [e, c] : terms_) {
        IntVec f(e);
        ++f[var];
        r.add_term(f, c / rational_of(f[var]));
    }
    return r;
}

MultiPoly MultiPoly::substitute_var(int var, const MultiPoly& g) const {
    MultiPoly r(rank_);
    for (const auto& [e, c] : terms_) {
        IntVec f(e);
        long long k = f[var];
        f[var] = 0;
        MultiPoly t = MultiPoly::monomial(rank_, f, c);
        for (long long i = 0; i < k; ++i) t = t * g;
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::shift(const RatVec& c) const {
    MultiPoly r = *this;
    for (int i = 0; i < rank_; ++i) {
        if (c[i] == 0) continue;
        IntVec e(rank_, 0);
        e[i] = 1;
        MultiPoly g = MultiPoly::monomial(rank_, e, Rational(1));
        g.add_term(IntVec(rank_, 0), -c[i]);
        r = r.substitute_var(i, g);
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divided_by_linear(const IntVec& alpha) const {
    if (static_cast<int>(alpha.size()) != rank_)
        throw rank_mismatch("divisor has wrong rank");
    int pivot = -1;
    for (int i = 0; i < rank_; ++i)
        if (alpha[i] != 0) { pivot = i; break; }
    if (pivot < 0) throw invalid_parameter("division by the zero form");

    // Long division treating X_pivot as the main variable. The remainder is
    // free of X_pivot, so divisibility is equivalent to a zero remainder.
    MultiPoly rem = *this;
    MultiPoly quot(rank_);
    Rational lead = rational_of(alpha[pivot]);
    while (true) {
        // highest X_pivot-degree term group
        const IntVec* best = nullptr;
        for (const auto& [e, c] : rem.terms_)
            if (e[pivot] > 0 && (!best || e[pivot] > (*best)[pivot] ||
                                 (e[pivot] == (*best)[pivot] && GradedLexLess{}(*best, e))))
                best = &e;
        if (!best) break;
        IntVec e(*best);
        Rational c = rem.terms_.at(e) / lead;
        IntVec f(e);
        --f[pivot];
        quot.add_term(f, c);
        MultiPoly sub = MultiPoly::monomial(rank_, f, c) * MultiPoly::linear_form(alpha);
        rem -= sub;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

MultiPoly MultiPoly::apply_as_differential_operator(const MultiPoly& p) const {
    if (rank_ != p.rank()) throw rank_mismatch("operator and operand rank differ");
    MultiPoly out(rank_);
    for (const auto& [e, c] : terms_) {
        MultiPoly d = p;
        for (int i = 0; i < rank_ && !d.is_zero(); ++i)
            for (long long k = 0; k < e[i] && !d.is_zero(); ++k) d = d.derivative(i);
        out += d * c;
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (int i = 0; i < rank_; ++i) {
            long long k = it->first[i];
            if (k == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(i + 1);
            if (k > 1) mono += "^" + std::to_string(k);
        }
        if (mono.empty()) {
            s += equiloc::to_string(it->second);
        } else if (it->second == 1) {
            s += mono;
        } else if (it->second == -1) {
            s += "-" + mono;
        } else {
            s += equiloc::to_string(it->second) + "*" + mono;
        }
    }
    return s;
}

} // namespace equiloc
