#pragma once

#include <optional>
#include <vector>

#include "equiloc/rational.hpp"

namespace equiloc {

using RatMat = std::vector<RatVec>;

inline Rational det(RatMat m) {
    const size_t n = m.size();
    Rational d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) { std::swap(m[piv], m[col]); d = -d; }
        d *= m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return d;
}

inline long long det_int(const std::vector<IntVec>& m) {
    RatMat r;
    for (const auto& row : m) r.push_back(to_rat_vec(row));
    Rational d = det(r);
    return static_cast<long long>(d.get_num().get_si());
}

// Solves A x = b for square A; nullopt when A is singular.
inline std::optional<RatVec> solve(RatMat a, RatVec b) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    RatVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Incremental row reducer used to assemble full-rank interpolation systems.
class RowBasis {
public:
    explicit RowBasis(size_t cols) : cols_(cols) {}

    size_t rank() const { return rows_.size(); }

    // Returns true when the row enlarged the span (and keeps it).
    bool try_add(RatVec row, Rational rhs) {
        reduce(row, rhs);
        size_t lead = leading(row);
        if (lead == cols_) return false;
        rows_.push_back(std::move(row));
        rhss_.push_back(std::move(rhs));
        return true;
    }

    // Checks consistency of an extra equation against the current span;
    // valid only once rank == cols.
    bool consistent(RatVec row, Rational rhs) const {
        reduce(row, rhs);
        for (const auto& c : row)
            if (c != 0) return true; // not in span: cannot contradict
        return rhs == 0;
    }

    std::optional<RatVec> solve_full() const {
        if (rank() != cols_) return std::nullopt;
        RatMat a = rows_;
        RatVec b = rhss_;
        return equiloc::solve(std::move(a), std::move(b));
    }

private:
    size_t leading(const RatVec& row) const {
        for (size_t i = 0; i < cols_; ++i)
            if (row[i] != 0) return i;
        return cols_;
    }

    void reduce(RatVec& row, Rational& rhs) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            size_t lead = leading(rows_[k]);
            if (lead == cols_ || row[lead] == 0) continue;
            Rational f = row[lead] / rows_[k][lead];
            for (size_t j = 0; j < cols_; ++j) row[j] -= f * rows_[k][j];
            rhs -= f * rhss_[k];
        }
    }

    size_t cols_;
    RatMat rows_;
    RatVec rhss_;
};

// Deterministic enumeration of nonzero lattice vectors, graded by max-norm
// shells and lexicographic inside a shell. Used wherever a "first generic
// vector" has to be reproducible.
class LatticeEnumerator {
public:
    explicit LatticeEnumerator(int rank) : rank_(rank), shell_(0) {}

    IntVec next() {
        while (true) {
            if (queue_.empty()) fill_shell();
            IntVec v = queue_.front();
            queue_.erase(queue_.begin());
            if (!is_zero(v)) return v;
        }
    }

private:
    void fill_shell() {
        ++shell_;
        IntVec v(rank_, -shell_);
        while (true) {
            long long mx = 0;
            for (long long c : v) mx = std::max(mx, c < 0 ? -c : c);
            if (mx == shell_) queue_.push_back(v);
            int i = rank_ - 1;
            while (i >= 0 && v[i] == shell_) { v[i] = -shell_; --i; }
            if (i < 0) break;
            ++v[i];
        }
    }

    int rank_;
    long long shell_;
    std::vector<IntVec> queue_;
};

} // namespace equiloc
