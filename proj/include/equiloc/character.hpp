#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equiloc/multipoly.hpp"

namespace equiloc {

// Axis-aligned box of lattice weights, bounds inclusive.
struct Box {
    IntVec lo, hi;

    int rank() const { return static_cast<int>(lo.size()); }

    bool contains(const IntVec& w) const {
        for (size_t i = 0; i < lo.size(); ++i)
            if (w[i] < lo[i] || w[i] > hi[i]) return false;
        return true;
    }

    // min of <w, beta> over the box
    long long min_pairing(const IntVec& beta) const {
        long long s = 0;
        for (size_t i = 0; i < lo.size(); ++i)
            s += beta[i] > 0 ? lo[i] * beta[i] : hi[i] * beta[i];
        return s;
    }

    static Box cube(int rank, long long radius) {
        return Box{IntVec(rank, -radius), IntVec(rank, radius)};
    }

    Box inflated(long long by) const {
        Box b = *this;
        for (auto& c : b.lo) c -= by;
        for (auto& c : b.hi) c += by;
        return b;
    }
};

// Finitely supported (or window-truncated) integer multiplicity function on
// the weight lattice. When a window is present the multiplicities are
// certified only inside it and every stored weight lies inside it.
class Character {
public:
    using MultMap = std::map<IntVec, Int, GradedLexLess>;

    explicit Character(int rank = 0) : rank_(rank) {}
    Character(int rank, Box window) : rank_(rank), window_(std::move(window)) {}

    int rank() const { return rank_; }
    const MultMap& multiplicities() const { return mult_; }
    const std::optional<Box>& window() const { return window_; }

    bool is_zero() const { return mult_.empty(); }
    Int multiplicity(const IntVec& w) const {
        auto it = mult_.find(w);
        return it == mult_.end() ? Int(0) : it->second;
    }

    // Drops additions outside the window (they are uncertified there).
    void add(const IntVec& w, const Int& m);

    Character& operator+=(const Character& o);
    Character operator+(const Character& o) const;
    Character operator*(const Int& c) const;
    Character operator-(const Character& o) const;

    // Convolution product: the product of characters in the group ring.
    Character product(const Character& o) const;

    // w -> -w (restriction of the dual).
    Character weight_negated() const;

    Character truncated(const Box& window) const;

    // Sum of all multiplicities (the virtual dimension for finite support).
    Int total() const;

    bool same_multiplicities(const Character& o) const { return mult_ == o.mult_; }
    bool operator==(const Character& o) const { return rank_ == o.rank_ && mult_ == o.mult_; }

    std::string to_string() const;

private:
    int rank_;
    MultMap mult_;
    std::optional<Box> window_;
};

// Window truncation of the unique formal expansion of
//   t^apex * prod_i (1 - t^{alpha_i})^{-1}
// whose support is bounded in the -beta direction: a factor with
// <alpha,beta> < 0 expands as sum_{j>=0} t^{j alpha}, a factor with
// <alpha,beta> > 0 expands as -sum_{j>=1} t^{-j alpha}. Exact inside the
// window; the internal order is chosen from the window and weight pairings.
Character geometric_expand(const IntVec& apex, const std::vector<IntVec>& weights,
                           const IntVec& beta, const Box& window);

} // namespace equiloc
