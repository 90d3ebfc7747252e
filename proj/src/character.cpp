#include "equiloc/character.hpp"

#include <algorithm>

namespace equiloc {

void Character::add(const IntVec& w, const Int& m) {
    if (static_cast<int>(w.size()) != rank_) throw rank_mismatch("weight has wrong rank");
    if (m == 0) return;
    if (window_ && !window_->contains(w)) return;
    auto it = mult_.find(w);
    if (it == mult_.end()) {
        mult_.emplace(w, m);
    } else {
        it->second += m;
        if (it->second == 0) mult_.erase(it);
    }
}

Character& Character::operator+=(const Character& o) {
    if (rank_ != o.rank_) throw rank_mismatch("adding characters of different rank");
    for (const auto& [w, m] : o.mult_) add(w, m);
    return *this;
}

Character Character::operator+(const Character& o) const {
    Character r(*this);
    r += o;
    return r;
}

Character Character::operator*(const Int& c) const {
    Character r(rank_);
    r.window_ = window_;
    if (c == 0) return r;
    for (const auto& [w, m] : mult_) r.mult_.emplace(w, m * c);
    return r;
}

Character Character::operator-(const Character& o) const {
    return *this + o * Int(-1);
}

Character Character::product(const Character& o) const {
    if (rank_ != o.rank_) throw rank_mismatch("multiplying characters of different rank");
    Character r(rank_);
    for (const auto& [wa, ma] : mult_)
        for (const auto& [wb, mb] : o.mult_) r.add(add_vectors(wa, wb), ma * mb);
    return r;
}

Character Character::weight_negated() const {
    Character r(rank_);
    for (const auto& [w, m] : mult_) r.mult_.emplace(negated(w), m);
    return r;
}

Character Character::truncated(const Box& window) const {
    Character r(rank_, window);
    for (const auto& [w, m] : mult_) r.add(w, m);
    return r;
}

Int Character::total() const {
    Int s(0);
    for (const auto& [w, m] : mult_) s += m;
    return s;
}

std::string Character::to_string() const {
    std::string s;
    for (const auto& [w, m] : mult_) {
        if (!s.empty()) s += ", ";
        s += equiloc::to_string(w) + ":" + m.get_str();
    }
    return "{" + s + "}";
}

Character geometric_expand(const IntVec& apex, const std::vector<IntVec>& weights,
                           const IntVec& beta, const Box& window) {
    const int rank = static_cast<int>(apex.size());
    if (window.rank() != rank || static_cast<int>(beta.size()) != rank)
        throw rank_mismatch("apex, beta and window must share a rank");
    for (const auto& a : weights)
        if (dot(a, beta) == 0)
            throw non_generic_polarization("weight " + to_string(a) +
                                           " is orthogonal to beta " + to_string(beta));

    // Every polarized branch step strictly lowers <.,beta>, so partial terms
    // falling below the window's minimal pairing can never come back.
    const long long threshold = window.min_pairing(beta);

    std::map<IntVec, Int, GradedLexLess> acc;
    if (dot(apex, beta) >= threshold) acc.emplace(apex, Int(1));

    for (const auto& a : weights) {
        long long pairing = dot(a, beta);
        IntVec step = pairing < 0 ? a : negated(a);
        long long start = pairing < 0 ? 0 : 1;
        Int coeff = pairing < 0 ? Int(1) : Int(-1);

        std::map<IntVec, Int, GradedLexLess> next;
        for (const auto& [e, m] : acc) {
            IntVec w = e;
            for (long long j = 0; j < start; ++j) w = add_vectors(w, step);
            while (dot(w, beta) >= threshold) {
                auto it = next.find(w);
                if (it == next.end())
                    next.emplace(w, m * coeff);
                else {
                    it->second += m * coeff;
                    if (it->second == 0) next.erase(it);
                }
                w = add_vectors(w, step);
            }
        }
        acc.swap(next);
    }

    Character out(rank, window);
    for (const auto& [w, m] : acc) out.add(w, m);
    return out;
}

} // namespace equiloc
