#ifndef GW_TARGET_HPP
#define GW_TARGET_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gw/rational.hpp"

namespace gw {

// Codimension index of the linear subspace class T_a on P^r, 0 <= a <= r.
// Dual classes T^a are resolved to T_{r-a} at formula boundaries.
using ClassIndex = int;

// One descendant insertion tau_m(T_a). m may be negative inside
// convention-extended sums; user-facing insertions have m >= 0.
struct Insertion {
    long m;
    ClassIndex a;
    friend auto operator<=>(const Insertion&, const Insertion&) = default;
};

struct Target {
    int r;
};

// Fixed data of one unknown family: genus g and the tail insertions
// tau_{m_2}(T_{a_2})...tau_{m_n}(T_{a_n}) shared by all members.
struct Context {
    int r = 0;
    int g = 0;
    std::vector<Insertion> tail; // kept sorted ascending by (m, a)

    long n() const { return 1 + static_cast<long>(tail.size()); }
    long S() const {
        long s = 0;
        for (const auto& t : tail) s += t.m + t.a;
        return s;
    }
};

// Intersection number T_a . T_b on P^r: 1 iff codimensions sum to r.
inline Rat pairing(int r, ClassIndex a, ClassIndex b) { return a + b == r ? Rat(1) : Rat(0); }

// (R^p)_a^b = (r+1)^p delta_{a+p,b}: coefficient and raised index, or
// (0, nullopt) when a+p exceeds r.
inline std::pair<Rat, std::optional<ClassIndex>> r_power(int r, long p, ClassIndex a) {
    if (a + p > r) return {Rat(0), std::nullopt};
    return {rat_pow(Rat(r + 1), p), static_cast<ClassIndex>(a + p)};
}

// The unique (b_j, e_j) with (r+1)e_j + (r-3)(1-g) + n = j + b_j + S
// and 0 <= b_j <= r. e_j may be negative (the family then sets x_j = 0).
std::pair<ClassIndex, long> solve_unknown_slot(const Context& ctx, long j);

// k(d) = d(r+1) + (r-3)(1-g) + n - 1 - S: the Virasoro level attached to the
// degree-d equation of this family.
long k_of_d(const Context& ctx, long d);

// Smallest d >= 0 with k_of_d(ctx, d) >= 1.
long delta(const Context& ctx);

} // namespace gw

#endif
