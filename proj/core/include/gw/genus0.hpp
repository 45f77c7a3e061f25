#ifndef GW_GENUS0_HPP
#define GW_GENUS0_HPP

#include <functional>
#include <map>
#include <vector>

#include "gw/target.hpp"

namespace gw {

// Complete genus-0 descendant invariants of P^r, the base of the genus
// recursion. True invariant values only: unstable keys evaluate to 0 here;
// the convention-extended virtual values live in the correlator store.
//
// Reduction pipeline: string/divisor/dilaton stripping, the genus-0
// topological recursion relation to lower descendant indices, and WDVV
// reconstruction for primary invariants from the single seed
// <pt, pt>_{0,1} = 1 plus classical degree-0 triple intersections.
class Genus0Engine {
public:
    explicit Genus0Engine(int r, bool verify = false) : r_(r), verify_(verify) {}

    int r() const { return r_; }

    // <tau_{m_1}(T_{a_1}) ... tau_{m_n}(T_{a_n})>_{0,d}; requires all m >= 0.
    Rat descendant(long d, std::vector<Insertion> ins);

    // Closed form <tau_.(T^a)>_{0,d} for d >= 1 (descendant index
    // m = (r+1)d - 2 + a fixed by dimension): z^a-coefficient of
    // prod_{i=1}^{d} (z+i)^{-(r+1)}.
    static Rat one_point(int r, long d, ClassIndex a);

    // Closed form <tau_.(T_b) T^{bj}>_{0,e} for e >= 1: z^{r-b}-coefficient
    // of (z+e)^{-(bj+1)} prod_{i=1}^{e-1} (z+i)^{-(r+1)}.
    static Rat two_point(int r, long e, ClassIndex b, ClassIndex bj);

private:
    Rat desc(long d, std::vector<Insertion> ins);
    Rat compute(long d, const std::vector<Insertion>& ins);
    // Genus-0 TRR applied directly to insertion `t` (descendant index
    // lowered by one) with marked points `p2`, `p3` distinguished.
    Rat trr_direct(long d, const std::vector<Insertion>& ins, size_t t, size_t p2, size_t p3);
    // WDVV reconstruction step for an all-primary key (codims >= 2, n >= 3).
    Rat wdvv(long d, const std::vector<Insertion>& ins);
    void cross_check(long d, const std::vector<Insertion>& ins, const Rat& got) const;

    int r_;
    bool verify_;
    std::map<std::pair<long, std::vector<Insertion>>, Rat> memo_;
};

// Enumerates every way to split a sorted multiset into an ordered pair of
// sub-multisets (part, rest); both passed sorted. The marked points carrying
// equal insertions are distinguishable, so each split comes with the number
// of point subsets realizing it (a product of binomial coefficients).
void for_each_split(
    const std::vector<Insertion>& items,
    const std::function<void(const std::vector<Insertion>&, const std::vector<Insertion>&, const Rat&)>& fn);

} // namespace gw

#endif
