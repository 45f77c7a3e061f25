#ifndef GW_DETLAB_HPP
#define GW_DETLAB_HPP

#include <string>
#include <vector>

#include "gw/correlators.hpp"
#include "gw/series.hpp"
#include "gw/target.hpp"

namespace gw {

// Entry of the normalized reconstruction matrix (row d scaled by the nonzero
// factor -(r+1)^{k(d)+1}): the z^j-coefficient of
//   prod_{i=0}^{k(d)} (1 + ((3-r)/(2r+2) + i/(r+1)) z)
//   / [ (1+(d-e_j)z)^{b_j+1} prod_{i=0}^{d-e_j-1} (1+iz)^{r+1} ]
// with inverted products resolved by the reciprocal-range convention.
Rat wtilde_entry(const Context& ctx, long d, long j);

// Unnormalized entry W_{d,j} = -(r+1)^{k(d)+1} wtilde_entry(ctx, d, j); equals
// the recursion matrix entry V^{(j+1)}_{d,j}.
Rat w_entry(const Context& ctx, long d, long j);

// Determinant of the N x N submatrix of the normalized matrix given by the
// first N columns and the listed N distinct rows.
Rat wtilde_det(const Context& ctx, const std::vector<long>& rows);

// Closed form for that determinant:
//   prod_{i>j} (d_i-d_j) / prod_{i=1}^{N-1} i!  *  prod_{i=1}^{N-1} (i+1/2)^{N-i}.
Rat det_formula(const std::vector<long>& rows);

// Parameters of the interpolation identity: N+1 distinct integer nodes a_0..a_N,
//   f(z) = sum_k [ prod_{i != k} 1/(a_k-a_i) ]
//            * prod_{i=M}^{n a_k} (1 + ((c+i)/n) z)
//            * (1 + a_k z)^q
//            * prod_{i=a_k}^{-1} (1+iz)^n.
struct TechParams {
    long n = 1; // n >= 1
    long M = 0;
    Rat q;
    Rat c;
    std::vector<long> a; // N+1 distinct integers

    long N() const { return static_cast<long>(a.size()) - 1; }
};

// f(z) truncated to the given order.
Series tech_f(const TechParams& p, long order);

// The z^N-coefficient of f(z): (1/N!) prod_{i=1}^{N} (c+q-N+(n+1)/2+i).
Rat tech_closed_form(const TechParams& p);

// One verification outcome; `text` is a one-line human-readable record.
struct VerifyLine {
    bool pass;
    std::string text;
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    long passed() const;
    long failed() const;
    bool ok() const { return failed() == 0; }
};

// Determinant closed form against exact elimination: r in {2,3}, g in {1,2},
// empty and random two-insertion tails, N <= n_max, `trials` seeded row sets
// per configuration, plus a deliberate mismatch as a negative control.
// r_filter/g_filter = 0 runs all values, otherwise only the given one.
VerifyReport verify_det(long trials, unsigned long seed, long n_max = 4, int r_filter = 0, int g_filter = 0);

// Recursion matrix entries against the generating-function matrix: direct
// column entries V^{(j+1)}_{d,j} = W_{d,j} and the column-reduction identity
//   V^{(N+1)}_{d,j} = V^{(N)}_{d,j} - <T_{b_N} T^{b_j}>^{N-1-j} W_{d,N}.
VerifyReport verify_vw(Engine& eng, long n_max = 3, int r_filter = 0);

// Interpolation identity on seeded bounded-random parameters: vanishing below
// z^N, the z^N closed form, independence of M and of the node set, and the
// degree bounds on the z^{N+1} and z^{N+2} coefficients via finite differences
// of a shared node shift.
VerifyReport verify_lemma(long trials, unsigned long seed);

} // namespace gw

#endif
