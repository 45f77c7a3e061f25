#ifndef GW_VIRASORO_HPP
#define GW_VIRASORO_HPP

#include <vector>

#include "gw/correlators.hpp"
#include "gw/linalg.hpp"
#include "gw/target.hpp"

namespace gw {

// Exact constant plus linear combination of the current family unknowns
// x_0..x_{N-1}. Unknowns enter every Virasoro equation linearly; multiplying
// two unknown-bearing forms is an assembly bug and a hard error.
struct AffineForm {
    Rat constant;
    std::vector<Rat> linear;

    explicit AffineForm(long N) : constant(0), linear(static_cast<size_t>(N), Rat(0)) {}

    bool has_linear() const {
        for (const auto& c : linear)
            if (c != 0) return true;
        return false;
    }

    AffineForm& operator+=(const AffineForm& o) {
        constant += o.constant;
        for (size_t j = 0; j < linear.size(); ++j) linear[j] += o.linear[j];
        return *this;
    }
    friend AffineForm operator*(const Rat& c, AffineForm f) {
        f.constant *= c;
        for (auto& l : f.linear) l *= c;
        return f;
    }
    friend AffineForm form_mul(const AffineForm& a, const AffineForm& b) {
        if (a.has_linear() && b.has_linear()) throw std::logic_error("nonlinearity: assembly bug");
        if (a.has_linear()) return b.constant * a;
        return a.constant * b;
    }
    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

// One assembled Virasoro equation: coeffs . x = rhs.
struct EqRow {
    long d = 0;
    std::vector<Rat> coeffs;
    Rat rhs;
};

// The (q^d prod tail)-coefficient of the level-k(d) Virasoro identity for
// this family, as an AffineForm over x_0..x_{N-1}; the identity asserts the
// form equals zero. `symmetrized` collapses the two unknown-bearing h-ends
// of term (D) into one sum of weight 1 (they are equal term by term); the
// unsymmetrized variant keeps both at weight 1/2.
AffineForm virasoro_coefficient(Engine& eng, const Context& ctx, long d, long N, bool symmetrized = true);

// The genus-g correlator with the full tail and free insertion tau_m(T_b) at
// degree e, as a form over the family unknowns: a unit form for slot m < N,
// the TRR expansion (aux coefficients times x_j plus recursively known
// fewer-point terms) for m >= N, a zero form for m < 0.
AffineForm lookup_unknown(Engine& eng, const Context& ctx, ClassIndex b, long e, long m, long N);

// Direct evaluation of the matrix entry V^{(N)}_{d,j}.
Rat v_entry(Engine& eng, const Context& ctx, long N, long d, long j);

// Assembles rows (default d = delta..delta+N-1), solves the N x N system,
// stores the slot invariants with e_j >= 0 into the cache, and returns the
// full x-vector. Formal slots with e_j < 0 must solve to zero.
std::vector<Rat> solve_family(Engine& eng, const Context& ctx, const std::vector<long>* rows = nullptr);

// Numeric value of the slot-m family invariant for m >= N via the TRR
// expansion and the solved slots.
Rat evaluate_unknown(Engine& eng, const Context& ctx, long m);

} // namespace gw

#endif
