#include "gw/target.hpp"

namespace gw {

std::pair<ClassIndex, long> solve_unknown_slot(const Context& ctx, long j) {
    if (j < 0) throw std::invalid_argument("solve_unknown_slot: j must be >= 0");
    long rhs_const = ctx.S() + j - (ctx.r - 3) * (1 - ctx.g) - ctx.n();
    // Need (r+1)e = rhs_const + b with 0 <= b <= r: b is the unique
    // representative of (-rhs_const) mod (r+1) in [0, r].
    long mod = ctx.r + 1;
    long b = ((-rhs_const) % mod + mod) % mod;
    long e = (rhs_const + b) / mod;
    return {static_cast<ClassIndex>(b), e};
}

long k_of_d(const Context& ctx, long d) {
    return d * (ctx.r + 1) + (ctx.r - 3) * (1 - ctx.g) + ctx.n() - 1 - ctx.S();
}

long delta(const Context& ctx) {
    long c = k_of_d(ctx, 0);
    if (c >= 1) return 0;
    // k(d) = (r+1)d + c; first d with k >= 1.
    long need = 1 - c;
    return (need + ctx.r) / (ctx.r + 1);
}

} // namespace gw
