#include "gw/linalg.hpp"

namespace gw {

namespace {

// Scale each row by the LCM of its denominators. Returns the integer matrix
// and the product of the scale factors (so det(input) = det(lift) / scale).
struct IntLift {
    std::vector<std::vector<mpz_class>> m;
    Rat scale; // product of per-row multipliers
};

IntLift lift_rows(const Matrix& a, const std::vector<Rat>* rhs) {
    long n = a.rows();
    long cols = a.cols() + (rhs ? 1 : 0);
    IntLift out;
    out.m.assign(static_cast<size_t>(n), std::vector<mpz_class>(static_cast<size_t>(cols)));
    out.scale = 1;
    for (long i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (long j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den_mpz_t());
        if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[static_cast<size_t>(i)].get_den_mpz_t());
        for (long j = 0; j < a.cols(); ++j) {
            Rat v = a.at(i, j) * Rat(l);
            out.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.get_num();
        }
        if (rhs) {
            Rat v = (*rhs)[static_cast<size_t>(i)] * Rat(l);
            out.m[static_cast<size_t>(i)][static_cast<size_t>(a.cols())] = v.get_num();
        }
        out.scale *= Rat(l);
    }
    return out;
}

// Fraction-free elimination in place; returns (det of the integer matrix's
// leading n x n block, sign from row swaps) with the matrix left in row
// echelon form suitable for exact back substitution. Zero determinant is
// reported through the return value.
mpz_class bareiss(std::vector<std::vector<mpz_class>>& m, long n) {
    mpz_class prev = 1;
    int sign = 1;
    long cols = static_cast<long>(m.empty() ? 0 : m[0].size());
    for (long k = 0; k < n - 1; ++k) {
        if (m[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (m[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(piv)]);
            sign = -sign;
        }
        const mpz_class& pivot = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < cols; ++j) {
                mpz_class t = m[static_cast<size_t>(i)][static_cast<size_t>(j)] * pivot
                            - m[static_cast<size_t>(i)][static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                mpz_divexact(m[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = pivot;
    }
    return sign * m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

} // namespace

Rat det(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    long n = m.rows();
    if (n == 0) return Rat(1);
    IntLift lift = lift_rows(m, nullptr);
    mpz_class d = bareiss(lift.m, n);
    return Rat(d) / lift.scale;
}

std::vector<Rat> solve(const LinearSystem& sys) {
    if (sys.a.rows() != sys.a.cols()) throw std::invalid_argument("solve: matrix not square");
    long n = sys.a.rows();
    if (static_cast<long>(sys.b.size()) != n) throw std::invalid_argument("solve: rhs size mismatch");
    if (n == 0) return {};
    IntLift lift = lift_rows(sys.a, &sys.b);
    mpz_class d = bareiss(lift.m, n);
    if (d == 0) throw std::runtime_error("Virasoro system singular");
    // Back substitution over the echelon form, exactly in rationals.
    std::vector<Rat> x(static_cast<size_t>(n));
    for (long i = n - 1; i >= 0; --i) {
        Rat acc = Rat(lift.m[static_cast<size_t>(i)][static_cast<size_t>(n)]);
        for (long j = i + 1; j < n; ++j) acc -= Rat(lift.m[static_cast<size_t>(i)][static_cast<size_t>(j)]) * x[static_cast<size_t>(j)];
        if (lift.m[static_cast<size_t>(i)][static_cast<size_t>(i)] == 0) throw std::runtime_error("Virasoro system singular");
        x[static_cast<size_t>(i)] = acc / Rat(lift.m[static_cast<size_t>(i)][static_cast<size_t>(i)]);
    }
    return x;
}

} // namespace gw
