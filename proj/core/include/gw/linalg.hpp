#ifndef GW_LINALG_HPP
#define GW_LINALG_HPP

#include <vector>

#include "gw/rational.hpp"

namespace gw {

// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix(long rows, long cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols), Rat(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }
    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Rat& at(long i, long j) { return e_[idx(i, j)]; }
    const Rat& at(long i, long j) const { return e_[idx(i, j)]; }

private:
    size_t idx(long i, long j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Matrix: index");
        return static_cast<size_t>(i * cols_ + j);
    }
    long rows_, cols_;
    std::vector<Rat> e_;
};

struct LinearSystem {
    Matrix a;
    std::vector<Rat> b;
};

// Exact determinant via fraction-free (Bareiss) elimination on a
// common-denominator integer lift of each row.
Rat det(const Matrix& m);

// Exact solution of a nonsingular square system; throws
// "Virasoro system singular" on a singular matrix (an assembly bug upstream:
// the closed determinant formula makes every assembled system invertible).
std::vector<Rat> solve(const LinearSystem& sys);

} // namespace gw

#endif
