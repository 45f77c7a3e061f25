#include <doctest.h>

#include <random>

#include "gw/linalg.hpp"

using namespace gw;

namespace {

Rat cofactor_det(const Matrix& m) {
    long n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rat acc(0);
    for (long k = 0; k < n; ++k) {
        Matrix minor(n - 1, n - 1);
        for (long i = 1; i < n; ++i)
            for (long j = 0, jj = 0; j < n; ++j) {
                if (j == k) continue;
                minor.at(i - 1, jj++) = m.at(i, j);
            }
        Rat term = m.at(0, k) * cofactor_det(minor);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

Matrix random_matrix(std::mt19937_64& rng, long n) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    Matrix m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = rat(num(rng), den(rng));
    return m;
}

} // namespace

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(42);
    for (long n = 1; n <= 5; ++n)
        for (int t = 0; t < 6; ++t) {
            Matrix m = random_matrix(rng, n);
            CHECK(det(m) == cofactor_det(m));
        }
}

TEST_CASE("determinant examples") {
    Matrix m(2, 2);
    m.at(0, 0) = rat(1, 2);
    m.at(0, 1) = rat(1, 3);
    m.at(1, 0) = rat(1, 4);
    m.at(1, 1) = rat(1, 5);
    CHECK(det(m) == rat(1, 10) - rat(1, 12));

    Matrix z(3, 3); // all zeros
    CHECK(det(z) == 0);

    CHECK_THROWS_AS(det(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("solve returns the exact solution") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    for (int t = 0; t < 10; ++t) {
        long n = 1 + static_cast<long>(t % 5);
        Matrix m = random_matrix(rng, n);
        if (det(m) == 0) continue;
        std::vector<Rat> b(static_cast<size_t>(n));
        for (auto& v : b) v = rat(num(rng), den(rng));
        std::vector<Rat> x = solve({m, b});
        for (long i = 0; i < n; ++i) {
            Rat acc(0);
            for (long j = 0; j < n; ++j) acc += m.at(i, j) * x[static_cast<size_t>(j)];
            CHECK(acc == b[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("singular system is a hard error") {
    Matrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    std::vector<Rat> b{Rat(1), Rat(1)};
    CHECK_THROWS_WITH_AS(solve({m, b}), "Virasoro system singular", std::runtime_error);
}
