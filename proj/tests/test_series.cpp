#include <doctest.h>

#include "gw/series.hpp"

using namespace gw;

TEST_CASE("series arithmetic basics") {
    Series a = Series::linear(5, rat(1));
    Series b = series_pow(a, Rat(3));
    CHECK(b.coeff(0) == 1);
    CHECK(b.coeff(1) == 3);
    CHECK(b.coeff(2) == 3);
    CHECK(b.coeff(3) == 1);
    CHECK(b.coeff(4) == 0);

    Series inv = series_inv(b);
    CHECK(series_mul(b, inv) == Series::one(5));

    Series c = series_pow(a, rat(-1, 2));
    CHECK(series_mul(c, c) == series_inv(a));
}

TEST_CASE("series guards") {
    Series z(3);
    CHECK_THROWS_AS(series_inv(z), std::domain_error);
    CHECK_THROWS_AS(z.coeff(4), std::out_of_range);
    CHECK_THROWS_AS(Series(2).set_coeff(3, Rat(1)), std::out_of_range);
}

TEST_CASE("bracket coefficients") {
    // k = -1: empty product, a bare 1.
    CHECK(bracket(rat(7, 3), -1, 0) == 1);

    // k = 1: (z+x)(z+x+1).
    Rat x = rat(1, 2);
    CHECK(bracket(x, 1, 0) == x * (x + 1));
    CHECK(bracket(x, 1, 1) == 2 * x + 1);
    CHECK(bracket(x, 1, 2) == 1);
    CHECK_THROWS_AS(bracket(x, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(bracket(x, -2, 0), std::invalid_argument);
}

TEST_CASE("range product with inverted ranges") {
    auto factor = [](long i) { return Series::linear(4, Rat(i)); };
    // Empty by one step: prod_{i=2}^{1} = prod over the empty range.
    CHECK(range_product(2, 1, factor, 4) == Series::one(4));
    // Inverted by two steps: prod_{i=3}^{1} = 1/A_2.
    CHECK(range_product(3, 1, factor, 4) == series_inv(factor(2)));
    // Forward and inverted ranges cancel.
    Series fwd = range_product(1, 3, factor, 4);
    Series bwd = range_product(4, 0, factor, 4);
    CHECK(series_mul(fwd, bwd) == Series::one(4));
}
