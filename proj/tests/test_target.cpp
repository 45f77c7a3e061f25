#include <doctest.h>

#include "gw/target.hpp"

using namespace gw;

TEST_CASE("pairing and matrix powers") {
    CHECK(pairing(2, 0, 2) == 1);
    CHECK(pairing(2, 1, 1) == 1);
    CHECK(pairing(2, 1, 2) == 0);
    auto [c0, b0] = r_power(2, 2, 0);
    CHECK(c0 == 9);
    CHECK(b0.value() == 2);
    auto [c1, b1] = r_power(2, 2, 1);
    CHECK(c1 == 0);
    CHECK(!b1.has_value());
}

TEST_CASE("slot resolution for the genus-1 plane family") {
    Context ctx{2, 1, {}};
    CHECK(solve_unknown_slot(ctx, 0) == std::pair<ClassIndex, long>{1, 0});
    CHECK(solve_unknown_slot(ctx, 1) == std::pair<ClassIndex, long>{0, 0});
    CHECK(solve_unknown_slot(ctx, 2) == std::pair<ClassIndex, long>{2, 1});
    // Slot relation round trip: index = (r+1)e + const - b.
    for (long j = 0; j < 8; ++j) {
        auto [b, e] = solve_unknown_slot(ctx, j);
        CHECK(3 * e + (2 - 3) * (1 - 1) + ctx.n() - j - b - ctx.S() == 0);
        CHECK(b >= 0);
        CHECK(b <= 2);
    }
}

TEST_CASE("level and threshold") {
    Context g1{2, 1, {}};
    CHECK(k_of_d(g1, 0) == 0);
    CHECK(k_of_d(g1, 1) == 3);
    CHECK(delta(g1) == 1);

    Context g2{3, 2, {}};
    CHECK(k_of_d(g2, 1) == 4);
    CHECK(delta(g2) == 1);

    // Tail shifts the level: r=2, g=0, eight point insertions.
    Context g0{2, 0, std::vector<Insertion>(8, Insertion{0, 2})};
    CHECK(k_of_d(g0, 0) == -9);
    CHECK(k_of_d(g0, 4) == 3);
}
