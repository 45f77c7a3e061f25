#include <doctest.h>

#include <sstream>

#include "gw/correlators.hpp"

using namespace gw;

TEST_CASE("convention values for unstable keys") {
    Engine eng(true);
    for (int r : {1, 2, 3}) {
        // Case (i): <tau_{-2}(pt)>_{0,0} = 1, everything else with one entry 0.
        CHECK(eng.invariant({r, 0, 0, {{-2, static_cast<ClassIndex>(r)}}}) == 1);
        CHECK(eng.invariant({r, 0, 0, {{-2, 0}}}) == (r == 0 ? 1 : 0));
        CHECK(eng.invariant({r, 0, 0, {{-1, static_cast<ClassIndex>(r)}}}) == 0);

        // Case (ii): <tau_{m1}(g1) tau_{m2}(g2)>_{0,0} =
        // (-1)^{max(m1,m2)} (g1.g2) delta_{m1+m2,-1}, exhaustive over classes.
        for (int a = 0; a <= r; ++a)
            for (int b = 0; b <= r; ++b)
                for (long m1 = -4; m1 <= 3; ++m1) {
                    long m2 = -1 - m1;
                    Rat expect = (a + b == r) ? ((std::max(m1, m2) % 2 == 0) ? Rat(1) : Rat(-1)) : Rat(0);
                    CHECK(eng.invariant({r, 0, 0,
                                         {{m1, static_cast<ClassIndex>(a)}, {m2, static_cast<ClassIndex>(b)}}}) ==
                          expect);
                    CHECK(eng.invariant({r, 0, 0,
                                         {{m1, static_cast<ClassIndex>(a)}, {m2 + 1, static_cast<ClassIndex>(b)}}}) ==
                          0);
                }
    }
}

TEST_CASE("case (iii) through the auxiliary recursion") {
    Engine eng(true);
    for (int r : {1, 2, 3})
        for (long i = 0; i <= 6; ++i)
            for (int a = 0; a <= r; ++a)
                for (int b = 0; b <= r; ++b) {
                    CHECK(eng.aux({r, i, {-i - 1, static_cast<ClassIndex>(a)}, static_cast<ClassIndex>(b), 0, {}}) ==
                          pairing(r, a, b));
                    // Off-index degree-0 values vanish.
                    CHECK(eng.aux({r, i, {-i, static_cast<ClassIndex>(a)}, static_cast<ClassIndex>(b), 0, {}}) == 0);
                }
}

TEST_CASE("degree-0 multinomial formula at three points") {
    Engine eng(true);
    for (int r : {1, 2, 3})
        for (int a1 = 0; a1 <= r; ++a1)
            for (int a2 = 0; a2 <= r; ++a2)
                for (int a3 = 0; a3 <= r; ++a3) {
                    Rat v = eng.invariant({r, 0, 0,
                                           {{0, static_cast<ClassIndex>(a1)},
                                            {0, static_cast<ClassIndex>(a2)},
                                            {0, static_cast<ClassIndex>(a3)}}});
                    CHECK(v == (a1 + a2 + a3 == r ? Rat(1) : Rat(0)));
                }
    // Four points carry one descendant: binom(1; 1,0,0,0) = 1.
    CHECK(eng.invariant({2, 0, 0, {{1, 2}, {0, 0}, {0, 0}, {0, 0}}}) == 1);
    CHECK(eng.invariant({2, 0, 0, {{1, 1}, {0, 1}, {0, 0}, {0, 0}}}) == 1);
    CHECK(eng.invariant({2, 0, 0, {{1, 2}, {1, 0}, {0, 0}, {0, 0}}}) == 0);
}

TEST_CASE("key validation and gates") {
    Engine eng;
    CHECK_THROWS_AS(eng.invariant({0, 0, 1, {{0, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(eng.invariant({2, -1, 1, {{0, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(eng.invariant({2, 0, 1, {{0, 5}}}), std::invalid_argument);
    CHECK(eng.invariant({2, 0, -1, {{0, 2}, {0, 2}}}) == 0);
    // Dimension mismatch.
    CHECK(eng.invariant({2, 1, 1, {{0, 2}, {0, 2}}}) == 0);
    // Negative descendant index in a stable range is zero.
    CHECK(eng.invariant({2, 1, 1, {{-1, 2}, {0, 2}, {0, 1}, {0, 2}}}) == 0);
}

TEST_CASE("cache round trip") {
    Cache c;
    InvKey k1{2, 1, 2, {{5, 2}}};
    k1.canonicalize();
    c.insert_inv(k1, rat(1, 32));
    AuxKey k2{2, 1, {0, 1}, 2, 1, {}};
    c.insert_aux(k2, rat(-3, 7));
    // Extras-bearing records stay in memory only.
    AuxKey k3{2, 1, {0, 1}, 2, 1, {{0, 2}}};
    c.insert_aux(k3, rat(9, 5));

    std::stringstream buf;
    c.save(buf);
    CHECK(buf.str() == "2|1|2|5:2|1/32\naux|2|1|0:1|2|1|-3/7\n");

    Cache d;
    d.load(buf);
    CHECK(d.find_inv(k1).value() == rat(1, 32));
    CHECK(d.find_aux(k2).value() == rat(-3, 7));
    CHECK(!d.find_aux(k3).has_value());

    // Idempotent insert; conflicting value is a hard error.
    d.insert_inv(k1, rat(1, 32));
    CHECK_THROWS_AS(d.insert_inv(k1, rat(1, 31)), std::logic_error);
}

TEST_CASE("cache parse errors name the line") {
    Cache c;
    std::stringstream bad("2|1|2|5:2|1/32\n2|1|x|5:2|1\n");
    CHECK_THROWS_WITH_AS(c.load(bad), "cache parse error at line 2: bad integer 'x'", std::runtime_error);
    std::stringstream bad2("aux|2|1|0:1|2|1\n");
    CHECK_THROWS_WITH_AS(Cache().load(bad2), "cache parse error at line 1: expected 7 fields", std::runtime_error);
    std::stringstream conflict("2|1|2|5:2|1/32\n2|1|2|5:2|1/31\n");
    CHECK_THROWS_AS(Cache().load(conflict), std::logic_error);
}
