#include <doctest.h>

#include "gw/detlab.hpp"
#include "gw/virasoro.hpp"

using namespace gw;

TEST_CASE("closed determinant formula examples") {
    Context ctx{2, 1, {}};
    const long d0 = delta(ctx);
    CHECK(det_formula({d0}) == 1);
    CHECK(det_formula({d0, d0 + 1}) == rat(3, 2));
    CHECK(det_formula({d0, d0 + 1, d0 + 2}) == rat(45, 8));
    CHECK_THROWS_AS(det_formula({d0, d0}), std::invalid_argument);
    // Swapping two rows flips the Vandermonde sign.
    CHECK(det_formula({d0 + 1, d0}) == -det_formula({d0, d0 + 1}));
}

TEST_CASE("first column of the normalized matrix is constant 1") {
    for (int r : {2, 3})
        for (int g : {1, 2}) {
            Context ctx{r, g, {}};
            for (long d = delta(ctx); d <= delta(ctx) + 4; ++d) CHECK(wtilde_entry(ctx, d, 0) == 1);
        }
}

TEST_CASE("row scaling between the two matrix forms") {
    Context ctx{2, 1, {}};
    for (long d = delta(ctx); d <= delta(ctx) + 2; ++d)
        for (long j = 0; j < 3; ++j)
            CHECK(w_entry(ctx, d, j) == -rat_pow(Rat(3), k_of_d(ctx, d) + 1) * wtilde_entry(ctx, d, j));
}

TEST_CASE("interpolation series base case") {
    // Single node, n=1, c=0, M=1: f(z) = (1+a_0 z)^{q+1}.
    for (long a0 : {-2L, 0L, 3L}) {
        TechParams p;
        p.n = 1;
        p.M = 1;
        p.q = rat(5, 2);
        p.c = 0;
        p.a = {a0};
        CHECK(tech_f(p, 5) == series_pow(Series::linear(5, Rat(a0)), p.q + 1));
    }
}

TEST_CASE("interpolation identity suite") {
    VerifyReport rep = verify_lemma(8, 2024);
    for (const auto& l : rep.lines) {
        INFO(l.text);
        CHECK(l.pass);
    }
}

TEST_CASE("determinant suite") {
    VerifyReport rep = verify_det(3, 5, 3);
    for (const auto& l : rep.lines) {
        INFO(l.text);
        CHECK(l.pass);
    }
}

TEST_CASE("recursion matrix vs generating function matrix") {
    Engine eng;
    VerifyReport rep = verify_vw(eng, 2);
    for (const auto& l : rep.lines) {
        INFO(l.text);
        CHECK(l.pass);
    }
}
