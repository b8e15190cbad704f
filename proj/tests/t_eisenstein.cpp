#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "etaq/eisenstein.hpp"
#include "etaq/ntheory.hpp"

#include <random>

using namespace etaq;

TEST_CASE("p_factor matches the specialized displays") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> cs(1, 40);
    for (int trial = 0; trial < 60; ++trial) {
        long c = cs(rng);
        long c4 = 4 * c;
        for (long d = 0; d < c4; ++d) {
            if (gcd(Int(d), Int(c4)) != 1) continue;
            // (r2, r4) = (0, -3/2): -18 s(-d,c) + 72 s(-d,4c) - 27/2
            CHECK(p_factor(c4, d, Rat(0), Rat(-3, 2)) ==
                  -18 * dedekind_sum(-d, c) + 72 * dedekind_sum(-d, c4) - Rat(27, 2));
            // (7, -4): -48 s(-d,c) + 84 s(-d,2c) + 24 s(-d,4c) - 15
            CHECK(p_factor(c4, d, Rat(7), Rat(-4)) ==
                  -48 * dedekind_sum(-d, c) + 84 * dedekind_sum(-d, 2 * c) +
                      24 * dedekind_sum(-d, c4) - 15);
            // (29/2, -22/3): -88 s(-d,c) + 174 s(-d,2c) + 4 s(-d,4c) - 45/2
            CHECK(p_factor(c4, d, Rat(29, 2), Rat(-22, 3)) ==
                  -88 * dedekind_sum(-d, c) + 174 * dedekind_sum(-d, 2 * c) +
                      4 * dedekind_sum(-d, c4) - Rat(45, 2));
            break;  // one d per c is plenty
        }
    }
    CHECK_THROWS_AS(p_factor(6, 1, Rat(0), Rat(-3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(p_factor(8, 2, Rat(0), Rat(-3, 2)), std::invalid_argument);
}

TEST_CASE("admissibility window") {
    CHECK(EisParams{Rat(0), Rat(-3, 2)}.admissible_window());
    CHECK(EisParams{Rat(7), Rat(-4)}.admissible_window());
    CHECK(EisParams{Rat(29, 2), Rat(-22, 3)}.admissible_window());
    CHECK_FALSE(EisParams{Rat(0), Rat(-9)}.admissible_window());
    CHECK_THROWS_AS(verify_identity(EisParams{Rat(0), Rat(-9)}, 4, 1e-3), not_applicable_error);
}

TEST_CASE("weights and covers of the three pinned parameter sets") {
    EisParams a{Rat(0), Rat(-3, 2)};
    CHECK(a.weight() == Rat(9, 4));
    CHECK(a.cover_index() == 4);
    EisParams b{Rat(7), Rat(-4)};
    CHECK(b.weight() == Rat(5, 2));
    CHECK(b.cover_index() == 2);
    EisParams c{Rat(29, 2), Rat(-22, 3)};
    CHECK(c.weight() == Rat(15, 4));
    CHECK(c.cover_index() == 12);
}

TEST_CASE("constant term is exactly one") {
    EisParams p{Rat(7), Rat(-4), 50};
    EisCoeff c0 = eis_coeff(p, 0);
    CHECK(c0.value == std::complex<double>(1.0, 0.0));
    CHECK(c0.tail_bound == 0.0);
}

TEST_CASE("d-sum periodicity under d -> d + 4c") {
    std::mt19937 rng(10);
    std::uniform_int_distribution<long> cs(1, 30);
    for (int trial = 0; trial < 50; ++trial) {
        long c = cs(rng);
        long c4 = 4 * c;
        long d = cs(rng) % c4;
        while (gcd(Int(d), Int(c4)) != 1) d = (d + 1) % c4;
        Rat p1 = p_factor(c4, d, Rat(7), Rat(-4));
        Rat p2 = p_factor(c4, d + c4, Rat(7), Rat(-4));
        CHECK(p1 == p2);
    }
}

TEST_CASE("identities hold at modest truncation") {
    // convergence rate is ~ c_max^(2-k), so the tolerance scales with the weight
    struct Case {
        EisParams p;
        double tol;
    };
    for (const Case& c : {Case{{Rat(0), Rat(-3, 2), 300}, 1e-2},
                          Case{{Rat(7), Rat(-4), 300}, 2e-3},
                          Case{{Rat(29, 2), Rat(-22, 3), 300}, 1e-4}}) {
        EisReport rep = verify_identity(c.p, 6, c.tol);
        CHECK(rep.pass);
    }
}

TEST_CASE("tail shrinks when the truncation grows") {
    for (auto [r2, r4] : std::vector<std::pair<Rat, Rat>>{{Rat(0), Rat(-3, 2)}, {Rat(7), Rat(-4)}}) {
        EisParams coarse{r2, r4, 120};
        EisParams fine{r2, r4, 480};
        EisReport a = verify_identity(coarse, 6, 1.0);
        EisReport b = verify_identity(fine, 6, 1.0);
        CHECK(b.max_err < a.max_err);
    }
}
