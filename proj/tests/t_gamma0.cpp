#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "etaq/gamma0.hpp"
#include "etaq/ntheory.hpp"

using namespace etaq;

TEST_CASE("invariants pinned values") {
    auto i1 = invariants(1);
    CHECK(i1.index == 1);
    CHECK(i1.eps2 == 1);
    CHECK(i1.eps3 == 1);
    CHECK(i1.eps_inf == 1);
    CHECK(i1.genus == 0);

    auto i4 = invariants(4);
    CHECK(i4.index == 6);
    CHECK(i4.eps2 == 0);
    CHECK(i4.eps3 == 0);

    auto i50 = invariants(50);
    CHECK(i50.index == 90);
    CHECK(i50.eps2 == 2);
    CHECK(i50.eps3 == 0);
    CHECK(i50.eps_inf == 12);
    CHECK(i50.genus == 2);

    CHECK(invariants(11).genus == 1);
    CHECK(invariants(98).index == 168);
}

TEST_CASE("genus formula is integral and nonnegative up to 1023") {
    for (long N = 1; N <= 1023; ++N) {
        auto inv = invariants(N);  // the constructor asserts integrality
        Rat g = 1 + make_rat(inv.index, 12) - make_rat(inv.eps2, 4) - make_rat(inv.eps3, 3) -
                make_rat(inv.eps_inf, 2);
        CHECK(Rat(inv.genus) == g);
        CHECK(inv.genus >= 0);
    }
}

TEST_CASE("cusp representatives pinned values") {
    CHECK(cusp_representatives(1).size() == 1);

    auto c4 = cusp_representatives(4);
    REQUIRE(c4.size() == 3);
    CHECK(c4[0].c == 1);
    CHECK(c4[0].width == 4);
    CHECK(c4[1].c == 2);
    CHECK(c4[1].width == 1);
    CHECK(c4[2].c == 4);
    CHECK(c4[2].width == 1);

    CHECK(cusp_representatives(12).size() == 6);
}

TEST_CASE("cusp data consistency for N <= 400") {
    for (long N = 1; N <= 400; ++N) {
        auto inv = invariants(N);
        auto cusps = cusp_representatives(N);
        CHECK(static_cast<long>(cusps.size()) == inv.eps_inf);
        long width_sum = 0;
        for (const auto& cusp : cusps) {
            CHECK(gcd(Int(cusp.a), Int(cusp.c)) == 1);
            CHECK(cusp.width == N / to_long(gcd(Int(N), Int(cusp.c) * cusp.c)));
            width_sum += cusp.width;
        }
        CHECK(width_sum == inv.index);
        // the same sum grouped by divisor class
        long grouped = 0;
        for (long c : divisors(N)) grouped += phi_gcd(c, N / c) * (N / to_long(gcd(Int(N), Int(c) * c)));
        CHECK(grouped == inv.index);
    }
}

TEST_CASE("eps_inf squared is bounded by m^2/N for N <= 1023") {
    for (long N = 1; N <= 1023; ++N) {
        auto inv = invariants(N);
        CHECK(Int(inv.eps_inf) * inv.eps_inf * N <= Int(inv.index) * inv.index);
    }
}

TEST_CASE("epsilon bounds behind the low-weight cutoff for 1024 <= N <= 1100") {
    for (long N = 1024; N <= 1100; ++N) {
        auto inv = invariants(N);
        CHECK(96 * inv.eps2 < inv.index);
        CHECK(128 * inv.eps3 < inv.index);
        CHECK(32 * inv.eps_inf <= inv.index);
        // hence 2 - 6 eps2/m - 8 eps3/m - 12 eps_inf/m >= 3/2 and the t = 0
        // condition cannot hold for k <= 3/2
        Rat rhs = Rat(2) - Rat(6 * inv.eps2 + 8 * inv.eps3 + 12 * inv.eps_inf, inv.index);
        CHECK(rhs >= Rat(3, 2));
    }
}
