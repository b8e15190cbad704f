#include "etaq/gamma0.hpp"

#include "etaq/ntheory.hpp"

namespace etaq {

CurveInvariants invariants(long N) {
    check(N >= 1, "invariants: N must be positive");
    CurveInvariants inv{};
    inv.N = N;
    long m = N;
    for (auto [p, e] : factorize(N)) m += m / p;
    inv.index = m;

    if (N % 4 == 0) {
        inv.eps2 = 0;
    } else {
        long e2 = 1;
        for (auto [p, e] : factorize(N)) e2 *= 1 + kronecker(-4, p);
        inv.eps2 = e2;
    }
    if (N % 9 == 0) {
        inv.eps3 = 0;
    } else {
        long e3 = 1;
        for (auto [p, e] : factorize(N)) e3 *= 1 + kronecker(-3, p);
        inv.eps3 = e3;
    }
    long einf = 0;
    for (long d : divisors(N)) einf += phi_gcd(d, N / d);
    inv.eps_inf = einf;

    // g = 1 + m/12 - eps2/4 - eps3/3 - eps_inf/2, always a nonnegative integer
    Rat g = 1 + make_rat(m, 12) - make_rat(inv.eps2, 4) - make_rat(inv.eps3, 3) - make_rat(einf, 2);
    internal_check(is_integer(g) && g >= 0, "invariants: genus not a nonnegative integer");
    inv.genus = to_long(g.get_num());
    return inv;
}

std::vector<CuspRep> cusp_representatives(long N) {
    check(N >= 1, "cusp_representatives: N must be positive");
    std::vector<CuspRep> out;
    for (long c : divisors(N)) {
        long g = to_long(gcd(Int(c), Int(N / c)));
        long width = N / to_long(gcd(Int(N), Int(c) * c));
        for (long a0 = 0; a0 < g; ++a0) {
            if (gcd(gcd(Int(a0), Int(c)), Int(N / c)) != 1) continue;
            // smallest a >= 0 with a = a0 mod (c, N/c) and (a, c) = 1
            long a = a0;
            while (gcd(Int(a), Int(c)) != 1) a += g;
            out.push_back({a, c, width, euler_phi(g)});
        }
    }
    return out;
}

}  // namespace etaq
