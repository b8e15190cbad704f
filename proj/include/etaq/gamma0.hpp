#pragma once

#include "etaq/numbers.hpp"

#include <vector>

namespace etaq {

// One cusp a/c of X_0(N): c | N, gcd(a,c) = 1, width N/(N,c^2).
struct CuspRep {
    long a;
    long c;
    long width;
    long multiplicity_class;  // phi((c, N/c))
};

struct CurveInvariants {
    long N;
    long index;    // m = [SL2(Z) : Gamma_0(N)]
    long eps2;     // elliptic points of period 2
    long eps3;     // elliptic points of period 3
    long eps_inf;  // number of cusps
    long genus;
};

CurveInvariants invariants(long N);

// Complete set of cusp representatives, ordered by c ascending then a0 ascending.
std::vector<CuspRep> cusp_representatives(long N);

}  // namespace etaq
