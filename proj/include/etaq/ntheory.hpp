#pragma once

#include "etaq/numbers.hpp"

#include <map>
#include <vector>

namespace etaq {

// Element of SL2(Z).
struct SL2Matrix {
    Int a, b, c, d;
    SL2Matrix(Int a_, Int b_, Int c_, Int d_) : a(a_), b(b_), c(c_), d(d_) {
        check(a * d - b * c == 1, "matrix not in SL2(Z)");
    }
    SL2Matrix operator*(const SL2Matrix& o) const {
        return SL2Matrix(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
    }
    bool operator==(const SL2Matrix& o) const = default;
};

inline SL2Matrix sl2_identity() { return SL2Matrix(1, 0, 0, 1); }
inline SL2Matrix sl2_T() { return SL2Matrix(1, 1, 0, 1); }
inline SL2Matrix sl2_S() { return SL2Matrix(0, -1, 1, 0); }
inline SL2Matrix sl2_neg_identity() { return SL2Matrix(-1, 0, 0, -1); }
// (1 0; N 1), a generator of Gamma_0(N) together with T and -I for small N.
inline SL2Matrix sl2_VN(const Int& N) { return SL2Matrix(1, 0, N, 1); }

// Kronecker-Jacobi symbol (m/n), total on Z x Z:
//   (m/1) = 1, (m/0) = [m = +-1], (m/-1) = sign-like (1 for m >= 0),
//   (m/2) = 0 for even m, (-1)^((m^2-1)/8) otherwise,
//   completely multiplicative in n.
int kronecker(const Int& m, const Int& n);
inline int kronecker(long m, long n) { return kronecker(Int(m), Int(n)); }

// Dedekind sum s(h,k) = sum_{r mod k} ((r/k))((hr/k)), computed via the
// reciprocity law in O(log k) exact steps.
Rat dedekind_sum(const Int& h, const Int& k);
Rat dedekind_sum(long h, long k);
// Direct O(k) summation of the defining sum; kept as the test oracle.
Rat dedekind_sum_direct(const Int& h, const Int& k);

// Dedekind's Psi: the integer such that log eta transforms with
// 2 pi i Psi(g)/24 plus the log factor.  Integrality is asserted.
Int psi(const SL2Matrix& g);

// Multiplicative radical family for odd m:
//   radE/radO = product of primes with even/odd multiplicity,
//   rad = radE*radO, radPrime = radE^2*radO, irad = m/rad, iradPrime = m/radPrime.
struct RadDecomposition {
    Int radE, radO, rad, radPrime, irad, iradPrime;
};
RadDecomposition rad_decomposition(const Int& m);

// Elementary helpers.
std::vector<long> divisors(long n);                 // sorted ascending
std::vector<std::pair<long, int>> factorize(long n);  // prime -> exponent, p ascending
long euler_phi(long n);
int valuation(Int n, const Int& p);
bool is_perfect_square(const Int& n);
Int isqrt(const Int& n);

// phi(gcd(a,b)), the phi(a,b) shorthand used in cusp counts.
inline long phi_gcd(long a, long b) { return euler_phi(static_cast<long>(gcd(Int(a), Int(b)).get_si())); }

}  // namespace etaq
