#include "etaq/ntheory.hpp"

#include <numeric>
namespace etaq {

namespace {

// Jacobi symbol (m/n) for odd n >= 1.
int jacobi_odd(Int m, Int n) {
    internal_check(n > 0 && n % 2 == 1, "jacobi: n must be odd positive");
    m = mod_floor(m, n);
    int t = 1;
    while (m != 0) {
        long v = 0;
        while (m % 2 == 0) {
            m /= 2;
            ++v;
        }
        if (v % 2 == 1) {
            long n8 = to_long(mod_floor(n, 8));
            if (n8 == 3 || n8 == 5) t = -t;
        }
        // quadratic reciprocity for odd positive arguments
        if (mod_floor(m, 4) == 3 && mod_floor(n, 4) == 3) t = -t;
        std::swap(m, n);
        m = mod_floor(m, n);
    }
    return n == 1 ? t : 0;
}

}  // namespace

int kronecker(const Int& m, const Int& n) {
    if (n == 0) return (m == 1 || m == -1) ? 1 : 0;
    Int nn = n;
    int sign = 1;
    if (nn < 0) {
        nn = -nn;
        if (m < 0) sign = -1;  // (m/-1)
    }
    int v2 = 0;
    while (nn % 2 == 0) {
        nn /= 2;
        ++v2;
    }
    int two_part = 1;
    if (v2 > 0) {
        if (m % 2 == 0) return 0;
        long m8 = to_long(mod_floor(m, 8));
        int s = (m8 == 1 || m8 == 7) ? 1 : -1;  // (m/2) for odd m
        two_part = (v2 % 2 == 0) ? 1 : s;
    }
    return sign * two_part * jacobi_odd(m, nn);
}

Rat dedekind_sum_direct(const Int& h, const Int& k) {
    check(k >= 1, "dedekind_sum: k must be positive");
    auto sawtooth = [](const Rat& x) -> Rat {
        if (is_integer(x)) return Rat(0);
        return rat_frac(x) - Rat(1, 2);
    };
    Rat s(0);
    for (Int r = 1; r < k; ++r) s += sawtooth(make_rat(r, k)) * sawtooth(make_rat(h * r, k));
    return s;
}

namespace {

// descent with machine integers; valid while 12 h k stays inside int64
Rat dedekind_descent_long(long hh, long kk) {
    Rat s(0);
    mpq_t term;
    mpq_init(term);
    int sign = 1;
    while (hh != 0) {
        long num = hh * hh + kk * kk + 1 - 3 * hh * kk;
        long den = 12 * hh * kk;
        if (sign < 0) num = -num;
        long g = std::gcd(num < 0 ? -num : num, den);
        mpq_set_si(term, num / g, static_cast<unsigned long>(den / g));
        mpq_add(s.get_mpq_t(), s.get_mpq_t(), term);
        long r = kk % hh;
        kk = hh;
        hh = r;
        sign = -sign;
        if (kk == 1) break;
    }
    mpq_clear(term);
    return s;
}

}  // namespace

Rat dedekind_sum(long h, long k) {
    check(k >= 1, "dedekind_sum: k must be positive");
    internal_check(k <= 100000000, "dedekind_sum(long): k too large");
    long hh = ((h % k) + k) % k;
    long g = std::gcd(hh, k);
    hh /= g;
    long kk = k / g;
    if (kk == 1) return Rat(0);
    return dedekind_descent_long(hh, kk);
}

Rat dedekind_sum(const Int& h, const Int& k) {
    check(k >= 1, "dedekind_sum: k must be positive");
    Int hh = mod_floor(h, k);
    Int g = gcd(hh, k);
    hh /= g;
    Int kk = k / g;
    if (kk == 1) return Rat(0);
    if (kk <= 100000000) return dedekind_descent_long(to_long(hh), to_long(kk));
    // Euclidean descent on s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk))/12,
    // one fraction per step: (h^2 + k^2 + 1 - 3hk) / (12hk)
    Rat s(0);
    Int num, den;
    int sign = 1;
    while (hh != 0) {
        num = hh * hh + kk * kk + 1 - 3 * hh * kk;
        den = 12 * hh * kk;
        if (sign < 0) num = -num;
        s += make_rat(num, den);
        Int r = mod_floor(kk, hh);
        kk = hh;
        hh = r;
        sign = -sign;
        if (kk == 1) break;
    }
    return s;
}

Int psi(const SL2Matrix& g) {
    Rat v;
    if (g.c > 0) {
        v = make_rat(g.a + g.d, g.c) + 12 * dedekind_sum(-g.d, g.c) - 3;
    } else if (g.c < 0) {
        v = make_rat(g.a + g.d, g.c) + 12 * dedekind_sum(g.d, -g.c) + 3;
    } else if (g.a > 0) {
        v = Rat(g.b);
    } else {
        v = Rat(-g.b - 6);
    }
    internal_check(is_integer(v), "psi: non-integral value");
    return v.get_num();
}

RadDecomposition rad_decomposition(const Int& m) {
    check(m >= 1 && m % 2 == 1, "rad_decomposition: m must be odd positive");
    RadDecomposition r{1, 1, 1, 1, 1, 1};
    Int rest = m;
    for (Int p = 3; p * p <= rest; p += 2) {
        if (rest % p != 0) continue;
        int v = 0;
        while (rest % p == 0) {
            rest /= p;
            ++v;
        }
        (v % 2 == 0 ? r.radE : r.radO) *= p;
    }
    if (rest > 1) r.radO *= rest;
    r.rad = r.radE * r.radO;
    r.radPrime = r.radE * r.radE * r.radO;
    r.irad = m / r.rad;
    r.iradPrime = m / r.radPrime;
    return r;
}

std::vector<long> divisors(long n) {
    check(n >= 1, "divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<long, int>> factorize(long n) {
    check(n >= 1, "factorize: n must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long euler_phi(long n) {
    long out = n;
    for (auto [p, e] : factorize(n)) out -= out / p;
    return out;
}

int valuation(Int n, const Int& p) {
    check(n != 0 && p >= 2, "valuation: need n != 0 and p >= 2");
    int v = 0;
    while (mod_floor(n, p) == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Int isqrt(const Int& n) {
    check(n >= 0, "isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace etaq
