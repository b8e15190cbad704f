#include "etaq/hecke.hpp"

#include "etaq/charclass.hpp"
#include "etaq/ntheory.hpp"

#include <algorithm>

namespace etaq {

namespace {

// base^e for exponent with denominator 1 or 2 (half powers through sqrt_any).
Cyclotomic rat_power(const Int& base, const Rat& e) {
    check(base >= 1, "rat_power: base must be positive");
    Rat e2 = 2 * e;
    internal_check(is_integer(e2), "rat_power: exponent must be a half-integer");
    Int floor_part = rat_floor(e);
    bool has_half = rat_frac(e) != 0;
    Rat scalar(1);
    if (floor_part >= 0) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), mpz_get_ui(floor_part.get_mpz_t()));
        scalar = Rat(p);
    } else {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), mpz_get_ui(Int(-floor_part).get_mpz_t()));
        scalar = make_rat(1, p);
    }
    if (!has_half) return Cyclotomic(scalar);
    // base^(1/2) = sqrt(base); the floor part already accounts for the rest
    return sqrt_any(base) * scalar;
}

Int int_entry(const std::map<long, Rat>& r, long n) {
    auto it = r.find(n);
    if (it == r.end()) return 0;
    check(is_integer(it->second), "integral exponents required");
    return it->second.get_num();
}

std::vector<Int> divisors_of(const Int& l) {
    std::vector<Int> out;
    for (long d : divisors(to_long(l))) out.push_back(d);
    return out;
}

}  // namespace

HeckeContext::HeckeContext(const EtaQuotient& quotient)
    : f(quotient.at_minimal_level()), stats(hecke_stats(f)), k(f.weight()) {}

bool compatible(const Int& l, const std::map<long, Rat>& r, const std::map<long, Rat>& rp, long N) {
    check(l >= 1, "compatible: l must be positive");
    Int sum_r = 0, sum_rp = 0;
    for (const auto& [n, v] : r) sum_r += int_entry(r, n);
    for (const auto& [n, v] : rp) sum_rp += int_entry(rp, n);
    check(sum_r == sum_rp, "compatible: weight mismatch");

    Int xN_r = 0, x1_r = 0, xN_rp = 0, x1_rp = 0, oddprod = 1;
    std::vector<long> keys;
    for (long n : divisors(N)) keys.push_back(n);
    for (long n : keys) {
        Int a = int_entry(r, n), b = int_entry(rp, n);
        xN_r += Int(n) * a;
        x1_r += Int(N / n) * a;
        xN_rp += Int(n) * b;
        x1_rp += Int(N / n) * b;
        if (mod_floor(a - b, 2) == 1) oddprod *= n;
    }
    if (mod_floor(l * x1_r - x1_rp, 24) != 0) return false;
    if (mod_floor(xN_r - l * xN_rp, 24) != 0) return false;
    // l^(2|k'|) * oddprod a perfect square, k' = sum_r / 2
    Int sq = oddprod;
    if (mod_floor(abs(sum_r), 2) == 1) sq *= l;
    return is_perfect_square(sq);
}

UnityRoot psi_factor(const HeckeContext& ctx, const Int& l, const Int& a, const Int& b) {
    long N = ctx.f.level();
    Rat kd = ctx.k + ctx.stats.delta;
    Int d = l / a;
    if (mod_floor(l, 2) == 1) {
        return UnityRoot(-kd / 4 * Rat(d - 1) + kd * Rat((l - 1) * (N - 1)) / 4);
    }
    if (N % 2 == 0) {
        int delta1 = 0;
        if (N % 4 == 0 && !is_integer(ctx.k) && valuation(ctx.stats.Pi, 2) % 2 == 1) delta1 = 1;
        return UnityRoot(-kd / 4 * Rat(a - 1) - Rat(N * (1 + delta1)) * kd / 4 * Rat(b));
    }
    return UnityRoot(Rat(0));
}

Cyclotomic hecke_coeff(const HeckeContext& ctx, const QSeries& f_series, const Int& l, const Rat& n) {
    check(in_L_f(ctx.f, l), "hecke_coeff: l not in L_f");
    long N = ctx.f.level();
    Rat xNp = Rat(ctx.stats.x_N) / 24;
    check(is_integer(n - xNp), "hecke_coeff: n not on the support lattice");

    long twok = to_long(Rat(2 * ctx.k).get_num());
    Cyclotomic total;
    for (const Int& a : divisors_of(l)) {
        if (gcd(a, Int(N)) != 1) continue;
        Int d = l / a;
        Rat m = l * n / (a * a);
        Rat j = m - f_series.offset();
        if (!is_integer(j)) continue;  // off-lattice coefficients are zero
        Rat cf = f_series.coefficient(m);
        if (cf == 0) continue;
        int sym_a = kronecker(a, ctx.stats.Pi);
        if (sym_a == 0) continue;

        Int g = gcd(a, d);
        Cyclotomic bsum;
        for (Int b = 0; b < d; ++b) {
            if (gcd(gcd(a, b), d) != 1) continue;
            int s = kronecker(-Int(N) * b, g);
            int sfac;
            if (twok % 2 == 0)
                sfac = (twok == 0) ? 1 : s * s;
            else
                sfac = s;
            if (sfac == 0) continue;
            UnityRoot root = UnityRoot(Rat(b * d) * (n / Rat(l) - xNp)) * psi_factor(ctx, l, a, b);
            bsum = Cyclotomic::add_scaled_root(bsum, Rat(sfac), root);
        }
        total += bsum * rat_power(a, ctx.k) * (cf * sym_a);
    }
    // prefactor l^(-k/2)
    Cyclotomic pre = is_integer(ctx.k) ? rat_power(l, -ctx.k / 2) : rat_power(isqrt(l), -ctx.k);
    return total * pre;
}

Cyclotomic eigenvalue(const HeckeContext& ctx, const QSeries& f_series, const Int& l) {
    Rat xNp = Rat(ctx.stats.x_N) / 24;
    internal_check(f_series.coefficient(xNp) == 1, "eigenvalue: leading coefficient must be 1");
    return hecke_coeff(ctx, f_series, l, xNp);
}

Cyclotomic closed_coeff(const HeckeContext& ctx, const Int& l) {
    if (ctx.stats.x_N != 0) throw not_applicable_error("closed_coeff: requires x_N = 0");
    long N = ctx.f.level();
    if (!in_L_f(ctx.f, l)) throw not_applicable_error("closed_coeff: l not in L_f");
    for (auto [p, e] : factorize(to_long(l)))
        if (N % p != 0 && e >= 2)
            throw not_applicable_error("closed_coeff: p^2 | l for a prime p not dividing N");
    bool l_odd = mod_floor(l, 2) == 1;
    if (!l_odd && N % 2 == 0) throw not_applicable_error("closed_coeff: l and N both even");

    Rat r1 = -ctx.f.exponent(1);
    Rat kd = ctx.k + ctx.stats.delta;
    Cyclotomic sum;
    for (const Int& a : divisors_of(l)) {
        if (gcd(a, Int(N)) != 1) continue;
        Cyclotomic term = rat_power(a, ctx.k - 1) * Rat(kronecker(a, ctx.stats.Pi));
        if (l_odd) term *= Cyclotomic(UnityRoot(kd * Rat(l - l / a) / 4));
        sum += term;
    }
    return sum * r1;
}

Cyclotomic gauss_sum_direct(const Int& a, const Int& t) {
    check(a >= 1 && a % 2 == 1, "gauss_sum: a must be odd positive");
    Cyclotomic g;
    for (Int b = 0; b < a; ++b)
        g = Cyclotomic::add_scaled_root(g, Rat(kronecker(b, a)), UnityRoot(make_rat(t * b, a)));
    return g;
}

Cyclotomic gauss_sum(const Int& a, const Int& t) {
    check(a >= 1 && a % 2 == 1, "gauss_sum: a must be odd positive");
    RadDecomposition rd = rad_decomposition(a);
    if (mod_floor(t, rd.irad) != 0) return Cyclotomic();
    // eps_a * a / sqrt(radPrime) * (t/iradPrime | radO) * prod_{p | radE} (p - 1 - p (t/irad | p)^2)
    Cyclotomic out(make_rat(a, rd.radPrime));
    out *= sqrt_any(rd.radPrime);
    if (mod_floor(a, 4) == 3) out *= Cyclotomic(UnityRoot(Rat(1, 4)));
    out *= Rat(kronecker(t / rd.iradPrime, rd.radO));
    Int tirad = t / rd.irad;
    for (auto [p, e] : factorize(to_long(rd.radE))) {
        int s = kronecker(tirad, p);
        out *= Rat(p - 1 - p * s * s);
    }
    return out;
}

Cyclotomic CycSeries::coefficient(const Rat& n) const {
    Rat j = n - offset;
    if (j > precision()) throw out_of_precision_error("coefficient index beyond precision");
    if (!is_integer(j) || j < 0) return Cyclotomic();
    return c[to_long(j.get_num())];
}

CycSeries CycSeries::from(const QSeries& s) {
    CycSeries out;
    out.offset = s.offset();
    for (const Rat& q : s.coeffs()) out.c.push_back(Cyclotomic(q));
    return out;
}

CycSeries hecke_general(const CycSeries& f_series, const Int& l, const std::map<long, Rat>& r,
                        const std::map<long, Rat>& rp, long N, int selection) {
    check(compatible(l, r, rp, N), "hecke_general: characters not compatible at this l");
    EtaQuotient source(N, r), target(N, rp);
    Rat k = source.weight();

    Rat out_offset = rat_frac(target.x_N() / 24);
    Rat horizon_in = f_series.offset + f_series.precision();
    Rat mu_max = horizon_in / Rat(l);
    long T_out = to_long(rat_floor(mu_max - out_offset));
    check(T_out >= 0, "hecke_general: insufficient input precision");

    Cyclotomic pre = is_integer(k) ? rat_power(l, -k / 2) : rat_power(isqrt(l), -k);

    std::map<Rat, Cyclotomic> acc;
    for (const Int& a : divisors_of(l)) {
        if (gcd(a, Int(N)) != 1) continue;
        Int d = l / a;
        Cyclotomic factor_a = rat_power(a, k) * pre;
        for (Int b = 0; b < d; ++b) {
            if (gcd(gcd(a, b), d) != 1) continue;
            // auxiliary x, y, z: smallest x >= 0 with (Nd, -Nb+ax) = 1, then
            // extended euclid for (-Nb+ax) y + Nd z = 1
            Int x = 0;
            while (gcd(Int(N) * d, -Int(N) * b + a * x) != 1) ++x;
            if (selection != 0) x += Int(N) * d;  // same residue class mod Nd
            Int u = -Int(N) * b + a * x;
            Int g, y, z;
            mpz_gcdext(g.get_mpz_t(), y.get_mpz_t(), z.get_mpz_t(), u.get_mpz_t(),
                       Int(Int(N) * d).get_mpz_t());
            internal_check(g == 1, "hecke_general: gcdext failed");
            if (selection != 0) {
                // another Bezout pair for the same u
                y += Int(N) * d;
                z -= u;
            }
            SL2Matrix m1(u, z, -Int(N) * d, y);
            SL2Matrix m2(a * y, b * y - d * z, Int(N), x);
            UnityRoot rfac =
                (chi_eval(source, {m1, UnityRoot()}) * chi_eval(target, {m2, UnityRoot()})).inverse();
            for (long j = 0; j <= f_series.precision(); ++j) {
                const Cyclotomic& cf = f_series.c[j];
                if (cf.coefficients().empty()) continue;
                Rat n = f_series.offset + j;
                Rat mu = n * Rat(a) / Rat(d);
                if (mu > mu_max) continue;
                UnityRoot phase = rfac * UnityRoot(n * Rat(b) / Rat(d));
                acc[mu] += cf * Cyclotomic(phase) * factor_a;
            }
        }
    }

    CycSeries out;
    out.offset = out_offset;
    out.c.assign(T_out + 1, Cyclotomic());
    for (auto& [mu, val] : acc) {
        Rat j = mu - out_offset;
        if (!is_integer(j)) {
            internal_check(val.is_zero(), "hecke_general: off-lattice mass did not cancel");
            continue;
        }
        long idx = to_long(j.get_num());
        internal_check(idx >= 0, "hecke_general: exponent below the output lattice");
        if (idx <= T_out) out.c[idx] = val;
    }
    return out;
}

bool multiplicativity_check(const HeckeContext& ctx, const QSeries& f_series, const Int& l1,
                            const Int& l2) {
    check(gcd(l1, l2) == 1, "multiplicativity_check: l1, l2 must be coprime");
    Cyclotomic c1 = eigenvalue(ctx, f_series, l1);
    Cyclotomic c2 = eigenvalue(ctx, f_series, l2);
    Cyclotomic c12 = eigenvalue(ctx, f_series, l1 * l2);
    return (c1 * c2 - c12).is_zero();
}

bool composition_check(const CycSeries& f_series, const Int& l1, const Int& l2,
                       const std::map<long, Rat>& r, const std::map<long, Rat>& rp,
                       const std::map<long, Rat>& rpp, long N) {
    check(gcd(l1, l2) == 1, "composition_check: l1, l2 must be coprime");
    CycSeries step1 = hecke_general(f_series, l1, r, rp, N);
    CycSeries step2 = hecke_general(step1, l2, rp, rpp, N);
    CycSeries direct = hecke_general(f_series, l1 * l2, r, rpp, N);
    long T = std::min(step2.precision(), direct.precision());
    internal_check(step2.offset == direct.offset, "composition_check: lattice mismatch");
    for (long j = 0; j <= T; ++j)
        if (!(step2.c[j] - direct.c[j]).is_zero()) return false;
    return true;
}

}  // namespace etaq
