#include "etaq/eisenstein.hpp"

#include "etaq/etaquot.hpp"
#include "etaq/ntheory.hpp"
#include "etaq/parallel.hpp"
#include "etaq/qseries.hpp"

#include <cmath>
#include <numeric>

namespace etaq {

long EisParams::cover_index() const {
    Int D = lcm(Int(Rat(r2 / 2).get_den()), Int(Rat(r4 / 2).get_den()));
    return to_long(D);
}

bool EisParams::admissible_window() const {
    Rat u = -2 * r2 - 5 * r4, v = -r4;
    return u >= 0 && u < 8 && v >= 0 && v < 8 && u + v > 8;
}

namespace {

Rat p_factor_unchecked(long c4, long d, const Rat& r2, const Rat& r4) {
    Rat s_full = dedekind_sum(-d, c4);
    Rat out(0);
    if (r2 != 0) out += r2 * (12 * dedekind_sum(-d, c4 / 2) - 24 * s_full + 3);
    if (r4 != 0) out += r4 * (12 * dedekind_sum(-d, c4 / 4) - 48 * s_full + 9);
    return out;
}

}  // namespace

Rat p_factor(long c4, long d, const Rat& r2, const Rat& r4) {
    check(c4 >= 4 && c4 % 4 == 0, "p_factor: modulus must be a positive multiple of 4");
    check(gcd(Int(d), Int(c4)) == 1, "p_factor: d must be coprime to the modulus");
    return p_factor_unchecked(c4, d, r2, r4);
}

namespace {

std::complex<double> unit_phase(const Rat& x) {
    double t = 2 * M_PI * rat_frac(x).get_d();
    return {std::cos(t), std::sin(t)};
}

// a(n) sums for all requested n, sharing the P(4c,d) evaluations.  The
// reflection d -> 4c - d flips every Dedekind sum, so P(4c, 4c-d) =
// 2(3 r2 + 9 r4) - P(4c, d) and each pair costs one P evaluation.
std::vector<std::complex<double>> eis_sums(const EisParams& params, const std::vector<long>& ns,
                                           int threads) {
    double kd = params.weight().get_d();
    Rat mirror_const = 2 * (3 * params.r2 + 9 * params.r4);
    std::vector<std::vector<std::complex<double>>> partial(
        params.c_max, std::vector<std::complex<double>>(ns.size(), {0.0, 0.0}));
    parallel_for_index(params.c_max, threads, [&](std::size_t idx) {
        long c = static_cast<long>(idx) + 1;
        long c4 = 4 * c;
        auto& acc = partial[idx];
        for (long d = 1; d < 2 * c; d += 2) {
            if (std::gcd(d, c4) != 1) continue;
            Rat P = p_factor_unchecked(c4, d, params.r2, params.r4);
            std::complex<double> base = unit_phase(-P / 24);
            std::complex<double> mirror = unit_phase((P - mirror_const) / 24);
            for (size_t i = 0; i < ns.size(); ++i) {
                double t = 2 * M_PI * static_cast<double>((ns[i] * d) % c4) / c4;
                std::complex<double> rot{std::cos(t), std::sin(t)};
                acc[i] += base * rot + mirror * std::conj(rot);
            }
        }
        double scale = std::pow(static_cast<double>(c4), -kd);
        for (auto& z : acc) z *= scale;
    });
    std::vector<std::complex<double>> out(ns.size(), {0.0, 0.0});
    for (const auto& block : partial)
        for (size_t i = 0; i < ns.size(); ++i) out[i] += block[i];
    return out;
}

}  // namespace

EisCoeff eis_coeff(const EisParams& params, long n, int threads) {
    Rat k = params.weight();
    if (!(k > 2)) throw not_applicable_error("eis_coeff: requires weight > 2");
    check(n >= 0, "eis_coeff: n must be nonnegative");
    if (n == 0) return {std::complex<double>(1.0, 0.0), 0.0};

    double kd = k.get_d();
    std::complex<double> a_n = eis_sums(params, {n}, threads)[0];
    double prefactor =
        std::pow(2 * M_PI, kd) / std::tgamma(kd) * std::pow(static_cast<double>(n), kd - 1);
    std::complex<double> rot{std::cos(-M_PI * kd / 2), std::sin(-M_PI * kd / 2)};
    double tail = std::pow(4.0, 1 - kd) * std::pow(static_cast<double>(params.c_max), 2 - kd) /
                  (kd - 2) * prefactor;
    return {rot * prefactor * a_n, std::abs(tail)};
}

EisReport verify_identity(const EisParams& params, long n_max, double tol, int threads) {
    if (!params.admissible_window())
        throw not_applicable_error("verify_identity: parameters outside the one-dimensional window");
    Rat k = params.weight();
    Rat r1 = -2 * params.r2 - 4 * params.r4;
    EtaQuotient f(4, {{1, r1}, {2, params.r2}, {4, params.r4}});
    internal_check(f.x_N() == 0, "verify_identity: nonzero order at infinity");
    QSeries series = expand(f, n_max);

    std::vector<long> ns;
    for (long n = 1; n <= n_max; ++n) ns.push_back(n);
    std::vector<std::complex<double>> sums = eis_sums(params, ns, threads);

    double kd = k.get_d();
    std::complex<double> rot{std::cos(-M_PI * kd / 2), std::sin(-M_PI * kd / 2)};
    EisReport rep;
    rep.max_err = 0;
    for (size_t i = 0; i < ns.size(); ++i) {
        long n = ns[i];
        double prefactor =
            std::pow(2 * M_PI, kd) / std::tgamma(kd) * std::pow(static_cast<double>(n), kd - 1);
        std::complex<double> value = rot * prefactor * sums[i];
        double sv = series.coefficient(Rat(n)).get_d();
        double err = std::abs(value - std::complex<double>(sv, 0.0));
        rep.rows.push_back({n, sv, value, err});
        rep.max_err = std::max(rep.max_err, err);
    }
    rep.pass = rep.max_err < tol;
    return rep;
}

}  // namespace etaq
