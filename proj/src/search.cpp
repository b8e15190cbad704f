#include "etaq/search.hpp"

#include "etaq/charclass.hpp"
#include "etaq/dims.hpp"
#include "etaq/gamma0.hpp"
#include "etaq/ntheory.hpp"
#include "etaq/parallel.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace etaq {

std::vector<Rat> k_range(long N) {
    check(N >= 1, "k_range: N must be positive");
    long m = invariants(N).index;
    std::vector<Rat> ks;
    for (long twok = 1;; ++twok) {
        Rat k = make_rat(twok, 2);
        // k < 1 + 12/m + 18/sqrt(N), via (k - 1 - 12/m)^2 N < 324 when positive
        Rat c = k - 1 - make_rat(12, m);
        if (c >= 0 && c * c * N >= 324) break;
        ks.push_back(k);
    }
    return ks;
}

long n0_count(const EtaQuotient& f) {
    check(f.integral_exponents(), "n0: integral exponents required");
    long N = f.level();
    long n0 = 0;
    CuspOrders x = cusp_orders(f);
    for (long c : divisors(N))
        if (is_integer(x.at(c) / 24)) n0 += phi_gcd(c, N / c);
    return n0;
}

bool not_admissible_bound(long N, const Rat& k) {
    check(N >= 1, "not_admissible_bound: N must be positive");
    if (N > 400) return true;
    Rat prod(1);
    for (auto [p, e] : factorize(N)) prod *= Rat(p + 1, p);
    // ((k-1)N/12 - 3 sqrt(N)/2) prod >= 1, exactly:
    // lhs := (k-1)N/12 prod - 1 >= (3 prod / 2) sqrt(N)
    Rat lhs = (k - 1) * make_rat(N, 12) * prod - 1;
    if (lhs < 0) return false;
    Rat rhs_coeff = Rat(3, 2) * prod;
    return lhs * lhs >= rhs_coeff * rhs_coeff * N;
}

std::string AdmissibleRecord::json() const {
    std::ostringstream os;
    os << "{\"N\": " << N << ", \"k\": \"" << k.get_str() << "\", \"eta\": \"" << f.str()
       << "\", \"x\": [";
    for (size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << "\"" << x[i].get_str() << "\"";
    os << "], \"type\": \"" << (type == AdmissibleType::I ? "I" : "II") << "\", \"dim\": "
       << dim.get_str() << ", \"n0\": " << n0 << "}";
    return os.str();
}

namespace {

void search_level(long N, const SearchOptions& opts, std::vector<AdmissibleRecord>& out) {
    if (!opts.include_type_II && N > 36) return;  // no type I records above 36
    CurveInvariants inv = invariants(N);
    auto divs = divisors(N);
    size_t nd = divs.size();
    std::vector<long> phis(nd);
    for (size_t i = 0; i < nd; ++i) phis[i] = phi_gcd(divs[i], N / divs[i]);

    // integer forms of A_N and of its inverse: r = (1/den) B x
    DivisorMatrix A = an_matrix(N);
    std::vector<std::vector<long>> Arows(nd, std::vector<long>(nd));
    for (size_t i = 0; i < nd; ++i)
        for (size_t j = 0; j < nd; ++j) {
            internal_check(is_integer(A.entry[i][j]), "A_N entry not integral");
            Arows[i][j] = to_long(A.entry[i][j].get_num());
        }
    DivisorMatrix Binv = an_inverse(N);
    Int den_z = 1;
    for (const auto& row : Binv.entry)
        for (const Rat& e : row) den_z = lcm(den_z, Int(e.get_den()));
    long den = to_long(den_z);
    std::vector<std::vector<long>> B(nd, std::vector<long>(nd));
    for (size_t i = 0; i < nd; ++i)
        for (size_t j = 0; j < nd; ++j) {
            Rat v = Binv.entry[i][j] * den;
            internal_check(is_integer(v), "integer inverse scaling failed");
            B[i][j] = to_long(v.get_num());
        }

    std::vector<Rat> ks = k_range(N);
    if (N == 1 && opts.include_constant) ks.insert(ks.begin(), Rat(0));

    std::set<std::vector<long>> seen;
    std::vector<long> x(nd), z(nd), r(nd);

    // Walking the character classes instead of all cusp-order compositions:
    // with sum phi_c x_c = 2mk fixed by the valence identity, the dimension
    // formula collapses to dim = sum phi_c [x_c/24] + 1 - g, so a class
    // contributes records exactly when its 24-normalized order vector leaves
    // sum phi_c z_c = g (type I) or g + n0 (type II) for the z-part, a tiny
    // composition count.  (The plain composition walk is equivalent but does
    // not terminate in reasonable time for levels like 24 or 36.)
    for (const Rat& k : ks) {
        Rat target_rat = 2 * k * inv.index;
        internal_check(is_integer(target_rat), "2mk not integral");
        long target = to_long(target_rat.get_num());

        auto handle_candidate = [&](AdmissibleType type, long n0, const std::map<long, Rat>& rep) {
            for (size_t i = 0; i < nd; ++i) {
                long acc = 0;
                for (size_t j = 0; j < nd; ++j) acc += B[i][j] * x[j];
                if (acc % den != 0) return;
                r[i] = acc / den;
            }
            Int lc = 1;
            for (size_t i = 0; i < nd; ++i)
                if (r[i] != 0) lc = lcm(lc, Int(divs[i]));
            if (lc != N) return;

            std::map<long, Rat> exps;
            for (size_t i = 0; i < nd; ++i)
                if (r[i] != 0) exps[divs[i]] = Rat(r[i]);
            EtaQuotient f(N, exps);

            // matching orders mod 24 does not pin the class (the square
            // condition may fail); keep the candidate only in its own class
            if (!newman_equivalent(exps, rep, N)) return;

            long dim = type == AdmissibleType::I ? 1 : n0 + 1;
            DimQuery q{N, exps, 0};
            DimResult dr = dimension(q);
            internal_check(dr.status == DimStatus::Exact && dr.value == dim,
                           "search: re-verification failed");
            internal_check(is_holomorphic(f), "search: record not holomorphic");
            internal_check(f.weight() == k, "search: weight mismatch");
            if (type == AdmissibleType::II)
                internal_check(n0_count(f) == n0 && is_cuspform_side(f), "search: type II recheck");
            internal_check(seen.insert(x).second, "search: duplicate record");

            AdmissibleRecord rec;
            rec.f = f;
            rec.k = k;
            rec.N = N;
            for (size_t i = 0; i < nd; ++i) rec.x.push_back(Rat(x[i]));
            rec.type = type;
            rec.dim = dim;
            rec.n0 = n0;
            out.push_back(std::move(rec));
        };

        for (const auto& rep : representatives(N, k)) {
            // 24-normalized cusp orders of the class
            std::vector<long> xbar(nd);
            long phix = 0;
            for (size_t i = 0; i < nd; ++i) {
                long acc = 0;
                for (const auto& [n, v] : rep) {
                    size_t j = std::lower_bound(divs.begin(), divs.end(), n) - divs.begin();
                    acc += Arows[i][j] * to_long(v.get_num());
                }
                xbar[i] = ((acc % 24) + 24) % 24;
                phix += phis[i] * xbar[i];
            }
            // applicability gate (class invariant), scaled by 2m
            long gate = 4 * inv.index - 12 * inv.eps2 - 16 * inv.eps3;
            for (size_t i = 0; i < nd; ++i) gate -= phis[i] * (24 - xbar[i]);
            if (!(target > gate)) continue;

            internal_check((target - phix) % 24 == 0, "search: class valence residue");
            long z_total = (target - phix) / 24;
            if (z_total < 0) continue;

            long n0 = 0;
            for (size_t i = 0; i < nd; ++i)
                if (xbar[i] == 0) n0 += phis[i];

            // enumerate z >= lower bounds with sum phi_i z_i = z_total
            auto enumerate = [&](AdmissibleType type, const std::vector<long>& zmin) {
                std::function<void(size_t, long)> rec_enum = [&](size_t i, long rest) {
                    if (i + 1 == nd) {
                        if (rest < zmin[i] * phis[i] || rest % phis[i] != 0) return;
                        z[i] = rest / phis[i];
                        for (size_t t = 0; t < nd; ++t) x[t] = xbar[t] + 24 * z[t];
                        handle_candidate(type, n0, rep);
                        return;
                    }
                    for (long v = zmin[i]; v * phis[i] <= rest; ++v) {
                        z[i] = v;
                        rec_enum(i + 1, rest - v * phis[i]);
                    }
                };
                rec_enum(0, z_total);
            };

            if (z_total == inv.genus) enumerate(AdmissibleType::I, std::vector<long>(nd, 0));
            // n0 = 0 would mean dim 1, which step (g) already records as type I
            if (opts.include_type_II && k > 2 && n0 >= 1 && z_total == inv.genus + n0) {
                std::vector<long> zmin(nd, 0);
                for (size_t i = 0; i < nd; ++i)
                    if (xbar[i] == 0) zmin[i] = 1;  // cusp side needs x_c > 0
                enumerate(AdmissibleType::II, zmin);
            }
        }
    }
}

}  // namespace

std::vector<AdmissibleRecord> search_admissible(const std::vector<long>& levels,
                                                const SearchOptions& opts) {
    std::vector<std::vector<AdmissibleRecord>> per_level(levels.size());
    parallel_for_index(levels.size(), opts.threads,
                       [&](std::size_t i) { search_level(levels[i], opts, per_level[i]); });
    std::vector<AdmissibleRecord> all;
    for (auto& v : per_level)
        for (auto& r : v) all.push_back(std::move(r));
    std::sort(all.begin(), all.end(), [](const AdmissibleRecord& a, const AdmissibleRecord& b) {
        if (a.N != b.N) return a.N < b.N;
        if (a.k != b.k) return a.k < b.k;
        return a.x < b.x;
    });
    return all;
}

}  // namespace etaq
