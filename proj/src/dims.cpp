#include "etaq/dims.hpp"

#include "etaq/charclass.hpp"
#include "etaq/gamma0.hpp"
#include "etaq/ntheory.hpp"
#include "etaq/parallel.hpp"

#include <algorithm>

namespace etaq {

namespace {

Rat query_weight(const DimQuery& q) {
    Rat s(0);
    for (const auto& [n, r] : q.character) s += r;
    return s / 2 + 2 * q.t;
}

}  // namespace

DimResult dimension(const DimQuery& q) {
    check(q.t >= 0, "dimension: t must be nonnegative");
    CurveInvariants inv = invariants(q.N);
    EtaQuotient f(q.N, q.character);
    CuspOrders x = cusp_orders(f);
    Rat k = query_weight(q);

    Rat frac_sum(0);       // sum phi(c,N/c) {x_c/24}
    Int floor_sum(0);      // sum phi(c,N/c) ([x_c/24] + 1)
    long phi_total = 0;
    for (long c : divisors(q.N)) {
        long w = phi_gcd(c, q.N / c);
        phi_total += w;
        frac_sum += w * rat_frac(x.at(c) / 24);
        floor_sum += w * (rat_floor(x.at(c) / 24) + 1);
    }

    bool exact;
    if (q.t >= 1) {
        exact = floor_sum > 0;
    } else {
        // k > 2 - 6 eps2/m - 8 eps3/m - (12/m) sum phi (1 - {x_c/24})
        Rat rhs = Rat(2) - make_rat(6 * inv.eps2 + 8 * inv.eps3, inv.index) -
                  make_rat(12, inv.index) * (Rat(phi_total) - frac_sum);
        exact = k > rhs;
    }

    Rat value = (k - 1) * make_rat(inv.index, 12) + (Rat(1, 4) - rat_frac(make_rat(q.t, 2))) * inv.eps2 +
                (Rat(1, 3) - rat_frac(make_rat(-q.t, 3))) * inv.eps3 + make_rat(phi_total, 2) - frac_sum;
    internal_check(is_integer(value), "dimension: formula value not an integer");

    DimResult res;
    res.status = exact ? DimStatus::Exact : DimStatus::LowerBoundOnly;
    res.value = value.get_num();
    res.upper_bound = k >= 0 ? rat_floor(Rat(inv.index) * k / 12) + 1 : Int(0);
    res.weight = k;
    return res;
}

Int dimension_cusp(const DimQuery& q) {
    DimResult m = dimension(q);
    if (!(m.weight > 2)) throw not_applicable_error("dimension_cusp: requires weight > 2");
    check(m.status == DimStatus::Exact, "dimension_cusp: requires an exact dimension");
    EtaQuotient f(q.N, q.character);
    CuspOrders x = cusp_orders(f);
    Int r_count = 0;
    for (long c : divisors(q.N))
        if (is_integer(x.at(c) / 24)) r_count += phi_gcd(c, q.N / c);
    return m.value - r_count;
}

Int weight2_special(long N, const std::map<long, Rat>& x) {
    CurveInvariants inv = invariants(N);
    Rat total(0);
    for (long c : divisors(N)) {
        check(phi_gcd(c, N / c) == 1, "weight2_special: requires phi(c,N/c) = 1 for all c");
        auto it = x.find(c);
        check(it != x.end(), "weight2_special: missing cusp order");
        total += it->second;
    }
    check(total == 0, "weight2_special: requires sum x_c = 0");
    Int dim = inv.genus - 1 + static_cast<long>(divisors(N).size());
    for (long c : divisors(N)) dim += rat_floor(x.at(c) / 24);
    return dim;
}

std::vector<long> default_table_levels(const Rat& weight) {
    std::vector<long> levels;
    if (weight == Rat(1, 2)) {
        for (long n = 1; n <= 21; ++n) levels.push_back(n);
        for (long n : {24, 25, 27, 32, 36, 49, 50}) levels.push_back(n);
    } else if (weight == 1) {
        for (long n = 1; n <= 22; ++n) levels.push_back(n);
        for (long n = 24; n <= 32; ++n) levels.push_back(n);
        for (long n : {34, 36, 37, 39, 40, 45, 48, 49, 50, 54, 64, 72, 75, 81, 98, 100, 121, 169})
            levels.push_back(n);
    } else if (weight == Rat(3, 2)) {
        for (long n = 1; n <= 529; ++n) levels.push_back(n);
    } else {
        throw not_applicable_error("no default level window for this weight; pass explicit levels");
    }
    return levels;
}

std::vector<TableRow> dimension_table(const Rat& weight, int threads) {
    return dimension_table(weight, default_table_levels(weight), threads);
}

std::vector<TableRow> dimension_table(const Rat& weight, const std::vector<long>& levels, int threads) {
    Rat two_k = 2 * weight;
    check(is_integer(two_k), "dimension_table: 2k must be an integer");
    long twok = to_long(two_k.get_num());

    std::vector<TableRow> rows(levels.size());
    parallel_for_index(levels.size(), threads, [&](std::size_t idx) {
        long N = levels[idx];
        CurveInvariants inv = invariants(N);
        const CharacterTable& tab = classify(N);
        auto divs = divisors(N);
        size_t nd = divs.size();
        std::vector<long> phis(nd);
        for (size_t i = 0; i < nd; ++i) phis[i] = phi_gcd(divs[i], N / divs[i]);

        // integer columns of A_N at n = 1 and at the distinguished divisors
        DivisorMatrix A = an_matrix(N);
        auto column = [&](long n) {
            std::vector<long> col(nd);
            for (size_t i = 0; i < nd; ++i) {
                const Rat& e = A.at(divs[i], n);
                internal_check(is_integer(e), "A_N entry not integral");
                col[i] = to_long(e.get_num());
            }
            return col;
        };
        std::vector<long> col1 = column(1);
        std::vector<std::vector<long>> colb;
        for (long b : tab.basis) colb.push_back(column(b));

        TableRow row;
        row.N = N;
        row.a = tab.count;
        row.v = 0;

        size_t t = tab.basis.size();
        std::vector<long> c(t, 0);
        std::vector<long> x(nd);
        while (true) {
            long csum = 0;
            for (size_t j = 0; j < t; ++j) csum += c[j];
            for (size_t i = 0; i < nd; ++i) {
                long xi = (twok - csum) * col1[i];
                for (size_t j = 0; j < t; ++j) xi += c[j] * colb[j][i];
                x[i] = xi;
            }
            // t = 0 condition, scaled by 24m/12:
            // m(2k) > 4m - 12 eps2 - 16 eps3 - sum phi (24 - x mod 24)
            long gate = 4 * inv.index - 12 * inv.eps2 - 16 * inv.eps3;
            long dim24 = inv.index * twok - 2 * inv.index + 6 * inv.eps2 + 8 * inv.eps3;
            for (size_t i = 0; i < nd; ++i) {
                long xm = ((x[i] % 24) + 24) % 24;
                gate -= phis[i] * (24 - xm);
                dim24 += phis[i] * (12 - xm);
            }
            if (inv.index * twok > gate) {
                internal_check(dim24 % 24 == 0, "table: dimension not an integer");
                long dim = dim24 / 24;
                internal_check(dim >= 0, "table: negative exact dimension");
                ++row.v;
                if (static_cast<size_t>(dim) >= row.d.size()) row.d.resize(dim + 1, 0);
                ++row.d[dim];
            }
            size_t j = 0;
            for (; j < t; ++j) {
                if (++c[j] < tab.delta[j]) break;
                c[j] = 0;
            }
            if (j == t) break;
        }
        rows[idx] = std::move(row);
    });

    std::vector<TableRow> out;
    for (auto& r : rows)
        if (r.v > 0) out.push_back(std::move(r));
    return out;
}

}  // namespace etaq
