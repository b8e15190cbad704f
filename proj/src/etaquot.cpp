#include "etaq/etaquot.hpp"

#include "etaq/ntheory.hpp"

#include <algorithm>
#include <sstream>

namespace etaq {

const Rat& DivisorMatrix::at(long c, long n) const {
    auto ci = std::lower_bound(divs.begin(), divs.end(), c);
    auto ni = std::lower_bound(divs.begin(), divs.end(), n);
    check(ci != divs.end() && *ci == c && ni != divs.end() && *ni == n, "index must divide N");
    return entry[ci - divs.begin()][ni - divs.begin()];
}

DivisorMatrix an_matrix(long N) {
    check(N >= 1, "an_matrix: N must be positive");
    DivisorMatrix A;
    A.N = N;
    A.divs = divisors(N);
    for (long c : A.divs) {
        std::vector<Rat> row;
        for (long n : A.divs) {
            Int g = gcd(Int(n), Int(c));
            row.push_back(make_rat(Int(N) * g * g, gcd(Int(N), Int(c) * Int(c)) * n));
        }
        A.entry.push_back(std::move(row));
    }
    return A;
}

DivisorMatrix an_inverse(long N) {
    check(N >= 1, "an_inverse: N must be positive");
    DivisorMatrix B;
    B.N = N;
    B.divs = divisors(N);
    size_t s = B.divs.size();
    B.entry.assign(s, std::vector<Rat>(s, Rat(0)));

    // global scale 1/N * prod_p p/(p^2-1)
    Rat scale(1, N);
    auto fact = factorize(N);
    for (auto [p, e] : fact) scale *= Rat(p, static_cast<long>(p) * p - 1);

    // b_{p,alpha}(i,j) block entries
    auto block = [](long p, int alpha, int i, int j) -> Int {
        auto powp = [&](int e) {
            Int r = 1;
            for (int t = 0; t < e; ++t) r *= p;
            return r;
        };
        if ((i == 0 && j == 0) || (i == alpha && j == alpha)) return Int(p);
        if (i == j && 0 < i && i < alpha) return (Int(p) * p + 1) * powp(std::min(i, alpha - i) - 1);
        if (i - j == 1 || j - i == 1) return -powp(std::min(j, alpha - j));
        return Int(0);
    };

    for (size_t ni = 0; ni < s; ++ni)
        for (size_t ci = 0; ci < s; ++ci) {
            Int prod = 1;
            for (auto [p, alpha] : fact)
                prod *= block(p, alpha, valuation(Int(B.divs[ni]), p), valuation(Int(B.divs[ci]), p));
            B.entry[ni][ci] = Rat(prod) * scale;
        }
    return B;
}

EtaQuotient::EtaQuotient(long N, std::map<long, Rat> exponents) : N_(N) {
    check(N >= 1, "EtaQuotient: level must be positive");
    for (auto& [n, r] : exponents) {
        check(n >= 1 && N % n == 0, "EtaQuotient: exponent key must divide the level");
        if (r != 0) exps_.emplace(n, r);
    }
}

long EtaQuotient::minimal_level() const {
    Int l = 1;
    for (const auto& [n, r] : exps_) l = lcm(l, Int(n));
    return to_long(l);
}

Rat EtaQuotient::exponent(long n) const {
    auto it = exps_.find(n);
    return it == exps_.end() ? Rat(0) : it->second;
}

Rat EtaQuotient::weight() const {
    Rat s(0);
    for (const auto& [n, r] : exps_) s += r;
    return s / 2;
}

long EtaQuotient::cover_index() const {
    Int D = 1;
    for (const auto& [n, r] : exps_) {
        Rat half = r / 2;
        D = lcm(D, Int(half.get_den()));
    }
    return to_long(D);
}

Rat EtaQuotient::x_N() const {
    Rat s(0);
    for (const auto& [n, r] : exps_) s += n * r;
    return s;
}

bool EtaQuotient::integral_exponents() const {
    for (const auto& [n, r] : exps_)
        if (!is_integer(r)) return false;
    return true;
}

EtaQuotient EtaQuotient::at_level(long M) const {
    check(M % N_ == 0, "at_level: new level must be a multiple");
    return EtaQuotient(M, exps_);
}

EtaQuotient EtaQuotient::at_minimal_level() const { return EtaQuotient(minimal_level(), exps_); }

std::string EtaQuotient::str() const {
    if (exps_.empty()) return "";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, r] : exps_) {
        if (!first) os << " ";
        first = false;
        os << n << "^" << r.get_str();
    }
    return os.str();
}

std::string EtaQuotient::json() const {
    std::ostringstream os;
    os << "{\"N\": " << N_ << ", \"r\": {";
    bool first = true;
    for (const auto& [n, r] : exps_) {
        if (!first) os << ", ";
        first = false;
        os << "\"" << n << "\": \"" << r.get_str() << "\"";
    }
    os << "}}";
    return os.str();
}

EtaQuotient parse_eta_quotient(const std::string& text) {
    std::string norm = text;
    // formal-product rendering uses a middle dot between tokens
    for (const auto& dot : {std::string("\xC2\xB7"), std::string("*")}) {
        size_t pos;
        while ((pos = norm.find(dot)) != std::string::npos) norm.replace(pos, dot.size(), " ");
    }
    std::map<long, Rat> exps;
    size_t i = 0;
    while (i < norm.size()) {
        if (std::isspace(static_cast<unsigned char>(norm[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < norm.size() && !std::isspace(static_cast<unsigned char>(norm[i]))) ++i;
        std::string tok = norm.substr(start, i - start);
        size_t car = tok.find('^');
        if (car == std::string::npos || car == 0 || car + 1 == tok.size())
            throw parse_error("malformed token '" + tok + "', expected n^e", start);
        long n = 0;
        try {
            size_t used = 0;
            n = std::stol(tok.substr(0, car), &used);
            if (used != car) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw parse_error("malformed divisor in '" + tok + "'", start);
        }
        if (n < 1) throw parse_error("divisor must be positive in '" + tok + "'", start);
        Rat e;
        try {
            e = parse_rational(tok.substr(car + 1));
        } catch (const std::exception&) {
            throw parse_error("malformed exponent in '" + tok + "'", start);
        }
        if (exps.count(n)) throw parse_error("duplicate divisor " + std::to_string(n), start);
        exps.emplace(n, e);
    }
    Int N = 1;
    for (const auto& [n, e] : exps)
        if (e != 0) N = lcm(N, Int(n));
    std::map<long, Rat> kept;
    for (const auto& [n, e] : exps)
        if (e != 0) kept.emplace(n, e);
    return EtaQuotient(to_long(N), kept);
}

CuspOrders cusp_orders(const EtaQuotient& f) {
    CuspOrders out;
    out.N = f.level();
    long N = f.level();
    for (long c : divisors(N)) {
        Rat xc(0);
        Int w = gcd(Int(N), Int(c) * Int(c));
        for (const auto& [n, r] : f.exponents()) {
            Int g = gcd(Int(n), Int(c));
            xc += make_rat(Int(N) * g * g, w * n) * r;
        }
        out.x[c] = xc;
    }
    return out;
}

const Rat& CuspOrders::at(long c) const {
    auto it = x.find(c);
    check(it != x.end(), "cusp index must divide N");
    return it->second;
}

std::map<long, Rat> exponents_from_orders(const CuspOrders& x) {
    DivisorMatrix B = an_inverse(x.N);
    std::map<long, Rat> r;
    for (size_t ni = 0; ni < B.divs.size(); ++ni) {
        Rat v(0);
        for (size_t ci = 0; ci < B.divs.size(); ++ci) v += B.entry[ni][ci] * x.at(B.divs[ci]);
        if (v != 0) r.emplace(B.divs[ni], v);
    }
    return r;
}

bool is_holomorphic(const EtaQuotient& f) {
    for (const auto& [c, xc] : cusp_orders(f).x)
        if (xc < 0) return false;
    return true;
}

bool is_cuspform_side(const EtaQuotient& f) {
    for (const auto& [c, xc] : cusp_orders(f).x)
        if (xc <= 0) return false;
    return true;
}

HeckeStats hecke_stats(const EtaQuotient& f) {
    check(f.integral_exponents(), "hecke_stats: integral exponents required");
    HeckeStats st;
    st.weight = f.weight();
    // the operator theory is intrinsic: statistics use the minimal level
    long N = f.minimal_level();
    Int xN = 0, x1 = 0, Pi = 1;
    for (const auto& [n, r] : f.exponents()) {
        Int rn = r.get_num();
        xN += Int(n) * rn;
        x1 += Int(N / n) * rn;
        Int base = N / n;
        Int e = abs(rn);
        for (Int i = 0; i < e; ++i) Pi *= base;
    }
    st.x_N = xN;
    st.x_one = x1;
    st.Pi = Pi;
    Int odd = Pi;
    while (odd % 2 == 0) odd /= 2;
    st.delta = (mod_floor(odd, 4) == 1) ? 0 : 1;
    st.m_f = to_long(24 / gcd(gcd(Int(24), x1), xN));
    return st;
}

bool in_L_f(const EtaQuotient& f, const Int& l) {
    if (l < 1) return false;
    HeckeStats st = hecke_stats(f);
    if (mod_floor(l - 1, st.m_f) != 0) return false;
    if (!is_integer(st.weight)) return is_perfect_square(l);
    return true;
}

}  // namespace etaq
