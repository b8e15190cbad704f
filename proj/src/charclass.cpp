#include "etaq/charclass.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace etaq {

UnityRoot chi_eval(const EtaQuotient& f, const LiftedMatrix& x) {
    long N = f.level();
    check(mod_floor(x.g.c, N) == 0, "chi_eval: matrix not in Gamma_0(N)");
    long D = x.cover > 0 ? x.cover : f.cover_index();
    check(D % f.cover_index() == 0, "chi_eval: cover does not support the quotient");
    check(x.eps.pow(D).exponent() == 0, "chi_eval: eps is not a D-th root of unity");
    Rat Dk = Rat(D) * f.weight();
    internal_check(is_integer(Dk), "chi_eval: D k not integral");
    Rat expo(0);
    for (const auto& [n, r] : f.exponents()) {
        SL2Matrix gn(x.g.a, x.g.b * n, x.g.c / n, x.g.d);
        expo += r * Rat(psi(gn));
    }
    return x.eps.pow(-Dk.get_num()) * UnityRoot(expo / 24);
}

UnityRoot chi_eta_petersson(const SL2Matrix& g, int eps) {
    check(eps == 1 || eps == -1, "chi_eta_petersson: eps must be +-1");
    Rat expo;
    int symbol;
    if (mod_floor(g.c, 2) == 1) {
        symbol = kronecker(g.d, abs(g.c));
        expo = Rat((g.a - 2 * g.d) * g.c - g.b * g.d * (g.c * g.c - 1) + (3 * g.d - 3) * g.c, 24);
    } else {
        symbol = kronecker(g.c, g.d);
        expo = Rat((g.a - 2 * g.d) * g.c - g.b * g.d * (g.c * g.c - 1) + 3 * g.d - 3, 24);
    }
    internal_check(symbol != 0, "chi_eta_petersson: degenerate symbol");
    UnityRoot out{expo};
    if (symbol < 0) out = out * UnityRoot(Rat(1, 2));
    if (eps < 0) out = out * UnityRoot(Rat(1, 2));
    return out;
}

namespace {

Int entry(const std::map<long, Rat>& r, long n) {
    auto it = r.find(n);
    if (it == r.end()) return 0;
    check(is_integer(it->second), "integral exponents required");
    return it->second.get_num();
}

std::vector<long> all_keys(const std::map<long, Rat>& a, const std::map<long, Rat>& b) {
    std::vector<long> keys;
    for (const auto& [n, v] : a) keys.push_back(n);
    for (const auto& [n, v] : b)
        if (!a.count(n)) keys.push_back(n);
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

bool newman_equivalent(const std::map<long, Rat>& r, const std::map<long, Rat>& rp, long N) {
    Int w1 = 0, w2 = 0;
    for (const auto& [n, v] : r) {
        check(N % n == 0, "exponent key must divide N");
        w1 += entry(r, n);
    }
    for (const auto& [n, v] : rp) {
        check(N % n == 0, "exponent key must divide N");
        w2 += entry(rp, n);
    }
    check(w1 == w2, "newman_equivalent: weight mismatch");

    Int c1 = 0, c2 = 0, oddprod = 1;
    for (long n : all_keys(r, rp)) {
        Int d = entry(r, n) - entry(rp, n);
        c1 += Int(n) * d;
        c2 += Int(N / n) * d;
        if (mod_floor(d, 2) == 1) oddprod *= n;
    }
    return mod_floor(c1, 24) == 0 && mod_floor(c2, 24) == 0 && is_perfect_square(oddprod);
}

namespace {

std::vector<long> distinguished_divisors(long N) {
    std::vector<long> B;
    for (auto [p, v] : factorize(N)) {
        if (p == 2) {
            if (v == 1)
                B.push_back(2);
            else if (v == 2) {
                B.push_back(2);
                B.push_back(4);
            } else {
                long q = 1;
                for (int i = 0; i < v - 2; ++i) q *= 2;
                B.push_back(q);
                B.push_back(q * 2);
                B.push_back(q * 4);
            }
        } else if (p == 3) {
            long q = 1;
            for (int i = 0; i < v - 1; ++i) q *= 3;
            if (v == 1)
                B.push_back(3);
            else {
                B.push_back(q);
                B.push_back(q * 3);
            }
        } else {
            B.push_back(p);
        }
    }
    std::sort(B.begin(), B.end());
    return B;
}

// The trivial-character congruence system, split by CRT into a mod-3 linear
// system and a mod-8 system carrying the parity side conditions.
struct CongruenceSystem {
    long N;
    std::vector<long> basis;
    // per-coordinate coefficients of the two 24-congruences
    std::vector<long> coef1;  // n - 1
    std::vector<long> coef2;  // N/n - N
    // parity classes: 0 = none, 1 = must-be-even (p >= 5), 2 = weight beta of
    // the 2-power or 3-power parity constraint
    std::vector<int> parity_kind;
    std::vector<int> parity_weight;

    bool check_assignment(long modulus, const std::vector<int>& c) const {
        size_t t = basis.size();
        long s1 = 0, s2 = 0;
        for (size_t i = 0; i < t; ++i) {
            s1 = (s1 + coef1[i] % modulus * c[i]) % modulus;
            s2 = (s2 + coef2[i] % modulus * c[i]) % modulus;
        }
        if ((s1 % modulus + modulus) % modulus != 0) return false;
        if ((s2 % modulus + modulus) % modulus != 0) return false;
        if (modulus == 8) {
            int w2 = 0, w3 = 0;
            for (size_t i = 0; i < t; ++i) {
                if (c[i] % 2 == 0) continue;
                if (parity_kind[i] == 1) return false;
                if (parity_kind[i] == 2) w2 += parity_weight[i];
                if (parity_kind[i] == 3) w3 += parity_weight[i];
            }
            if (w2 % 2 != 0 || w3 % 2 != 0) return false;
        }
        return true;
    }

    // An assignment mod `modulus` with the given fixed prefix, or empty.
    bool solve_mod(long modulus, const std::vector<int>& fixed, size_t nfixed,
                   std::vector<int>& out) const {
        size_t t = basis.size();
        std::vector<int> c(t, 0);
        for (size_t i = 0; i < nfixed; ++i) c[i] = fixed[i] % modulus;
        size_t free_count = t - nfixed;
        long total = 1;
        for (size_t i = 0; i < free_count; ++i) total *= modulus;
        for (long mask = 0; mask < total; ++mask) {
            long m = mask;
            for (size_t i = nfixed; i < t; ++i) {
                c[i] = m % modulus;
                m /= modulus;
            }
            if (check_assignment(modulus, c)) {
                out = c;
                return true;
            }
        }
        return false;
    }
};

CongruenceSystem make_system(long N, const std::vector<long>& basis) {
    CongruenceSystem sys;
    sys.N = N;
    sys.basis = basis;
    for (long b : basis) {
        sys.coef1.push_back(b - 1);
        sys.coef2.push_back(N / b - N);
        auto f = factorize(b);
        internal_check(f.size() == 1, "distinguished divisor must be a prime power");
        auto [p, beta] = f[0];
        if (p == 2) {
            sys.parity_kind.push_back(2);
            sys.parity_weight.push_back(beta);
        } else if (p == 3) {
            sys.parity_kind.push_back(3);
            sys.parity_weight.push_back(beta);
        } else {
            sys.parity_kind.push_back(1);
            sys.parity_weight.push_back(0);
        }
    }
    return sys;
}

CharacterTable classify_impl(long N, const std::vector<long>& order) {
    CharacterTable tab;
    tab.N = N;
    tab.basis = order;
    tab.count = 1;
    CongruenceSystem sys = make_system(N, order);
    size_t t = order.size();
    std::vector<int> prefix(t, 0);
    for (size_t i = 0; i < t; ++i) {
        long delta = 24;
        std::vector<int> sol3, sol8;
        for (long m = 1; m <= 24; ++m) {
            std::vector<int> fixed(prefix.begin(), prefix.begin() + i);
            fixed.push_back(static_cast<int>(m));
            std::vector<int> s3, s8;
            if (sys.solve_mod(3, fixed, i + 1, s3) && sys.solve_mod(8, fixed, i + 1, s8)) {
                delta = m;
                sol3 = s3;
                sol8 = s8;
                break;
            }
        }
        internal_check(!sol3.empty(), "delta sequence: no solution at 24");
        tab.delta.push_back(delta);
        tab.count *= delta;
        // CRT-combine into an integral lattice generator
        std::map<long, Int> gen;
        Int sum = 0;
        for (size_t j = 0; j < t; ++j) {
            long v = -1;
            for (long cand = 0; cand < 24; ++cand)
                if (cand % 3 == sol3[j] % 3 && cand % 8 == sol8[j] % 8) {
                    v = cand;
                    break;
                }
            internal_check(v >= 0, "crt lift failed");
            if (j == i && v == delta % 24 && delta == 24) v = 24;
            if (j == i) internal_check(v == delta || (delta == 24 && v == 24), "generator pivot mismatch");
            if (v != 0) gen[order[j]] = v;
            sum += v;
        }
        if (sum != 0) gen[1] -= sum;
        tab.generators.push_back(std::move(gen));
    }
    return tab;
}

std::map<std::pair<long, std::vector<long>>, CharacterTable>& table_cache() {
    static std::map<std::pair<long, std::vector<long>>, CharacterTable> cache;
    return cache;
}
std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

CharacterTable classify_with_order(long N, const std::vector<long>& order) {
    check(N >= 1, "classify: N must be positive");
    std::vector<long> expect = distinguished_divisors(N);
    std::vector<long> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    check(sorted == expect, "classify: ordering must permute the distinguished divisors");
    std::lock_guard<std::mutex> lock(table_mutex());
    auto key = std::make_pair(N, order);
    auto it = table_cache().find(key);
    if (it == table_cache().end()) it = table_cache().emplace(key, classify_impl(N, order)).first;
    return it->second;
}

const CharacterTable& classify(long N) {
    check(N >= 1, "classify: N must be positive");
    std::vector<long> order = distinguished_divisors(N);
    std::lock_guard<std::mutex> lock(table_mutex());
    auto key = std::make_pair(N, order);
    auto it = table_cache().find(key);
    if (it == table_cache().end()) it = table_cache().emplace(key, classify_impl(N, order)).first;
    return it->second;
}

std::vector<long> delta_sequence(long N) { return classify(N).delta; }

Int count_characters(long N) { return classify(N).count; }

std::string CharacterTable::json() const {
    std::ostringstream os;
    os << "{\"N\": " << N << ", \"B_N\": [";
    for (size_t i = 0; i < basis.size(); ++i) os << (i ? ", " : "") << basis[i];
    os << "], \"Delta\": [";
    for (size_t i = 0; i < delta.size(); ++i) os << (i ? ", " : "") << delta[i];
    os << "], \"count\": " << count.get_str() << "}";
    return os.str();
}

std::vector<std::map<long, Rat>> representatives(long N, const Rat& k) {
    Rat two_k = 2 * k;
    check(is_integer(two_k), "representatives: 2k must be an integer");
    const CharacterTable& tab = classify(N);
    std::vector<std::map<long, Rat>> out;
    std::vector<long> c(tab.basis.size(), 0);
    while (true) {
        std::map<long, Rat> r;
        Int sum = 0;
        for (size_t j = 0; j < tab.basis.size(); ++j) {
            if (c[j] != 0) r[tab.basis[j]] += Rat(c[j]);
            sum += c[j];
        }
        Rat r1 = Rat(two_k.get_num() - sum);
        if (r1 != 0) r[1] += r1;
        for (auto it = r.begin(); it != r.end();) {
            if (it->second == 0)
                it = r.erase(it);
            else
                ++it;
        }
        out.push_back(std::move(r));
        size_t j = 0;
        for (; j < c.size(); ++j) {
            if (++c[j] < tab.delta[j]) break;
            c[j] = 0;
        }
        if (j == c.size()) break;
    }
    return out;
}

std::map<long, Rat> class_representative(long N, const std::map<long, Rat>& r) {
    Rat k(0);
    for (const auto& [n, v] : r) {
        check(is_integer(v), "class_representative: integral exponents required");
        k += v;
    }
    k /= 2;
    for (auto& rep : representatives(N, k))
        if (newman_equivalent(r, rep, N)) return rep;
    throw std::logic_error("class_representative: no box element equivalent (impossible)");
}

}  // namespace etaq
