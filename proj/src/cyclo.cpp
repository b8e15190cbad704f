#include "etaq/cyclo.hpp"

#include "etaq/ntheory.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

namespace etaq {

std::complex<double> UnityRoot::numeric() const {
    double x = exp_.get_d();
    return {std::cos(2 * M_PI * x), std::sin(2 * M_PI * x)};
}

Cyclotomic::Cyclotomic(const UnityRoot& u) {
    mod_ = to_long(Int(u.exponent().get_den()));
    coef_[to_long(Int(u.exponent().get_num()))] = Rat(1);
}

void Cyclotomic::trim() {
    for (auto it = coef_.begin(); it != coef_.end();) {
        if (it->second == 0)
            it = coef_.erase(it);
        else
            ++it;
    }
    if (coef_.empty()) mod_ = 1;
}

Cyclotomic Cyclotomic::lifted(long newmod) const {
    internal_check(newmod % mod_ == 0, "cyclotomic lift: modulus mismatch");
    if (newmod == mod_) return *this;
    Cyclotomic out;
    out.mod_ = newmod;
    long stretch = newmod / mod_;
    for (const auto& [j, q] : coef_) out.coef_[j * stretch] = q;
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long m = to_long(lcm(Int(mod_), Int(o.mod_)));
    Cyclotomic a = lifted(m), b = o.lifted(m);
    for (const auto& [j, q] : b.coef_) {
        auto [it, inserted] = a.coef_.emplace(j, q);
        if (!inserted) it->second += q;
    }
    a.trim();
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& [j, q] : out.coef_) q = -q;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long m = to_long(lcm(Int(mod_), Int(o.mod_)));
    Cyclotomic a = lifted(m), b = o.lifted(m);
    Cyclotomic out;
    out.mod_ = m;
    for (const auto& [j1, q1] : a.coef_)
        for (const auto& [j2, q2] : b.coef_) {
            long j = (j1 + j2) % m;
            auto [it, inserted] = out.coef_.emplace(j, q1 * q2);
            if (!inserted) it->second += q1 * q2;
        }
    out.trim();
    return out;
}

Cyclotomic Cyclotomic::operator*(const Rat& s) const {
    if (s == 0) return Cyclotomic();
    Cyclotomic out = *this;
    for (auto& [j, q] : out.coef_) q *= s;
    return out;
}

Cyclotomic Cyclotomic::add_scaled_root(Cyclotomic acc, const Rat& scale, const UnityRoot& u) {
    if (scale == 0) return acc;
    long m = to_long(lcm(Int(acc.mod_), Int(u.exponent().get_den())));
    acc = acc.lifted(m);
    long j = to_long(Int(u.exponent().get_num()) * (m / to_long(Int(u.exponent().get_den()))));
    auto [it, inserted] = acc.coef_.emplace(j, scale);
    if (!inserted) {
        it->second += scale;
        if (it->second == 0) acc.coef_.erase(it);
    }
    return acc;
}

namespace {

struct Basis {
    // prime-power split of the modulus with mixed-radix strides over phi(q_i)
    std::vector<long> q, p, phi, crt, stride;
    long dim = 1;
};

Basis make_basis(long M) {
    Basis b;
    for (auto [p, e] : factorize(M)) {
        long q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        long phi = q / p * (p - 1);
        // t = (M/q)^{-1} mod q, giving e(j/M) = prod e(j t / q)
        Int t;
        internal_check(mpz_invert(t.get_mpz_t(), Int(M / q).get_mpz_t(), Int(q).get_mpz_t()) != 0,
                       "crt inverse");
        b.q.push_back(q);
        b.p.push_back(p);
        b.phi.push_back(phi);
        b.crt.push_back(to_long(t));
        b.stride.push_back(b.dim);
        b.dim *= phi;
    }
    return b;
}

// Accumulate the tensor-basis coordinates of the value into `out`.
void reduce_to_basis(const Cyclotomic& x, const Basis& b, std::map<long, Rat>& out) {
    std::vector<std::pair<long, int>> parts[2];  // scratch: (basis index, sign)
    for (const auto& [j, coeff] : x.coefficients()) {
        // expansion of e(j/M) over the tensor basis: product over prime powers
        std::vector<std::pair<long, int>> terms{{0, 1}};
        for (size_t i = 0; i < b.q.size(); ++i) {
            long q = b.q[i], p = b.p[i], phi = b.phi[i];
            long u = static_cast<long>((static_cast<unsigned long long>(j % q) * (b.crt[i] % q)) % q);
            auto& next = parts[0];
            next.clear();
            if (u < phi) {
                next.emplace_back(u, 1);
            } else {
                long s = u - phi;  // zeta^u = -sum_t zeta^{s + t p^(a-1)}
                for (long t = 0; t + 1 < p; ++t) next.emplace_back(s + t * (q / p), -1);
            }
            auto& merged = parts[1];
            merged.clear();
            for (auto [i1, s1] : terms)
                for (auto [i2, s2] : next) merged.emplace_back(i1 + i2 * b.stride[i], s1 * s2);
            terms.swap(merged);
        }
        for (auto [idx, sgn] : terms) {
            auto [it, inserted] = out.emplace(idx, sgn > 0 ? coeff : -coeff);
            if (!inserted) it->second += (sgn > 0 ? coeff : -coeff);
        }
    }
}

}  // namespace

bool Cyclotomic::is_zero() const {
    if (coef_.empty()) return true;
    Basis b = make_basis(mod_);
    std::map<long, Rat> coords;
    reduce_to_basis(*this, b, coords);
    for (const auto& [idx, q] : coords)
        if (q != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::canonical() const {
    Basis b = make_basis(mod_);
    std::map<long, Rat> coords;
    reduce_to_basis(*this, b, coords);
    Cyclotomic out;
    out.mod_ = mod_;
    for (const auto& [idx, q] : coords) {
        if (q == 0) continue;
        long rem = idx, j = 0;
        for (size_t i = 0; i < b.q.size(); ++i) {
            long digit = (rem / b.stride[i]) % b.phi[i];
            rem -= digit * b.stride[i];
            j = (j + digit * (mod_ / b.q[i])) % mod_;
        }
        out.coef_[j] += q;
    }
    out.trim();
    return out;
}

bool Cyclotomic::rational_value(Rat& out) const {
    Cyclotomic c = canonical();
    if (c.coef_.empty()) {
        out = 0;
        return true;
    }
    if (c.coef_.size() == 1 && c.coef_.begin()->first == 0) {
        out = c.coef_.begin()->second;
        return true;
    }
    return false;
}

std::complex<double> Cyclotomic::numeric() const {
    std::complex<double> z(0, 0);
    for (const auto& [j, q] : coef_) {
        double x = 2 * M_PI * static_cast<double>(j) / static_cast<double>(mod_);
        z += q.get_d() * std::complex<double>(std::cos(x), std::sin(x));
    }
    return z;
}

std::string Cyclotomic::str() const {
    Cyclotomic c = canonical();
    if (c.coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, q] : c.coef_) {
        if (!first) os << (q > 0 ? " + " : " - ");
        Rat aq = first ? q : Rat(abs(q));
        first = false;
        if (j == 0) {
            os << aq.get_str();
        } else {
            if (aq != 1) os << aq.get_str() << "*";
            long g = to_long(gcd(Int(j), Int(c.mod_)));
            os << "e(" << j / g << "/" << c.mod_ / g << ")";
        }
    }
    return os.str();
}

namespace {

std::map<long, std::vector<Int>>& phi_cache() {
    static std::map<long, std::vector<Int>> cache;
    return cache;
}
std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

std::vector<Int> cyclotomic_polynomial_uncached(long M) {
    // poly = X^M - 1, divided exactly by Phi_d for every proper divisor
    std::vector<Int> poly(M + 1, Int(0));
    poly[0] = -1;
    poly[M] = 1;
    for (long d : divisors(M)) {
        if (d == M) continue;
        std::vector<Int> phi_d = cyclotomic_polynomial(d);
        std::vector<Int> q(poly.size() - phi_d.size() + 1, Int(0));
        std::vector<Int> rem = poly;
        for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
            Int c = rem[i + phi_d.size() - 1];  // leading coeff of phi_d is 1
            q[i] = c;
            if (c == 0) continue;
            for (size_t k = 0; k < phi_d.size(); ++k) rem[i + k] -= c * phi_d[k];
        }
        for (const Int& c : rem) internal_check(c == 0, "cyclotomic division not exact");
        poly = q;
    }
    return poly;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long M) {
    check(M >= 1, "cyclotomic_polynomial: M must be positive");
    {
        std::lock_guard<std::mutex> lock(phi_mutex());
        auto it = phi_cache().find(M);
        if (it != phi_cache().end()) return it->second;
    }
    std::vector<Int> poly = cyclotomic_polynomial_uncached(M);
    std::lock_guard<std::mutex> lock(phi_mutex());
    phi_cache().emplace(M, poly);
    return poly;
}

Cyclotomic sqrt_embed(const Int& a) {
    check(a >= 1 && a % 2 == 1, "sqrt_embed: a must be odd positive");
    long la = to_long(a);
    Cyclotomic g;
    for (long x = 0; x < la; ++x)
        g = Cyclotomic::add_scaled_root(g, Rat(1), UnityRoot(make_rat(static_cast<long>((static_cast<long long>(x) * x) % la), la)));
    // eps_a^{-1}: 1 for a = 1 mod 4, -i for a = 3 mod 4
    if (mod_floor(a, 4) == 3) g = g * Cyclotomic(UnityRoot(Rat(3, 4)));
    return g;
}

Cyclotomic sqrt_any(const Int& m) {
    check(m >= 1, "sqrt_any: m must be positive");
    Int square_free = 1, square_root = 1;
    for (auto [p, e] : factorize(to_long(m))) {
        for (int i = 0; i + 1 < e; i += 2) square_root *= p;
        if (e % 2 == 1) square_free *= p;
    }
    Cyclotomic out{Rat(square_root)};
    if (square_free % 2 == 0) {
        out *= Cyclotomic(UnityRoot(Rat(1, 8))) + Cyclotomic(UnityRoot(Rat(7, 8)));
        square_free /= 2;
    }
    if (square_free > 1) out *= sqrt_embed(square_free);
    return out;
}

}  // namespace etaq
