#include "etaq/qseries.hpp"

#include "etaq/ntheory.hpp"

#include <algorithm>
#include <sstream>

namespace etaq {

QSeries::QSeries(Rat offset, std::vector<Rat> coeffs) : offset_(std::move(offset)), c_(std::move(coeffs)) {
    check(!c_.empty(), "QSeries: empty coefficient window");
}

Rat QSeries::coefficient(const Rat& n) const {
    Rat j = n - offset_;
    if (j > precision()) throw out_of_precision_error("coefficient index beyond precision");
    if (!is_integer(j) || j < 0) return Rat(0);
    return c_[to_long(j.get_num())];
}

QSeries QSeries::operator*(const QSeries& o) const {
    long T = std::min(precision(), o.precision());
    std::vector<Rat> out(T + 1, Rat(0));
    for (long i = 0; i <= T; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; i + j <= T; ++j) {
            if (o.c_[j] == 0) continue;
            out[i + j] += c_[i] * o.c_[j];
        }
    }
    return QSeries(offset_ + o.offset_, std::move(out));
}

QSeries QSeries::operator/(const QSeries& o) const {
    check(!o.c_.empty() && o.c_[0] != 0, "series division: leading coefficient is zero");
    long T = std::min(precision(), o.precision());
    std::vector<Rat> out(T + 1, Rat(0));
    for (long j = 0; j <= T; ++j) {
        Rat acc = j <= precision() ? c_[j] : Rat(0);
        for (long i = 1; i <= j; ++i) acc -= o.c_[i] * out[j - i];
        out[j] = acc / o.c_[0];
    }
    return QSeries(offset_ - o.offset_, std::move(out));
}

QSeries QSeries::operator+(const QSeries& o) const {
    Rat d = offset_ - o.offset_;
    check(is_integer(d), "series addition: incompatible exponent offsets");
    Rat off = std::min(offset_, o.offset_);
    Rat horizon = std::min(offset_ + precision(), o.offset_ + o.precision());
    long T = to_long(Rat(horizon - off).get_num());
    check(T >= 0, "series addition: empty common window");
    std::vector<Rat> out(T + 1, Rat(0));
    long s1 = to_long(Rat(offset_ - off).get_num());
    long s2 = to_long(Rat(o.offset_ - off).get_num());
    for (long j = 0; j <= T; ++j) {
        if (j - s1 >= 0 && j - s1 <= precision()) out[j] += c_[j - s1];
        if (j - s2 >= 0 && j - s2 <= o.precision()) out[j] += o.c_[j - s2];
    }
    return QSeries(off, std::move(out));
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (o * Rat(-1)); }

QSeries QSeries::operator*(const Rat& s) const {
    QSeries out = *this;
    for (Rat& x : out.c_) x *= s;
    return out;
}

QSeries QSeries::truncated(long T) const {
    check(T >= 0 && T <= precision(), "truncated: bad precision");
    return QSeries(offset_, std::vector<Rat>(c_.begin(), c_.begin() + T + 1));
}

bool QSeries::agrees_with(const QSeries& o) const {
    if (!is_integer(offset_ - o.offset_)) return false;
    Rat lo = std::min(offset_, o.offset_);
    Rat hi = std::min(offset_ + precision(), o.offset_ + o.precision());
    for (Rat n = lo; n <= hi; n += 1)
        if (coefficient(n) != o.coefficient(n)) return false;
    return true;
}

std::string QSeries::json() const {
    std::ostringstream os;
    os << "{\"offset\": \"" << offset_.get_str() << "\", \"coeffs\": [";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << "\"" << c_[i].get_str() << "\"";
    }
    os << "], \"precision\": " << precision() << "}";
    return os.str();
}

std::vector<Rat> log_unit_series(const std::vector<Rat>& u) {
    check(!u.empty() && u[0] == 1, "log: constant term must be 1");
    long T = static_cast<long>(u.size()) - 1;
    std::vector<Rat> L(T + 1, Rat(0));
    for (long m = 1; m <= T; ++m) {
        Rat acc = Rat(m) * u[m];
        for (long j = 1; j < m; ++j) acc -= Rat(j) * L[j] * u[m - j];
        L[m] = acc / m;
    }
    return L;
}

std::vector<Rat> exp_series(const std::vector<Rat>& g) {
    check(!g.empty() && g[0] == 0, "exp: constant term must be 0");
    long T = static_cast<long>(g.size()) - 1;
    std::vector<Rat> E(T + 1, Rat(0));
    E[0] = 1;
    for (long m = 1; m <= T; ++m) {
        Rat acc(0);
        for (long j = 1; j <= m; ++j) acc += Rat(j) * g[j] * E[m - j];
        E[m] = acc / m;
    }
    return E;
}

QSeries pow_rational(const QSeries& s, const Rat& r) {
    check(!s.coeffs().empty() && s.coeffs()[0] == 1, "pow_rational: unit leading coefficient required");
    std::vector<Rat> L = log_unit_series(s.coeffs());
    for (Rat& x : L) x *= r;
    return QSeries(s.offset() * r, exp_series(L));
}

namespace {

// (1 - q^n)(1 - q^2n)... as the sparse pentagonal-number polynomial,
// returned as (exponent, sign) pairs with exponents <= T, ascending.
std::vector<std::pair<long, int>> pentagonal_terms(long n, long T) {
    std::vector<std::pair<long, int>> out{{0, 1}};
    for (long k = 1;; ++k) {
        long g1 = n * (k * (3 * k - 1) / 2);
        long g2 = n * (k * (3 * k + 1) / 2);
        int sign = (k % 2 == 0) ? 1 : -1;
        if (g1 > T && g2 > T) break;
        if (g1 <= T) out.emplace_back(g1, sign);
        if (g2 <= T) out.emplace_back(g2, sign);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void mul_sparse(std::vector<Rat>& u, const std::vector<std::pair<long, int>>& poly) {
    long T = static_cast<long>(u.size()) - 1;
    for (long j = T; j >= 0; --j) {
        Rat acc(0);
        for (const auto& [g, s] : poly) {
            if (g > j) break;
            if (u[j - g] == 0) continue;
            if (s > 0)
                acc += u[j - g];
            else
                acc -= u[j - g];
        }
        u[j] = acc;
    }
}

void div_sparse(std::vector<Rat>& u, const std::vector<std::pair<long, int>>& poly) {
    long T = static_cast<long>(u.size()) - 1;
    // poly has constant term +1
    for (long j = 0; j <= T; ++j) {
        Rat acc = u[j];
        for (const auto& [g, s] : poly) {
            if (g == 0) continue;
            if (g > j) break;
            if (u[j - g] == 0) continue;
            if (s > 0)
                acc -= u[j - g];
            else
                acc += u[j - g];
        }
        u[j] = acc;
    }
}

}  // namespace

QSeries eta_expansion(long n, long T) {
    check(n >= 1, "eta_expansion: scale must be positive");
    check(T >= 0, "eta_expansion: negative precision");
    std::vector<Rat> u(T + 1, Rat(0));
    u[0] = 1;
    mul_sparse(u, pentagonal_terms(n, T));
    return QSeries(make_rat(n, 24), std::move(u));
}

QSeries expand(const EtaQuotient& f, long T) {
    check(T >= 0, "expand: negative precision");
    std::vector<Rat> u(T + 1, Rat(0));
    u[0] = 1;
    QSeries result(f.x_N() / 24, std::move(u));
    std::vector<Rat> acc = result.coeffs();
    for (const auto& [n, r] : f.exponents()) {
        auto poly = pentagonal_terms(n, T);
        if (is_integer(r)) {
            Int e = r.get_num();
            for (Int i = 0; i < abs(e); ++i) {
                if (e > 0)
                    mul_sparse(acc, poly);
                else
                    div_sparse(acc, poly);
            }
        } else {
            std::vector<Rat> core(T + 1, Rat(0));
            core[0] = 1;
            mul_sparse(core, poly);
            QSeries frac = pow_rational(QSeries(Rat(0), std::move(core)), r);
            std::vector<Rat> next(T + 1, Rat(0));
            for (long i = 0; i <= T; ++i) {
                if (acc[i] == 0) continue;
                for (long j = 0; i + j <= T; ++j) next[i + j] += acc[i] * frac.coeffs()[j];
            }
            acc = std::move(next);
        }
    }
    return QSeries(f.x_N() / 24, std::move(acc));
}

}  // namespace etaq
