#pragma once

#include "etaq/numbers.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace etaq {

// e(x) = exp(2 pi i x) with x an exact rational kept reduced in [0,1).
class UnityRoot {
  public:
    UnityRoot() : exp_(0) {}
    explicit UnityRoot(Rat exponent) {
        exponent.canonicalize();
        exp_ = rat_frac(exponent);
    }

    const Rat& exponent() const { return exp_; }
    long order() const { return to_long(Int(exp_.get_den())); }

    UnityRoot operator*(const UnityRoot& o) const { return UnityRoot(exp_ + o.exp_); }
    UnityRoot inverse() const { return UnityRoot(-exp_); }
    UnityRoot pow(const Int& e) const { return UnityRoot(Rat(e) * exp_); }
    bool operator==(const UnityRoot& o) const { return exp_ == o.exp_; }

    std::complex<double> numeric() const;

  private:
    Rat exp_;  // in [0,1), lowest terms
};

// Exact element of Q(zeta_M), stored as a Q-linear combination of e(j/M).
// Zero testing reduces to the tensor basis over the prime-power parts of M,
// i.e. the relation 1 + zeta_p^{p^(a-1)} + ... + zeta_p^{(p-1)p^(a-1)} = 0.
class Cyclotomic {
  public:
    Cyclotomic() : mod_(1) {}
    explicit Cyclotomic(const Rat& r) : mod_(1) {
        if (r != 0) coef_[0] = r;
    }
    explicit Cyclotomic(const Int& n) : Cyclotomic(Rat(n)) {}
    explicit Cyclotomic(long n) : Cyclotomic(Rat(n)) {}
    explicit Cyclotomic(const UnityRoot& u);

    long modulus() const { return mod_; }
    const std::map<long, Rat>& coefficients() const { return coef_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rat& s) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator*=(const Rat& s) { return *this = *this * s; }

    bool is_zero() const;
    bool equals(const Cyclotomic& o) const { return (*this - o).is_zero(); }

    // Rewrites on the tensor basis (coefficients become unique).
    Cyclotomic canonical() const;
    // Value as an exact rational, if it is one (call on canonical form or not).
    bool rational_value(Rat& out) const;

    std::complex<double> numeric() const;
    std::string str() const;  // canonical, deterministic rendering

    static Cyclotomic add_scaled_root(Cyclotomic acc, const Rat& scale, const UnityRoot& u);

  private:
    void trim();
    Cyclotomic lifted(long newmod) const;

    long mod_;
    std::map<long, Rat> coef_;  // exponent j (mod mod_) -> coefficient
};

// M-th cyclotomic polynomial, coefficients ascending by degree; computed by
// exact division of X^M - 1 by the Phi_d of proper divisors d | M.
std::vector<Int> cyclotomic_polynomial(long M);

// Exact sqrt(a) for odd a >= 1 via the classical Gauss sum
// sum_{x mod a} e(x^2/a) = eps_a sqrt(a).
Cyclotomic sqrt_embed(const Int& a);

// sqrt(m) for any m >= 1 (square part split off, sqrt(2) = zeta_8 + zeta_8^-1).
Cyclotomic sqrt_any(const Int& m);

}  // namespace etaq
