#pragma once

#include "etaq/numbers.hpp"

#include <map>
#include <string>
#include <vector>

namespace etaq {

// Divisor-indexed square matrix over Q (row/column index sets are the sorted
// positive divisors of N).
struct DivisorMatrix {
    long N;
    std::vector<long> divs;
    std::vector<std::vector<Rat>> entry;  // entry[i][j] over divs[i], divs[j]

    const Rat& at(long c, long n) const;
};

// x = A_N r for the order/exponent coordinate change.
DivisorMatrix an_matrix(long N);
// Closed-form inverse assembled from Kronecker factors over prime powers.
DivisorMatrix an_inverse(long N);

// The cusp-order vector: x_c = 24 * (order of f at any cusp a/c).
struct CuspOrders {
    long N;
    std::map<long, Rat> x;  // c | N -> x_c

    const Rat& at(long c) const;
};

// f(tau) = prod_{n | N} eta(n tau)^{r_n}, exponents exact rationals.
class EtaQuotient {
  public:
    EtaQuotient() : N_(1) {}
    EtaQuotient(long N, std::map<long, Rat> exponents);

    long level() const { return N_; }
    // lcm of the n with r_n != 0 (1 for the empty product)
    long minimal_level() const;
    const std::map<long, Rat>& exponents() const { return exps_; }
    Rat exponent(long n) const;

    Rat weight() const;        // k = (1/2) sum r_n
    long cover_index() const;  // least D >= 1 with D r_n in 2Z for all n
    Rat x_N() const;           // sum n r_n (24 * order at i-infinity)
    bool integral_exponents() const;

    // Same quotient viewed at an ambient multiple of the level.
    EtaQuotient at_level(long M) const;
    EtaQuotient at_minimal_level() const;

    std::string str() const;   // grammar: "n^e" tokens, divisors ascending
    std::string json() const;

  private:
    long N_;
    std::map<long, Rat> exps_;  // only nonzero entries, keys divide N_
};

// Grammar: whitespace-separated tokens `n^e`, e an integer or `p/q`;
// the middle-dot separator of formal products is accepted as whitespace.
EtaQuotient parse_eta_quotient(const std::string& text);

CuspOrders cusp_orders(const EtaQuotient& f);
std::map<long, Rat> exponents_from_orders(const CuspOrders& x);

bool is_holomorphic(const EtaQuotient& f);
bool is_cuspform_side(const EtaQuotient& f);

// Statistics driving the Wohlfahrt-operator theory (integral exponents only).
struct HeckeStats {
    Rat weight;
    Int x_N;    // sum n r_n
    Int x_one;  // sum (N/n) r_n
    Int Pi;     // prod (N/n)^{|r_n|}
    int delta;  // 0 if the odd part of Pi is 1 mod 4, else 1
    long m_f;   // 24 / gcd(24, x_one, x_N)
};
HeckeStats hecke_stats(const EtaQuotient& f);

// Membership in L_f: l = 1 mod m_f, and l a perfect square when the weight is
// half-integral.
bool in_L_f(const EtaQuotient& f, const Int& l);

}  // namespace etaq
