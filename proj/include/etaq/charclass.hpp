#pragma once

#include "etaq/cyclo.hpp"
#include "etaq/etaquot.hpp"
#include "etaq/ntheory.hpp"

#include <map>
#include <string>
#include <vector>

namespace etaq {

// An element of the D-fold cover: a matrix of Gamma_0(N) with a root of unity
// whose D-th power is 1.  cover = 0 means the minimal cover of the quotient
// being evaluated; an explicit multiple selects a higher cover (the value
// depends on it unless eps = 1).
struct LiftedMatrix {
    SL2Matrix g;
    UnityRoot eps;
    long cover = 0;
};

// Multiplier system of an eta-quotient evaluated at (g, eps):
// eps^(-D k) e( (1/24) sum_n r_n Psi(a, b n; c/n, d) ).
UnityRoot chi_eval(const EtaQuotient& f, const LiftedMatrix& x);

// Petersson's closed formula for the eta multiplier on the double cover.
UnityRoot chi_eta_petersson(const SL2Matrix& g, int eps);

// Newman's criterion: the characters of two integral-exponent vectors of equal
// weight coincide iff both 24-congruences hold and the odd-difference product
// is a perfect square.
bool newman_equivalent(const std::map<long, Rat>& r, const std::map<long, Rat>& rp, long N);

// Classification data for the characters of level-N integral eta-quotients.
struct CharacterTable {
    long N;
    std::vector<long> basis;   // the distinguished divisors, in solve order
    std::vector<long> delta;   // box dimensions
    Int count;                 // prod delta
    // generators[i] lies in the trivial-character lattice, has zero entries at
    // basis[j] for j < i and value delta[i] at basis[i]; keys are basis
    // divisors plus 1.
    std::vector<std::map<long, Int>> generators;

    std::string json() const;
};

enum class BasisOrdering { Ascending, Given };

const CharacterTable& classify(long N);
CharacterTable classify_with_order(long N, const std::vector<long>& order);

std::vector<long> delta_sequence(long N);
Int count_characters(long N);

// All weight-k character representatives r = sum c_j e_{b_j} + (2k - sum c_j) e_1
// over the box 0 <= c_j < delta_j.  2k must be an integer.
std::vector<std::map<long, Rat>> representatives(long N, const Rat& k);

// Canonical box representative of the class of r (weight preserved).
std::map<long, Rat> class_representative(long N, const std::map<long, Rat>& r);

}  // namespace etaq
