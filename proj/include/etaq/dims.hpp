#pragma once

#include "etaq/etaquot.hpp"
#include "etaq/numbers.hpp"

#include <map>
#include <optional>
#include <vector>

namespace etaq {

struct DimQuery {
    long N = 1;
    std::map<long, Rat> character;  // exponent vector (r_n), rationals allowed
    long t = 0;                     // Eisenstein-twist parameter, >= 0
};

enum class DimStatus { Exact, LowerBoundOnly };

struct DimResult {
    DimStatus status;
    Int value;        // the dimension when Exact, else a certified lower bound
    Int upper_bound;  // [mk/12] + 1 for k >= 0, else 0
    Rat weight;
};

// Weight k = (1/2) sum r_n + 2t.  The value is Exact when the applicability
// condition for the given t holds; it is a lower bound in every case.
DimResult dimension(const DimQuery& q);

// dim S_k = dim M_k - #{cusps with x_c = 0 mod 24}, valid for k > 2.
Int dimension_cusp(const DimQuery& q);

// dim M_2 = g - 1 + sigma_0(N) + sum [x_c/24] when all phi(c,N/c) = 1 and
// sum x_c = 0 (weight necessarily 2, exactness via the t = 1 branch).
Int weight2_special(long N, const std::map<long, Rat>& x);

struct TableRow {
    long N;
    Int a;                // number of characters
    long v;               // characters with a computable dimension
    std::vector<long> d;  // d[j] = count of spaces of dimension j
};

// Dimension statistics per level for all characters of integral eta-quotients
// of the given weight; rows with v = 0 are omitted.  The level range defaults
// to the window outside which the t = 0 condition cannot hold for that weight.
std::vector<TableRow> dimension_table(const Rat& weight, int threads = 1);
std::vector<TableRow> dimension_table(const Rat& weight, const std::vector<long>& levels,
                                      int threads = 1);
std::vector<long> default_table_levels(const Rat& weight);

}  // namespace etaq
